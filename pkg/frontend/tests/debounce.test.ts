import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { LatestWins, PREVIEW_DEBOUNCE_MS, debounce } from '../src/debounce';

describe('debounce', () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it('collapses a burst of calls into one', () => {
    const fn = vi.fn();
    const debounced = debounce(fn);
    debounced();
    debounced();
    debounced();
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(PREVIEW_DEBOUNCE_MS);
    expect(fn).toHaveBeenCalledTimes(1);
  });

  it('restarts the window on each call', () => {
    const fn = vi.fn();
    const debounced = debounce(fn, 300);
    debounced();
    vi.advanceTimersByTime(200);
    debounced();
    vi.advanceTimersByTime(200);
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(100);
    expect(fn).toHaveBeenCalledTimes(1);
  });

  it('passes through the latest arguments', () => {
    const fn = vi.fn();
    const debounced = debounce(fn, 10);
    debounced('a');
    debounced('b');
    vi.advanceTimersByTime(10);
    expect(fn).toHaveBeenCalledWith('b');
  });
});

describe('LatestWins', () => {
  it('only the newest request delivers a result', async () => {
    const latest = new LatestWins<string>();
    let releaseFirst!: (v: string) => void;
    const first = latest.run(
      () => new Promise<string>((resolve) => { releaseFirst = resolve; }),
    );
    const second = latest.run(() => Promise.resolve('new'));
    expect(await second).toBe('new');
    releaseFirst('stale');
    expect(await first).toBeNull();
  });

  it('aborts the superseded request', async () => {
    const latest = new LatestWins<string>();
    let seen: AbortSignal | undefined;
    const first = latest.run(
      (signal) => new Promise<string>((_resolve, reject) => {
        seen = signal;
        signal.addEventListener('abort', () =>
          reject(new DOMException('aborted', 'AbortError')));
      }),
    );
    const second = latest.run(() => Promise.resolve('ok'));
    expect(await first).toBeNull();
    expect(seen?.aborted).toBe(true);
    expect(await second).toBe('ok');
  });

  it('propagates errors from the current request only', async () => {
    const latest = new LatestWins<string>();
    await expect(latest.run(() => Promise.reject(new Error('boom')))).rejects.toThrow('boom');
  });
});

/**
 * Debouncing and latest-wins request scheduling for the preview panel.
 *
 * Control changes fire at slider speed; the API should see at most one
 * request per 300 ms, and a stale response must never overwrite a newer one.
 */

export const PREVIEW_DEBOUNCE_MS = 300;

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number = PREVIEW_DEBOUNCE_MS,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}

/**
 * Wraps an async request so only the most recent call can deliver a result.
 * Earlier in-flight requests are aborted; their callers get `null`.
 */
export class LatestWins<T> {
  private controller: AbortController | null = null;
  private generation = 0;

  async run(request: (signal: AbortSignal) => Promise<T>): Promise<T | null> {
    this.controller?.abort();
    this.controller = new AbortController();
    const mine = ++this.generation;
    try {
      const result = await request(this.controller.signal);
      return mine === this.generation ? result : null;
    } catch (err) {
      if (err instanceof DOMException && err.name === 'AbortError') return null;
      if (mine !== this.generation) return null;
      throw err;
    }
  }
}

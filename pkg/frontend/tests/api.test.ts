import { describe, expect, it, vi } from 'vitest';

import { ApiClient, ApiError } from '../src/api';
import fixtures from '../fixtures/previews.json';

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

describe('ApiClient.preview', () => {
  it('posts the request body verbatim and returns the payload untouched', async () => {
    const fixture = (fixtures as Array<{ request: any; response: any }>)[1];
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(200, fixture.response));
    const client = new ApiClient('', fetchMock as unknown as typeof fetch);

    const result = await client.preview(fixture.request);
    expect(result).toEqual(fixture.response);

    const [url, init] = fetchMock.mock.calls[0];
    expect(url).toBe('/api/preview');
    expect(JSON.parse(init.body)).toEqual(fixture.request);
  });

  it('raises ApiError with the server code on failure', async () => {
    const fetchMock = vi.fn().mockResolvedValue(
      jsonResponse(413, { code: 'too-many-lines', message: 'at most 200 lines per preview' }),
    );
    const client = new ApiClient('', fetchMock as unknown as typeof fetch);
    const err = await client
      .preview({ tgt_lines: ['x'], scheme: 'random', ratio: 0.5, seed: 1 })
      .catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(413);
    expect((err as ApiError).code).toBe('too-many-lines');
  });
});

describe('ApiClient.jobStatus', () => {
  it('fetches the job endpoint', async () => {
    const status = {
      job_id: 'abc', state: 'done', scheme: 'random', ratio: 0.3,
      seed: 1, pair_count: 10, pairs_done: 10, error: null,
    };
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse(200, status));
    const client = new ApiClient('http://srv', fetchMock as unknown as typeof fetch);
    expect(await client.jobStatus('abc')).toEqual(status);
    expect(fetchMock.mock.calls[0][0]).toBe('http://srv/api/jobs/abc');
  });

  it('maps 404 to ApiError', async () => {
    const fetchMock = vi.fn().mockResolvedValue(
      jsonResponse(404, { code: 'not-found', message: 'unknown job' }),
    );
    const client = new ApiClient('', fetchMock as unknown as typeof fetch);
    await expect(client.jobStatus('nope')).rejects.toMatchObject({ status: 404 });
  });
});

describe('ApiClient.health', () => {
  it('returns false when the server is unreachable, without throwing', async () => {
    const fetchMock = vi.fn().mockRejectedValue(new TypeError('fetch failed'));
    const client = new ApiClient('', fetchMock as unknown as typeof fetch);
    expect(await client.health()).toBe(false);
  });
});

describe('ApiClient.downloadUrl', () => {
  it('builds format-selectable download links', () => {
    const client = new ApiClient('http://srv');
    expect(client.downloadUrl('j1', 'jsonl')).toBe('http://srv/api/jobs/j1/download?format=jsonl');
  });
});

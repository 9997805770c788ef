/**
 * Typed client for the triplet-generation HTTP API.
 *
 * Every string in the responses is passed through untouched: the UI renders
 * SRC/MT/PE exactly as the server sent them and never re-diffs text — the
 * server's edit log and highlight spans are authoritative.
 */

export type Scheme = 'random' | 'semantic' | 'morphemic' | 'syntactic';

export interface EditObj {
  scheme: Scheme;
  range: [number, number];
  original: string[];
  replacement: string[];
}

export interface TripletObj {
  src: string;
  mt: string;
  pe: string;
  edits: EditObj[];
  index: number;
  shortfall: boolean;
}

export interface HighlightObj {
  /** [start, end) character offsets into pe, one per edit, in edit order */
  pe: Array<[number, number]>;
  /** [start, end) character offsets into mt, one per edit, in edit order */
  mt: Array<[number, number]>;
}

export interface PreviewRequest {
  tgt_lines: string[];
  src_lines?: string[];
  scheme: Scheme;
  ratio: number;
  seed: number;
  n?: number;
}

export interface PreviewResponse {
  triplets: TripletObj[];
  highlights: HighlightObj[];
}

export interface JobStatus {
  job_id: string;
  state: 'queued' | 'running' | 'done' | 'failed';
  scheme: Scheme;
  ratio: number;
  seed: number;
  pair_count: number;
  pairs_done: number;
  error: string | null;
}

export interface SubmitResult {
  job_id: string;
  validation: unknown;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

async function readError(res: Response): Promise<ApiError> {
  let code = 'unknown';
  let message = `HTTP ${res.status}`;
  try {
    const body = await res.json();
    if (body && typeof body.code === 'string') code = body.code;
    if (body && typeof body.message === 'string') message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  return new ApiError(res.status, code, message);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  async health(): Promise<boolean> {
    try {
      const res = await this.fetchImpl(`${this.baseUrl}/api/health`);
      return res.ok;
    } catch {
      return false;
    }
  }

  async preview(req: PreviewRequest, signal?: AbortSignal): Promise<PreviewResponse> {
    const res = await this.fetchImpl(`${this.baseUrl}/api/preview`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(req),
      signal,
    });
    if (!res.ok) throw await readError(res);
    return res.json();
  }

  async submitJob(form: FormData): Promise<SubmitResult> {
    const res = await this.fetchImpl(`${this.baseUrl}/api/jobs`, {
      method: 'POST',
      body: form,
    });
    if (!res.ok) throw await readError(res);
    return res.json();
  }

  async jobStatus(jobId: string): Promise<JobStatus> {
    const res = await this.fetchImpl(`${this.baseUrl}/api/jobs/${jobId}`);
    if (!res.ok) throw await readError(res);
    return res.json();
  }

  downloadUrl(jobId: string, format: 'wmt_zip' | 'tsv' | 'jsonl'): string {
    return `${this.baseUrl}/api/jobs/${jobId}/download?format=${format}`;
  }
}

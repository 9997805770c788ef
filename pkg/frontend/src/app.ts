/**
 * Single-page client: a preview panel for interactive scheme/ratio/seed
 * tuning with edit highlighting, and a job dashboard for full generation
 * runs with status polling and downloads.
 */

import { ApiClient, ApiError } from './api';
import type { JobStatus, PreviewResponse, Scheme } from './api';
import { debounce, LatestWins } from './debounce';
import { highlightCount, segment } from './highlight';
import type { Segment } from './highlight';
import { decodeState, encodeState } from './state';
import type { PreviewState } from './state';

const POLL_INTERVAL_MS = 1000;

const SAMPLE_LINES = [
  'The committee approved the new budget on Friday .',
  'A small dog chased the ball across the park .',
  'Researchers published the annual report last week .',
];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderSegments(target: HTMLElement, segments: Segment[], kind: 'mt' | 'pe'): void {
  target.textContent = '';
  for (const s of segments) {
    if (s.editIndex === null) {
      target.appendChild(document.createTextNode(s.text));
    } else {
      const mark = el('mark', `hl hl-${kind}`, s.text);
      mark.dataset.editIndex = String(s.editIndex);
      target.appendChild(mark);
    }
  }
}

export function renderPreview(container: HTMLElement, response: PreviewResponse): void {
  container.textContent = '';
  response.triplets.forEach((t, i) => {
    const spans = response.highlights[i];
    const card = el('div', 'triplet');

    const meta = el('div', 'triplet-meta');
    const mtSegments = segment(t.mt, spans.mt);
    meta.textContent =
      `#${t.index} · ${t.edits.length} edit${t.edits.length === 1 ? '' : 's'}` +
      (t.shortfall ? ' · shortfall' : '');
    card.appendChild(meta);

    if (t.src) {
      const srcRow = el('div', 'row row-src');
      srcRow.appendChild(el('span', 'label', 'SRC'));
      srcRow.appendChild(el('span', 'text', t.src));
      card.appendChild(srcRow);
    }

    const mtRow = el('div', 'row row-mt');
    mtRow.appendChild(el('span', 'label', 'MT'));
    const mtText = el('span', 'text');
    renderSegments(mtText, mtSegments, 'mt');
    mtRow.appendChild(mtText);
    card.appendChild(mtRow);

    const peRow = el('div', 'row row-pe');
    peRow.appendChild(el('span', 'label', 'PE'));
    const peText = el('span', 'text');
    renderSegments(peText, segment(t.pe, spans.pe), 'pe');
    peRow.appendChild(peText);
    card.appendChild(peRow);

    if (highlightCount(mtSegments) !== t.edits.length) {
      // should be unreachable: the API sends one span per edit
      card.appendChild(el('div', 'error', 'highlight/edit count mismatch'));
    }
    container.appendChild(card);
  });
}

interface JobRow {
  status: JobStatus;
  node: HTMLElement;
}

export class App {
  private readonly latest = new LatestWins<PreviewResponse>();
  private readonly jobs = new Map<string, JobRow>();

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly win: Window = window,
  ) {}

  mount(): void {
    const state = decodeState(this.win.location.search);
    this.root.innerHTML = `
      <section id="preview-panel">
        <h2>Preview</h2>
        <textarea id="lines" rows="4" placeholder="One target sentence per line"></textarea>
        <div class="controls">
          <label>Scheme
            <select id="scheme">
              <option>random</option><option>semantic</option>
              <option>morphemic</option><option>syntactic</option>
            </select>
          </label>
          <label>Ratio <input id="ratio" type="range" min="0" max="1" step="0.05">
            <span id="ratio-value"></span>
          </label>
          <label>Seed <input id="seed" type="number" min="0" step="1"></label>
          <button id="load-sample" type="button">Load sample</button>
        </div>
        <div id="preview-error" class="error" hidden></div>
        <div id="triplets"></div>
      </section>
      <section id="job-panel">
        <h2>Generation jobs</h2>
        <form id="job-form">
          <input id="corpus-file" type="file" accept=".tsv,.txt">
          <button type="submit">Run full generation</button>
        </form>
        <div id="job-error" class="error" hidden></div>
        <table id="job-table">
          <thead><tr><th>Job</th><th>Config</th><th>State</th><th>Download</th></tr></thead>
          <tbody></tbody>
        </table>
      </section>`;

    const lines = this.input<HTMLTextAreaElement>('lines');
    const scheme = this.input<HTMLSelectElement>('scheme');
    const ratio = this.input<HTMLInputElement>('ratio');
    const seed = this.input<HTMLInputElement>('seed');

    lines.value = state.lines.join('\n');
    scheme.value = state.scheme;
    ratio.value = String(state.ratio);
    seed.value = String(state.seed);
    this.syncRatioLabel();

    const refresh = debounce(() => void this.refreshPreview());
    for (const node of [lines, scheme, seed]) node.addEventListener('input', refresh);
    ratio.addEventListener('input', () => {
      this.syncRatioLabel();
      refresh();
    });

    this.input<HTMLButtonElement>('load-sample').addEventListener('click', () => {
      lines.value = SAMPLE_LINES.join('\n');
      refresh();
    });

    this.input<HTMLFormElement>('job-form').addEventListener('submit', (e) => {
      e.preventDefault();
      void this.submitJob();
    });

    if (state.lines.length > 0) void this.refreshPreview();
  }

  private syncRatioLabel(): void {
    this.input<HTMLElement>('ratio-value').textContent =
      this.input<HTMLInputElement>('ratio').value;
  }

  currentState(): PreviewState {
    return {
      scheme: this.input<HTMLSelectElement>('scheme').value as Scheme,
      ratio: Number(this.input<HTMLInputElement>('ratio').value),
      seed: Number(this.input<HTMLInputElement>('seed').value) || 0,
      lines: this.input<HTMLTextAreaElement>('lines')
        .value.split('\n')
        .filter((l) => l.trim() !== ''),
    };
  }

  async refreshPreview(): Promise<void> {
    const state = this.currentState();
    const errorBox = this.input<HTMLElement>('preview-error');
    const triplets = this.input<HTMLElement>('triplets');
    if (state.lines.length === 0) {
      triplets.textContent = '';
      return;
    }
    this.win.history.replaceState(null, '', `?${encodeState(state)}`);
    try {
      const response = await this.latest.run((signal) =>
        this.api.preview(
          { tgt_lines: state.lines, scheme: state.scheme, ratio: state.ratio, seed: state.seed },
          signal,
        ),
      );
      if (response === null) return; // superseded by a newer request
      errorBox.hidden = true;
      renderPreview(triplets, response);
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : 'Connection error — is the server running?';
    }
  }

  async submitJob(): Promise<void> {
    const fileInput = this.input<HTMLInputElement>('corpus-file');
    const errorBox = this.input<HTMLElement>('job-error');
    const file = fileInput.files?.[0];
    if (!file) {
      errorBox.hidden = false;
      errorBox.textContent = 'Choose a two-column TSV corpus first.';
      return;
    }
    const state = this.currentState();
    const form = new FormData();
    form.set('corpus_tsv', file);
    form.set('scheme', state.scheme);
    form.set('ratio', String(state.ratio));
    form.set('seed', String(state.seed));
    try {
      const { job_id } = await this.api.submitJob(form);
      errorBox.hidden = true;
      this.addJobRow(job_id);
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : 'Connection error — is the server running?';
    }
  }

  private addJobRow(jobId: string): void {
    const tbody = this.root.querySelector('#job-table tbody') as HTMLElement;
    const row = el('tr');
    tbody.prepend(row);
    this.jobs.set(jobId, { status: null as unknown as JobStatus, node: row });
    void this.pollJob(jobId);
  }

  private async pollJob(jobId: string): Promise<void> {
    const entry = this.jobs.get(jobId);
    if (!entry) return;
    try {
      const status = await this.api.jobStatus(jobId);
      entry.status = status;
      this.renderJobRow(jobId, entry);
      if (status.state === 'queued' || status.state === 'running') {
        this.win.setTimeout(() => void this.pollJob(jobId), POLL_INTERVAL_MS);
      }
    } catch {
      this.win.setTimeout(() => void this.pollJob(jobId), POLL_INTERVAL_MS);
    }
  }

  private renderJobRow(jobId: string, entry: JobRow): void {
    const s = entry.status;
    entry.node.textContent = '';
    entry.node.appendChild(el('td', 'job-id', jobId));
    entry.node.appendChild(el('td', 'job-config', `${s.scheme} @ ${s.ratio} seed ${s.seed}`));
    const stateCell = el('td', `job-state job-${s.state}`);
    stateCell.textContent = s.state === 'failed' && s.error ? `failed: ${s.error}` : s.state;
    if (s.state === 'running' && s.pair_count > 0) {
      stateCell.textContent = `running ${s.pairs_done}/${s.pair_count}`;
    }
    entry.node.appendChild(stateCell);
    const dl = el('td', 'job-downloads');
    if (s.state === 'done') {
      for (const format of ['wmt_zip', 'tsv', 'jsonl'] as const) {
        const a = el('a', 'download', format);
        a.href = this.api.downloadUrl(jobId, format);
        dl.appendChild(a);
      }
    }
    entry.node.appendChild(dl);
  }

  private input<T extends HTMLElement>(id: string): T {
    return this.root.querySelector(`#${id}`) as T;
  }
}

export function main(): void {
  const root = document.getElementById('app');
  if (root) new App(root, new ApiClient()).mount();
}

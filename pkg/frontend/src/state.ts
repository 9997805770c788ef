/**
 * URL-encoded preview state.
 *
 * Everything needed to reproduce a preview — scheme, ratio, seed and the
 * input lines — round-trips through the query string, so a preview can be
 * shared as a link.
 */

import type { Scheme } from './api';

export interface PreviewState {
  scheme: Scheme;
  ratio: number;
  seed: number;
  lines: string[];
}

const SCHEMES: Scheme[] = ['random', 'semantic', 'morphemic', 'syntactic'];

export const DEFAULT_STATE: PreviewState = {
  scheme: 'random',
  ratio: 0.3,
  seed: 42,
  lines: [],
};

export function encodeState(state: PreviewState): string {
  const params = new URLSearchParams();
  params.set('scheme', state.scheme);
  params.set('ratio', String(state.ratio));
  params.set('seed', String(state.seed));
  if (state.lines.length > 0) params.set('lines', state.lines.join('\n'));
  return params.toString();
}

export function decodeState(query: string): PreviewState {
  const params = new URLSearchParams(query);
  const state: PreviewState = { ...DEFAULT_STATE, lines: [] };

  const scheme = params.get('scheme');
  if (scheme && (SCHEMES as string[]).includes(scheme)) state.scheme = scheme as Scheme;

  const ratio = Number(params.get('ratio'));
  if (params.has('ratio') && Number.isFinite(ratio) && ratio >= 0 && ratio <= 1) {
    state.ratio = ratio;
  }

  const seed = Number(params.get('seed'));
  if (params.has('seed') && Number.isInteger(seed) && seed >= 0) state.seed = seed;

  const lines = params.get('lines');
  if (lines !== null) state.lines = lines.split('\n').filter((l) => l.trim() !== '');

  return state;
}

import { describe, expect, it } from 'vitest';

import { DEFAULT_STATE, decodeState, encodeState } from '../src/state';
import type { PreviewState } from '../src/state';
import fixtures from '../fixtures/previews.json';

describe('URL state round-trip', () => {
  it('decode(encode(state)) is the identity', () => {
    const state: PreviewState = {
      scheme: 'semantic',
      ratio: 0.35,
      seed: 1234,
      lines: ['The cat sat .', 'A naïve café — déjà vu .'],
    };
    expect(decodeState(encodeState(state))).toEqual(state);
  });

  it('reproduces an identical preview request for every fixture', () => {
    for (const { request } of fixtures as Array<{ request: any }>) {
      const state: PreviewState = {
        scheme: request.scheme,
        ratio: request.ratio,
        seed: request.seed,
        lines: request.tgt_lines,
      };
      const decoded = decodeState(encodeState(state));
      // the request body built from the decoded state is byte-identical
      expect({
        tgt_lines: decoded.lines,
        scheme: decoded.scheme,
        ratio: decoded.ratio,
        seed: decoded.seed,
      }).toEqual({
        tgt_lines: request.tgt_lines,
        scheme: request.scheme,
        ratio: request.ratio,
        seed: request.seed,
      });
    }
  });

  it('falls back to defaults on missing or invalid params', () => {
    expect(decodeState('')).toEqual({ ...DEFAULT_STATE, lines: [] });
    expect(decodeState('scheme=bogus&ratio=7&seed=-3').scheme).toBe(DEFAULT_STATE.scheme);
    expect(decodeState('ratio=7').ratio).toBe(DEFAULT_STATE.ratio);
    expect(decodeState('seed=-3').seed).toBe(DEFAULT_STATE.seed);
  });

  it('drops blank lines when decoding', () => {
    const decoded = decodeState(encodeState({
      scheme: 'random', ratio: 0.1, seed: 1, lines: ['a .', '', '  ', 'b .'],
    }));
    expect(decoded.lines).toEqual(['a .', 'b .']);
  });

  it('survives a leading question mark, as in location.search', () => {
    const q = `?${encodeState({ scheme: 'syntactic', ratio: 1, seed: 9, lines: ['x y .'] })}`;
    expect(decodeState(q).scheme).toBe('syntactic');
    expect(decodeState(q).lines).toEqual(['x y .']);
  });
});

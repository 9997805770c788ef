import { describe, expect, it } from 'vitest';

import type { HighlightObj, PreviewResponse, TripletObj } from '../src/api';
import { renderPreview } from '../src/app';
import { highlightCount, joinSegments, segment } from '../src/highlight';
import fixtures from '../fixtures/previews.json';

interface Fixture {
  request: { scheme: string; ratio: number; seed: number; tgt_lines: string[] };
  response: PreviewResponse;
}

const scripted = fixtures as Fixture[];

describe('segment', () => {
  it('splits text around spans', () => {
    const segs = segment('the quick brown fox', [[4, 9], [16, 19]]);
    expect(segs).toEqual([
      { text: 'the ', editIndex: null },
      { text: 'quick', editIndex: 0 },
      { text: ' brown ', editIndex: null },
      { text: 'fox', editIndex: 1 },
    ]);
  });

  it('handles empty spans list', () => {
    expect(segment('hello', [])).toEqual([{ text: 'hello', editIndex: null }]);
  });

  it('rejects overlapping spans', () => {
    expect(() => segment('abcdef', [[0, 3], [2, 5]])).toThrow(RangeError);
  });

  it('rejects out-of-bounds spans', () => {
    expect(() => segment('abc', [[0, 9]])).toThrow(RangeError);
  });
});

describe('scripted preview fixtures', () => {
  it('has 20 scripted previews covering all schemes', () => {
    expect(scripted).toHaveLength(20);
    const schemes = new Set(scripted.map((f) => f.request.scheme));
    expect(schemes).toEqual(new Set(['random', 'semantic', 'morphemic', 'syntactic']));
  });

  it('highlight spans exactly match server edit ranges', () => {
    for (const { response } of scripted) {
      response.triplets.forEach((t: TripletObj, i: number) => {
        const spans: HighlightObj = response.highlights[i];
        expect(spans.mt).toHaveLength(t.edits.length);
        expect(spans.pe).toHaveLength(t.edits.length);

        const mtSegs = segment(t.mt, spans.mt);
        const peSegs = segment(t.pe, spans.pe);
        // segmentation is lossless
        expect(joinSegments(mtSegs)).toBe(t.mt);
        expect(joinSegments(peSegs)).toBe(t.pe);
        // one rendered highlight per edit
        expect(highlightCount(mtSegs)).toBe(t.edits.length);
        expect(highlightCount(peSegs)).toBe(t.edits.length);

        // each highlighted slice is the edit's token sequence
        t.edits.forEach((edit, j) => {
          const mtSlice = t.mt.slice(...spans.mt[j]);
          const peSlice = t.pe.slice(...spans.pe[j]);
          for (const token of edit.replacement) expect(mtSlice).toContain(token);
          for (const token of edit.original) expect(peSlice).toContain(token);
          expect(mtSlice.startsWith(edit.replacement[0])).toBe(true);
          expect(mtSlice.endsWith(edit.replacement[edit.replacement.length - 1])).toBe(true);
          expect(peSlice.startsWith(edit.original[0])).toBe(true);
          expect(peSlice.endsWith(edit.original[edit.original.length - 1])).toBe(true);
        });
      });
    }
  });

  it('ratio-0 previews have zero highlights and MT identical to PE', () => {
    const zero = scripted.filter((f) => f.request.ratio === 0);
    expect(zero.length).toBeGreaterThanOrEqual(4);
    for (const { response } of zero) {
      for (const t of response.triplets) expect(t.mt).toBe(t.pe);
      for (const h of response.highlights) {
        expect(h.mt).toEqual([]);
        expect(h.pe).toEqual([]);
      }
    }
  });
});

describe('renderPreview', () => {
  it('renders one <mark> per edit with the exact span text', () => {
    const fixture = scripted.find(
      (f) => f.request.ratio > 0 &&
        f.response.triplets.some((t) => t.edits.length > 0),
    )!;
    const container = document.createElement('div');
    renderPreview(container, fixture.response);

    const cards = container.querySelectorAll('.triplet');
    expect(cards).toHaveLength(fixture.response.triplets.length);
    fixture.response.triplets.forEach((t, i) => {
      const spans = fixture.response.highlights[i];
      const mtMarks = cards[i].querySelectorAll('mark.hl-mt');
      expect(mtMarks).toHaveLength(t.edits.length);
      mtMarks.forEach((mark, j) => {
        expect(mark.textContent).toBe(t.mt.slice(...spans.mt[j]));
      });
      // displayed strings are byte-equal to the API payload
      expect(cards[i].querySelector('.row-mt .text')!.textContent).toBe(t.mt);
      expect(cards[i].querySelector('.row-pe .text')!.textContent).toBe(t.pe);
    });
  });
});

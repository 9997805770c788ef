/**
 * Turns server-reported highlight spans into renderable text segments.
 *
 * The server sends, per triplet, one [start, end) character span per edit
 * for both the MT and PE strings.  This module only slices the text at
 * those offsets; it never computes its own diff, so the rendered highlights
 * cannot contradict the server's edit log.
 */

export interface Segment {
  text: string;
  /** index into the triplet's edit list, or null for unedited text */
  editIndex: number | null;
}

/**
 * Slice `text` into plain and highlighted segments.
 *
 * Spans must be sorted, non-overlapping and within bounds — exactly what
 * the API guarantees.  Throws otherwise rather than rendering a lie.
 */
export function segment(text: string, spans: Array<[number, number]>): Segment[] {
  const out: Segment[] = [];
  let cursor = 0;
  spans.forEach(([start, end], i) => {
    if (start < cursor || end < start || end > text.length) {
      throw new RangeError(`bad span [${start}, ${end}) at cursor ${cursor}`);
    }
    if (start > cursor) out.push({ text: text.slice(cursor, start), editIndex: null });
    out.push({ text: text.slice(start, end), editIndex: i });
    cursor = end;
  });
  if (cursor < text.length) out.push({ text: text.slice(cursor), editIndex: null });
  return out;
}

/** Concatenating the segments must reproduce the input byte-for-byte. */
export function joinSegments(segments: Segment[]): string {
  return segments.map((s) => s.text).join('');
}

export function highlightCount(segments: Segment[]): number {
  return segments.filter((s) => s.editIndex !== null).length;
}

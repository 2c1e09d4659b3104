/**
 * Unicode scalar-value arithmetic.
 *
 * Engine offsets count scalar values (code points), never UTF-16 code
 * units, so a surrogate-pair emoji occupies exactly one position. JS
 * strings index by UTF-16 units; the string iterator yields code points,
 * which is what everything here builds on.
 */

export function scalarLength(text: string): number {
  let n = 0;
  for (const _ of text) n += 1;
  return n;
}

export function scalarSlice(text: string, start: number, end: number): string {
  let out = "";
  let index = 0;
  for (const ch of text) {
    if (index >= end) break;
    if (index >= start) out += ch;
    index += 1;
  }
  return out;
}

/** Scalar offset of the position `utf16Offset` UTF-16 units into `text`. */
export function utf16ToScalar(text: string, utf16Offset: number): number {
  return scalarLength(text.slice(0, utf16Offset));
}

/** Code-point lexicographic comparison (UTF-16 `<` misorders astral chars). */
export function compareScalar(a: string, b: string): number {
  const as = Array.from(a);
  const bs = Array.from(b);
  const n = Math.min(as.length, bs.length);
  for (let i = 0; i < n; i += 1) {
    const diff = (as[i].codePointAt(0) ?? 0) - (bs[i].codePointAt(0) ?? 0);
    if (diff !== 0) return diff;
  }
  return as.length - bs.length;
}

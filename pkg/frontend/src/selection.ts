/**
 * Rendered-selection to scalar-offset conversion.
 *
 * The engine accepts scalar-value offsets only; DOM ranges speak UTF-16
 * code units over rendered text nodes. This module is the whole boundary:
 * locate the sentence element the selection lives in, measure the UTF-16
 * prefix with a probe range, then recount it in scalar values.
 */

import { scalarSlice, utf16ToScalar } from "./scalar";

export interface PendingSpan {
  sentenceId: number;
  start: number;
  end: number;
  text: string;
}

function sentenceHost(node: Node | null, container: Element): Element | null {
  let current: Node | null = node;
  while (current && current !== container) {
    if (current.nodeType === 1 && (current as Element).hasAttribute("data-sentence-id")) {
      return current as Element;
    }
    current = current.parentNode;
  }
  return null;
}

function utf16OffsetWithin(root: Node, node: Node, offset: number): number {
  const doc = root.ownerDocument;
  if (!doc) return 0;
  const probe = doc.createRange();
  probe.selectNodeContents(root);
  probe.setEnd(node, offset);
  return probe.toString().length;
}

/**
 * Map a DOM range to a sentence-local scalar span, or null when the
 * selection is collapsed, outside the list, or crosses sentences.
 */
export function rangeToSpan(range: Range, container: Element): PendingSpan | null {
  if (range.collapsed) return null;
  const startHost = sentenceHost(range.startContainer, container);
  const endHost = sentenceHost(range.endContainer, container);
  if (!startHost || startHost !== endHost) return null;
  const textElement = startHost.querySelector(".sentence-text");
  if (
    !textElement ||
    !textElement.contains(range.startContainer) ||
    !textElement.contains(range.endContainer)
  ) {
    return null;
  }
  const full = textElement.textContent ?? "";
  const start = utf16ToScalar(full, utf16OffsetWithin(textElement, range.startContainer, range.startOffset));
  const end = utf16ToScalar(full, utf16OffsetWithin(textElement, range.endContainer, range.endOffset));
  if (start >= end) return null;
  return {
    sentenceId: Number(startHost.getAttribute("data-sentence-id")),
    start,
    end,
    text: scalarSlice(full, start, end),
  };
}

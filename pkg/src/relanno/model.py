"""Core value types and span arithmetic.

Offsets everywhere count Unicode scalar values (what Python string
indexing counts), never encoded bytes. That makes offsets identically
computable here and in a browser-side UI regardless of encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfBounds


@dataclass(frozen=True)
class Span:
    """Half-open character interval [start, end) within one sentence.

    Validity against the owning sentence (0 <= start < end <= len) is
    checked at the point of use, see `span_text`.
    """

    start: int
    end: int


@dataclass(frozen=True)
class Sentence:
    """One annotation unit: a dense session-unique id plus its raw text.

    Text is non-blank and carries no newline (newline is the record
    separator on ingestion).
    """

    id: int
    text: str


@dataclass(frozen=True)
class RelationLabel:
    """One relation name from the user-supplied closed set.

    Names compare case-sensitively; path-like names such as
    "/business/person/company" stay distinct under any casing.
    """

    name: str


@dataclass(frozen=True)
class EntityMention:
    """A contiguous character span within one sentence, with its surface text.

    Invariant: text == sentence.text[span.start:span.end].
    """

    id: int
    sentence_id: int
    span: Span
    text: str


@dataclass(frozen=True)
class RelationMention:
    """A directed entity pair plus the relation names annotated on it.

    (a, b) and (b, a) are distinct mentions. relation_names preserves
    insertion order, is non-empty, and holds no duplicates.
    """

    sentence_id: int
    arg1: int
    arg2: int
    relation_names: tuple[str, ...]


def span_text(sentence: Sentence, span: Span) -> str:
    """Return the character slice of `sentence` denoted by `span`.

    Raises OutOfBounds unless 0 <= start < end <= len(sentence.text).
    """
    if span.start < 0 or span.start >= span.end or span.end > len(sentence.text):
        raise OutOfBounds(
            f"span ({span.start}, {span.end}) is not a valid slice of a "
            f"{len(sentence.text)}-character sentence"
        )
    return sentence.text[span.start : span.end]


def spans_overlap(a: Span, b: Span) -> bool:
    """True iff the two half-open intervals share at least one position."""
    return max(a.start, b.start) < min(a.end, b.end)

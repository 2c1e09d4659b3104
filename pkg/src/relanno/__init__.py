"""Relation-triplet annotation toolkit.

A portable in-memory engine for the four-stage annotation workflow
(sentences, relation set, entity spans, pair-relation mapping), the
triplet JSON output schema, brat standoff export, session validation,
and density/timing statistics, plus a headless CLI.
"""

from .errors import (
    AnnotationError,
    DuplicateSpan,
    EmptyInput,
    InvalidSession,
    MalformedLog,
    OutOfBounds,
    ParseError,
    SchemaError,
    SelfPair,
    SpanMismatch,
    UnknownEntity,
    UnknownLabel,
    UnknownSentence,
)
from .model import (
    EntityMention,
    RelationLabel,
    RelationMention,
    Sentence,
    Span,
    span_text,
    spans_overlap,
)
from .session import AnnotationSession, Event, EventLog
from .serialization import export, export_brat, import_session
from .metrics import (
    ERROR,
    WARNING,
    CorpusStats,
    Finding,
    TimingStats,
    corpus_stats,
    timing_stats,
    validate_session,
)
from .demo import build_demo_session

__all__ = [
    "AnnotationError",
    "AnnotationSession",
    "CorpusStats",
    "DuplicateSpan",
    "EmptyInput",
    "ERROR",
    "EntityMention",
    "Event",
    "EventLog",
    "Finding",
    "InvalidSession",
    "MalformedLog",
    "OutOfBounds",
    "ParseError",
    "RelationLabel",
    "RelationMention",
    "SchemaError",
    "SelfPair",
    "Sentence",
    "Span",
    "SpanMismatch",
    "TimingStats",
    "UnknownEntity",
    "UnknownLabel",
    "UnknownSentence",
    "WARNING",
    "build_demo_session",
    "corpus_stats",
    "export",
    "export_brat",
    "import_session",
    "span_text",
    "spans_overlap",
    "timing_stats",
    "validate_session",
]

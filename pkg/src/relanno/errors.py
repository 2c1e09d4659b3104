"""Exception types raised across the toolkit.

Everything derives from AnnotationError so callers can catch the whole
family at an API boundary (the CLI maps them onto exit codes).
"""


class AnnotationError(Exception):
    """Base class for all errors raised by this package."""


class OutOfBounds(AnnotationError):
    """Span offsets do not denote a valid slice of the owning sentence."""


class EmptyInput(AnnotationError):
    """Ingestion input contained no non-blank line."""


class UnknownSentence(AnnotationError):
    """Referenced sentence id is not part of the session."""


class UnknownEntity(AnnotationError):
    """Referenced entity id is not a live entity of the given sentence."""


class UnknownLabel(AnnotationError):
    """Relation name is not in the session label set."""


class DuplicateSpan(AnnotationError):
    """An entity with the same (sentence, span) already exists."""


class SelfPair(AnnotationError):
    """Relation arguments must be two distinct entities."""


class InvalidSession(AnnotationError):
    """Session failed validation; carries the error-severity findings."""

    def __init__(self, findings):
        self.findings = list(findings)
        lines = "; ".join(str(f) for f in self.findings)
        super().__init__(f"session is not valid: {lines}")


class ParseError(AnnotationError):
    """Input is not well-formed JSON."""


class SchemaError(AnnotationError):
    """Parsed input does not match the export schema.

    ``path`` locates the offending field, e.g. ``[2].EntityMentions[0].Text``.
    """

    def __init__(self, message, path):
        self.path = path
        super().__init__(f"{path}: {message}")


class SpanMismatch(AnnotationError):
    """A mention's text disagrees with the slice its offsets denote.

    ``record_index`` is the position of the offending sentence record in
    the imported document.
    """

    def __init__(self, message, record_index):
        self.record_index = record_index
        super().__init__(f"record {record_index}: {message}")


class MalformedLog(AnnotationError):
    """Event-log timestamps decrease."""

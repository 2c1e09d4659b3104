"""Session validation plus corpus density and timing statistics."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedLog
from .model import span_text, spans_overlap
from .session import AnnotationSession, EventLog

ERROR = "ERROR"
WARNING = "WARNING"


@dataclass(frozen=True)
class Finding:
    """One validation result: severity, stable code, message, location."""

    severity: str
    code: str
    message: str
    location: str

    def __str__(self):
        return f"{self.severity} {self.code} {self.location}: {self.message}"


@dataclass(frozen=True)
class CorpusStats:
    """Per-sentence density averages over a session.

    A "relation pair" is a stored directed pair bearing at least one
    label; a "triplet" counts each (pair, label) combination once. Both
    are reported because "relations per sentence" is ambiguous between
    the two readings. Zero sentences define every average as 0.
    """

    sentence_count: int
    avg_entities_per_sentence: float
    avg_relation_pairs_per_sentence: float
    avg_triplets_per_sentence: float


@dataclass(frozen=True)
class TimingStats:
    """Per-sentence annotation time reconstructed from the event log."""

    per_sentence_seconds: dict[int, float]
    total_seconds: float
    avg_minutes_per_sentence: float


def validate_session(session: AnnotationSession) -> list[Finding]:
    """Check every referential and span invariant; findings are the output.

    Errors: dangling sentence/entity/label references, span-text
    mismatches, empty relation mentions, self-pairs. Warnings:
    overlapping entity spans, sentences annotated with entities but no
    relations. An empty list means the session is fully valid.
    """
    findings: list[Finding] = []
    sentence_ids = {s.id for s in session.sentences}
    sentences_by_id = {s.id: s for s in session.sentences}
    label_names = {label.name for label in session.labels}

    for entity in session.entities.values():
        where = f"entity {entity.id}"
        sentence = sentences_by_id.get(entity.sentence_id)
        if sentence is None:
            findings.append(
                Finding(
                    ERROR,
                    "DANGLING_SENTENCE",
                    f"references missing sentence {entity.sentence_id}",
                    where,
                )
            )
            continue
        try:
            sliced = span_text(sentence, entity.span)
        except Exception:
            sliced = None
        if sliced != entity.text:
            findings.append(
                Finding(
                    ERROR,
                    "SPAN_MISMATCH",
                    f"text {entity.text!r} does not equal slice "
                    f"({entity.span.start}, {entity.span.end}) of sentence {sentence.id}",
                    where,
                )
            )

    for (sid, a1, a2), relation in session.relations.items():
        where = f"relation ({sid}, {a1}, {a2})"
        if relation.sentence_id not in sentence_ids:
            findings.append(
                Finding(
                    ERROR,
                    "DANGLING_SENTENCE",
                    f"references missing sentence {relation.sentence_id}",
                    where,
                )
            )
        for arg in (relation.arg1, relation.arg2):
            entity = session.entities.get(arg)
            if entity is None:
                findings.append(
                    Finding(ERROR, "DANGLING_ENTITY", f"references missing entity {arg}", where)
                )
            elif entity.sentence_id != relation.sentence_id:
                findings.append(
                    Finding(
                        ERROR,
                        "DANGLING_ENTITY",
                        f"entity {arg} belongs to sentence {entity.sentence_id}, "
                        f"not {relation.sentence_id}",
                        where,
                    )
                )
        if relation.arg1 == relation.arg2:
            findings.append(
                Finding(ERROR, "SELF_PAIR", "arg1 and arg2 are the same entity", where)
            )
        if not relation.relation_names:
            findings.append(
                Finding(ERROR, "EMPTY_RELATION", "relation mention carries no label", where)
            )
        for name in relation.relation_names:
            if name not in label_names:
                findings.append(
                    Finding(
                        ERROR,
                        "DANGLING_LABEL",
                        f"label {name!r} is not in the session label set",
                        where,
                    )
                )

    by_sentence: dict[int, list] = {}
    for entity in session.entities.values():
        by_sentence.setdefault(entity.sentence_id, []).append(entity)
    for sid, ents in sorted(by_sentence.items()):
        ents.sort(key=lambda e: (e.span.start, e.span.end, e.id))
        for i, first in enumerate(ents):
            for second in ents[i + 1 :]:
                if spans_overlap(first.span, second.span):
                    findings.append(
                        Finding(
                            WARNING,
                            "OVERLAP",
                            f"entities {first.id} and {second.id} have overlapping spans",
                            f"sentence {sid}",
                        )
                    )
        if sid in sentence_ids and not any(r.sentence_id == sid for r in session.relations.values()):
            findings.append(
                Finding(
                    WARNING,
                    "NO_RELATIONS",
                    "sentence has entities but no relation annotated",
                    f"sentence {sid}",
                )
            )
    return findings


def corpus_stats(session: AnnotationSession) -> CorpusStats:
    """Density averages over the session's sentences."""
    n = len(session.sentences)
    if n == 0:
        return CorpusStats(0, 0.0, 0.0, 0.0)
    triplets = sum(len(r.relation_names) for r in session.relations.values())
    return CorpusStats(
        sentence_count=n,
        avg_entities_per_sentence=len(session.entities) / n,
        avg_relation_pairs_per_sentence=len(session.relations) / n,
        avg_triplets_per_sentence=triplets / n,
    )


def timing_stats(event_log: EventLog) -> TimingStats:
    """Per-sentence annotation time: last minus first event touching it.

    Events without a sentence id (ingestion) are excluded. The average is
    over sentences with at least one timed event; idle gaps between a
    sentence's events are not subtracted. Raises MalformedLog when
    timestamps decrease.
    """
    previous = None
    first: dict[int, float] = {}
    last: dict[int, float] = {}
    for event in event_log:
        if previous is not None and event.timestamp < previous:
            raise MalformedLog(
                f"timestamp {event.timestamp} follows {previous} in the event log"
            )
        previous = event.timestamp
        if event.sentence_id is None:
            continue
        first.setdefault(event.sentence_id, event.timestamp)
        last[event.sentence_id] = event.timestamp

    per_sentence = {sid: (last[sid] - first[sid]) / 1000.0 for sid in first}
    total = sum(per_sentence.values())
    timed = len(per_sentence)
    avg_minutes = (total / 60.0 / timed) if timed else 0.0
    return TimingStats(per_sentence, total, avg_minutes)

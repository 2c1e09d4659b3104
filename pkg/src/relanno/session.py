"""In-memory annotation session: the four-stage workflow state machine.

A session is the entire application state: sentences, the relation label
set, entity mentions, relation mentions, and an append-only event log.
Every mutating operation commits synchronously before returning; there is
no separate save step. A session is single-owner mutable state; callers
serialize access.

The staged flow (sentences -> labels -> entities -> relations) is advisory:
operations may run in any order, the invariants hold throughout.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from . import errors
from .model import EntityMention, RelationLabel, RelationMention, Sentence, Span, span_text

EVENT_KINDS = frozenset(
    {
        "sentences_added",
        "labels_added",
        "entity_added",
        "entity_deleted",
        "relation_set",
        "relation_unset",
    }
)


@dataclass(frozen=True)
class Event:
    """One log entry: monotonic-millisecond timestamp, kind, optional sentence."""

    timestamp: float
    kind: str
    sentence_id: Optional[int] = None


class EventLog:
    """Append-only sequence of events; entries are never mutated."""

    def __init__(self):
        self._entries: list[Event] = []

    @property
    def entries(self) -> tuple[Event, ...]:
        return tuple(self._entries)

    def append(self, timestamp: float, kind: str, sentence_id: Optional[int] = None) -> None:
        if kind not in EVENT_KINDS:
            raise ValueError(f"unknown event kind: {kind!r}")
        self._entries.append(Event(timestamp, kind, sentence_id))

    def clear(self) -> None:
        self._entries.clear()

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)


def _default_clock() -> float:
    return time.monotonic() * 1000.0


class AnnotationSession:
    """Single source of truth for one annotation run.

    `clock` is called for event timestamps and must be monotonic,
    returning milliseconds; injecting it keeps tests deterministic.
    """

    def __init__(self, clock: Callable[[], float] = _default_clock):
        self._clock = clock
        self.sentences: list[Sentence] = []
        self.labels: list[RelationLabel] = []
        self.entities: dict[int, EntityMention] = {}
        self.relations: dict[tuple[int, int, int], RelationMention] = {}
        self.events = EventLog()
        self._label_names: set[str] = set()
        self._spans: set[tuple[int, int, int]] = set()
        self._next_entity_id = 0

    @classmethod
    def restore(
        cls,
        sentences: list[Sentence],
        labels: list[RelationLabel],
        entities: list[EntityMention],
        relations: list[RelationMention],
        clock: Callable[[], float] = _default_clock,
    ) -> "AnnotationSession":
        """Rebuild a session from stored parts (no events, fresh log).

        Trusts the caller for semantic consistency; run
        `metrics.validate_session` to judge the result.
        """
        session = cls(clock=clock)
        session.sentences = list(sentences)
        for label in labels:
            if label.name not in session._label_names:
                session.labels.append(label)
                session._label_names.add(label.name)
        for ent in entities:
            session.entities[ent.id] = ent
            session._spans.add((ent.sentence_id, ent.span.start, ent.span.end))
            session._next_entity_id = max(session._next_entity_id, ent.id + 1)
        for rel in relations:
            session.relations[(rel.sentence_id, rel.arg1, rel.arg2)] = rel
        return session

    # -- stage 1: sentence ingestion ------------------------------------

    def ingest_sentences(self, raw: str) -> int:
        """Append one Sentence per non-blank line of `raw`; return the count.

        Lines are trimmed; blank lines are skipped; duplicate texts are
        allowed and get distinct ids. Raises EmptyInput (session untouched)
        when every line is blank.
        """
        texts = [line.strip() for line in raw.split("\n")]
        texts = [t for t in texts if t]
        if not texts:
            raise errors.EmptyInput("no non-blank sentence line in input")
        for text in texts:
            self.sentences.append(Sentence(len(self.sentences), text))
        self._log("sentences_added")
        return len(texts)

    # -- stage 2: relation set ingestion ---------------------------------

    def ingest_labels(self, raw: str) -> int:
        """Add one RelationLabel per new non-blank line; return how many were new.

        Duplicates (against the session and within the input) are silently
        skipped. Raises EmptyInput when every line is blank.
        """
        names = [line.strip() for line in raw.split("\n")]
        names = [n for n in names if n]
        if not names:
            raise errors.EmptyInput("no non-blank relation line in input")
        added = 0
        for name in names:
            if name not in self._label_names:
                self.labels.append(RelationLabel(name))
                self._label_names.add(name)
                added += 1
        self._log("labels_added")
        return added

    # -- stage 3: entity annotation ---------------------------------------

    def add_entity(self, sentence_id: int, span: Span) -> int:
        """Store a new EntityMention over `span`; return its id.

        Raises UnknownSentence, OutOfBounds, or DuplicateSpan when the
        same (sentence, span) is already annotated. Overlapping and nested
        distinct spans are permitted.
        """
        sentence = self._sentence(sentence_id)
        text = span_text(sentence, span)
        key = (sentence_id, span.start, span.end)
        if key in self._spans:
            raise errors.DuplicateSpan(
                f"span ({span.start}, {span.end}) of sentence {sentence_id} is already annotated"
            )
        entity_id = self._next_entity_id
        self._next_entity_id += 1
        self.entities[entity_id] = EntityMention(entity_id, sentence_id, span, text)
        self._spans.add(key)
        self._log("entity_added", sentence_id)
        return entity_id

    def delete_entity(self, entity_id: int) -> int:
        """Remove an entity and cascade-remove every relation touching it.

        Returns the number of RelationMentions removed. The span slot is
        freed: the same span may be re-added later under a new id.
        """
        entity = self.entities.get(entity_id)
        if entity is None:
            raise errors.UnknownEntity(f"no entity with id {entity_id}")
        doomed = [
            key
            for key, rel in self.relations.items()
            if rel.arg1 == entity_id or rel.arg2 == entity_id
        ]
        for key in doomed:
            del self.relations[key]
        del self.entities[entity_id]
        self._spans.discard((entity.sentence_id, entity.span.start, entity.span.end))
        self._log("entity_deleted", entity.sentence_id)
        return len(doomed)

    # -- stage 4: relation annotation --------------------------------------

    def entity_pairs(self, sentence_id: int) -> list[tuple[int, int]]:
        """All directed pairs of distinct live entities of one sentence.

        Ordered by arg1 id then arg2 id; n live entities yield n*(n-1) pairs.
        """
        self._sentence(sentence_id)
        ids = sorted(e.id for e in self.entities.values() if e.sentence_id == sentence_id)
        return [(a, b) for a in ids for b in ids if a != b]

    def set_relation(
        self, sentence_id: int, arg1: int, arg2: int, label_name: str, on: bool
    ) -> tuple[str, ...]:
        """Toggle one label on a directed pair; return the pair's label set.

        on=True adds the label (creating the RelationMention if absent);
        on=False removes it and drops the mention once its label set is
        empty. Both directions are idempotent; an event is logged only
        when state actually changed.
        """
        for arg in (arg1, arg2):
            entity = self.entities.get(arg)
            if entity is None or entity.sentence_id != sentence_id:
                raise errors.UnknownEntity(
                    f"entity {arg} is not a live entity of sentence {sentence_id}"
                )
        if arg1 == arg2:
            raise errors.SelfPair("relation arguments must be two distinct entities")
        if label_name not in self._label_names:
            raise errors.UnknownLabel(f"label {label_name!r} is not in the session label set")

        key = (sentence_id, arg1, arg2)
        current = self.relations.get(key)
        names = list(current.relation_names) if current else []
        if on:
            if label_name in names:
                return tuple(names)
            names.append(label_name)
            self.relations[key] = RelationMention(sentence_id, arg1, arg2, tuple(names))
            self._log("relation_set", sentence_id)
        else:
            if label_name not in names:
                return tuple(names)
            names.remove(label_name)
            if names:
                self.relations[key] = RelationMention(sentence_id, arg1, arg2, tuple(names))
            else:
                del self.relations[key]
            self._log("relation_unset", sentence_id)
        return tuple(names)

    def search_labels(self, query: str) -> list[str]:
        """Label names containing `query` case-insensitively, in insertion order.

        An empty query returns every label.
        """
        q = query.casefold()
        return [label.name for label in self.labels if q in label.name.casefold()]

    # -- lifecycle -----------------------------------------------------------

    def reset(self) -> None:
        """Drop every collection and the event log; ids restart from 0."""
        self.sentences.clear()
        self.labels.clear()
        self.entities.clear()
        self.relations.clear()
        self.events.clear()
        self._label_names.clear()
        self._spans.clear()
        self._next_entity_id = 0

    # -- helpers ----------------------------------------------------------

    def _sentence(self, sentence_id: int) -> Sentence:
        if 0 <= sentence_id < len(self.sentences):
            return self.sentences[sentence_id]
        raise errors.UnknownSentence(f"no sentence with id {sentence_id}")

    def _log(self, kind: str, sentence_id: Optional[int] = None) -> None:
        self.events.append(self._clock(), kind, sentence_id)

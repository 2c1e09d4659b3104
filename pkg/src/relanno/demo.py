"""Ready-made demo session: one news sentence plus the aspect-sentiment
and causality examples, fully annotated. Useful for trying the CLI and
as a golden fixture."""

from __future__ import annotations

from .model import Span
from .session import AnnotationSession

NEWS_SENTENCE = (
    "Within a year of that age were Google 's Sergey Brin and Larry Page , "
    "Apple 's Steve Wozniak , Yahoo 's Jerry Yang , Skype 's Janus Friis , "
    "Chad Hurley from YouTube , and Tom Anderson from MySpace ."
)
REVIEW_SENTENCE = (
    "Appetizers are excellent ; you can make a great "
    "( but slightly expensive ) meal out of them ."
)
CAUSALITY_SENTENCE = "The warmth was radiating from the fireplace to all corners of the room."

NEWS_ENTITIES = [
    "Google",
    "Sergey Brin",
    "Larry Page",
    "Skype",
    "Janus Friis",
    "Apple",
    "Steve Wozniak",
    "Yahoo",
    "Jerry Yang",
    "YouTube",
    "Chad Hurley",
    "Tom Anderson",
    "MySpace",
]
# Aspect and opinion spans of the review sentence. The aspect is the
# singular "Appetizer" slice of "Appetizers".
REVIEW_ENTITIES = ["Appetizer", "meal", "excellent", "great", "slightly expensive"]
CAUSALITY_ENTITIES = ["The warmth", "the fireplace"]

DEMO_LABELS = [
    "/business/company/founders",
    "/people/person/place_of_birth",
    "/business/person/company",
    "positive",
    "negative",
    "neutral",
    "Cause-Effect",
]


def _span_of(text: str, surface: str) -> Span:
    start = text.index(surface)
    return Span(start, start + len(surface))


def build_demo_session(clock=None) -> AnnotationSession:
    """Build the demo session through the regular engine operations.

    Annotates: the news sentence with its 13 entities and three triplets
    (<Sergey Brin, Google> and <Jerry Yang, Yahoo> as person-to-company,
    <Google, Sergey Brin> as company-to-founder), the review sentence
    with (Appetizer -> excellent) marked positive, and the causality
    sentence with (the fireplace -> The warmth) marked Cause-Effect.
    """
    session = AnnotationSession(clock=clock) if clock else AnnotationSession()
    session.ingest_sentences("\n".join([NEWS_SENTENCE, REVIEW_SENTENCE, CAUSALITY_SENTENCE]))
    session.ingest_labels("\n".join(DEMO_LABELS))

    ids: dict[tuple[int, str], int] = {}
    for sentence_id, surfaces in enumerate([NEWS_ENTITIES, REVIEW_ENTITIES, CAUSALITY_ENTITIES]):
        text = session.sentences[sentence_id].text
        for surface in surfaces:
            ids[(sentence_id, surface)] = session.add_entity(sentence_id, _span_of(text, surface))

    session.set_relation(
        0, ids[(0, "Sergey Brin")], ids[(0, "Google")], "/business/person/company", True
    )
    session.set_relation(
        0, ids[(0, "Jerry Yang")], ids[(0, "Yahoo")], "/business/person/company", True
    )
    session.set_relation(
        0, ids[(0, "Google")], ids[(0, "Sergey Brin")], "/business/company/founders", True
    )
    session.set_relation(1, ids[(1, "Appetizer")], ids[(1, "excellent")], "positive", True)
    session.set_relation(
        2, ids[(2, "the fireplace")], ids[(2, "The warmth")], "Cause-Effect", True
    )
    return session

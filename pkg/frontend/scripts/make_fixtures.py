#!/usr/bin/env python3
"""Regenerate the golden fixtures that byte-lock the UI to the core engine.

Each fixture is the canonical export of a scripted op sequence; the
TypeScript tests replay the identical sequence through the UI engine and
compare bytes. Run from this directory with the core package installed:

    python3 make_fixtures.py
"""

from pathlib import Path

from relanno import AnnotationSession, Span, export

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

NEWS_SENTENCE = (
    "Within a year of that age were Google 's Sergey Brin and Larry Page , "
    "Apple 's Steve Wozniak , Yahoo 's Jerry Yang , Skype 's Janus Friis , "
    "Chad Hurley from YouTube , and Tom Anderson from MySpace ."
)
WORKFLOW_LABELS = [
    "/business/company/founders",
    "/people/person/place_of_birth",
    "/business/person/company",
]


def span_of(text: str, surface: str) -> Span:
    start = text.index(surface)
    return Span(start, start + len(surface))


def table1_workflow() -> str:
    """Steps 1-4 on the news sentence, exactly as the UI test scripts them."""
    session = AnnotationSession()
    session.ingest_sentences(NEWS_SENTENCE)
    session.ingest_labels("\n".join(WORKFLOW_LABELS))
    google = session.add_entity(0, span_of(NEWS_SENTENCE, "Google"))
    brin = session.add_entity(0, span_of(NEWS_SENTENCE, "Sergey Brin"))
    session.set_relation(0, google, brin, "/business/company/founders", True)
    return export(session)


def unicode_ops() -> str:
    """Multi-scalar text; offsets below count Unicode scalar values."""
    session = AnnotationSession()
    session.ingest_sentences("naïve a😀b café\n東京 rocks")
    session.ingest_labels("positive\n部分/全体")
    first = session.sentences[0].text
    second = session.sentences[1].text
    assert first.index("a😀b") == 6 and first.index("café") == 10
    assert second.index("東京") == 0
    emoji = session.add_entity(0, Span(6, 9))
    cafe = session.add_entity(0, Span(10, 14))
    session.add_entity(1, Span(0, 2))
    session.set_relation(0, emoji, cafe, "positive", True)
    return export(session)


def main():
    FIXTURES.mkdir(exist_ok=True)
    (FIXTURES / "table1_workflow.json").write_text(table1_workflow(), encoding="utf-8")
    (FIXTURES / "unicode_ops.json").write_text(unicode_ops(), encoding="utf-8")
    print(f"wrote fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()

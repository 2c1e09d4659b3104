"""Shared fixtures: deterministic clocks and a random-session generator."""

import random

from relanno import AnnotationSession, DuplicateSpan, Span

WORDS = [
    "alpha",
    "beta",
    "gamma",
    "naïve",
    "café",
    "東京",
    "data",
    "a😀b",
    "zebra",
    "flux",
    "Łódź",
    "ion",
]

LABEL_POOL = [
    "/people/person/place_of_birth",
    "/business/person/company",
    "/business/company/founders",
    "Cause-Effect",
    "positive",
    "größer-als",
    "部分/全体",
]


def make_clock(start=0.0, step=100.0):
    """Monotonic fake clock advancing `step` ms per call."""
    state = {"now": start - step}

    def clock():
        state["now"] += step
        return state["now"]

    return clock


def make_random_session(rng: random.Random, max_sentences=10, max_entities=8, max_labels=5):
    """Build a valid session of bounded size through the public ops only."""
    session = AnnotationSession(clock=make_clock())
    lines = [
        " ".join(rng.choice(WORDS) for _ in range(rng.randint(1, 8)))
        for _ in range(rng.randint(1, max_sentences))
    ]
    session.ingest_sentences("\n".join(lines))
    label_names = rng.sample(LABEL_POOL, rng.randint(1, max_labels))
    session.ingest_labels("\n".join(label_names))

    for sentence in session.sentences:
        wanted = rng.randint(0, max_entities)
        added = 0
        for _ in range(wanted * 5):
            if added >= wanted:
                break
            length = len(sentence.text)
            start = rng.randrange(0, length)
            end = rng.randrange(start + 1, length + 1)
            try:
                session.add_entity(sentence.id, Span(start, end))
            except DuplicateSpan:
                continue
            added += 1
        pairs = session.entity_pairs(sentence.id)
        if pairs:
            for _ in range(rng.randint(0, 6)):
                arg1, arg2 = rng.choice(pairs)
                session.set_relation(sentence.id, arg1, arg2, rng.choice(label_names), True)
    return session


def make_planted_corpus():
    """50 sentences carrying 310 entities and 205 single-label pairs.

    Entity and labeled-pair totals are planted so the density averages
    come out to exactly 310/50 and 205/50.
    """
    session = AnnotationSession(clock=make_clock())
    session.ingest_sentences("\n".join(" ".join(f"tok{i}w{j}" for j in range(8)) for i in range(50)))
    session.ingest_labels("planted")
    for sentence in session.sentences:
        n_entities = 7 if sentence.id < 10 else 6
        ids = []
        position = 0
        for word in sentence.text.split(" ")[:n_entities]:
            ids.append(session.add_entity(sentence.id, Span(position, position + len(word))))
            position += len(word) + 1
        n_pairs = 5 if sentence.id < 5 else 4
        for k in range(1, n_pairs + 1):
            session.set_relation(sentence.id, ids[0], ids[k], "planted", True)
    return session


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(report, "when", "call") == "call":
                status = "PASS" if outcome == "passed" else "FAIL"
                rows.append((nodeid.split("::")[-1], status))
    if rows:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, status in sorted(rows):
            terminalreporter.write_line(f"{status}  {name}")

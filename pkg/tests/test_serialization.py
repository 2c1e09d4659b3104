import json
import random
import re

import pytest

from relanno import (
    AnnotationSession,
    EntityMention,
    InvalidSession,
    ParseError,
    RelationLabel,
    RelationMention,
    SchemaError,
    Sentence,
    Span,
    SpanMismatch,
    build_demo_session,
    export,
    export_brat,
    import_session,
    validate_session,
)
from relanno.demo import NEWS_SENTENCE

from conftest import make_clock, make_random_session


def session_triplets(session):
    """Independent walk: multiset of (sentence text, arg1 text, arg2 text, label)."""
    out = []
    for relation in session.relations.values():
        sentence = next(s for s in session.sentences if s.id == relation.sentence_id)
        arg1 = session.entities[relation.arg1]
        arg2 = session.entities[relation.arg2]
        for name in relation.relation_names:
            out.append((sentence.text, arg1.text, arg2.text, name))
    return sorted(out)


class TestExport:
    def test_empty_session_exports_empty_list(self):
        assert export(AnnotationSession()) == "[]"

    def test_demo_record_contains_person_company_triplet(self):
        records = json.loads(export(build_demo_session()))
        news = next(r for r in records if r["SentText"] == NEWS_SENTENCE)
        matches = [
            m
            for m in news["RelationMentions"]
            if m["Arg1Text"] == "Sergey Brin" and m["Arg2Text"] == "Google"
        ]
        assert len(matches) == 1
        assert matches[0]["RelationNames"] == ["/business/person/company"]

    def test_every_sentence_gets_a_record(self):
        session = AnnotationSession(clock=make_clock())
        session.ingest_sentences("annotated here\nleft alone")
        session.add_entity(0, Span(0, 9))
        records = json.loads(export(session))
        assert len(records) == 2
        assert records[1] == {
            "SentText": "left alone",
            "EntityMentions": [],
            "RelationMentions": [],
        }

    def test_identical_sessions_export_identically(self):
        assert export(build_demo_session()) == export(build_demo_session())

    def test_export_ignores_op_history(self):
        direct = AnnotationSession(clock=make_clock())
        direct.ingest_sentences("aa bb")
        direct.ingest_labels("rel")
        a = direct.add_entity(0, Span(0, 2))
        b = direct.add_entity(0, Span(3, 5))
        direct.set_relation(0, a, b, "rel", True)

        detour = AnnotationSession(clock=make_clock())
        detour.ingest_sentences("aa bb")
        detour.ingest_labels("rel")
        a2 = detour.add_entity(0, Span(0, 2))
        b2 = detour.add_entity(0, Span(3, 5))
        doomed = detour.add_entity(0, Span(1, 4))
        detour.set_relation(0, a2, doomed, "rel", True)
        detour.delete_entity(doomed)
        detour.set_relation(0, a2, b2, "rel", True)

        assert export(direct) == export(detour)

    def test_entities_sorted_by_offsets(self):
        session = AnnotationSession(clock=make_clock())
        session.ingest_sentences("aa bb cc")
        session.add_entity(0, Span(6, 8))
        session.add_entity(0, Span(0, 2))
        session.add_entity(0, Span(3, 5))
        records = json.loads(export(session))
        starts = [m["Start"] for m in records[0]["EntityMentions"]]
        assert starts == sorted(starts) == [0, 3, 6]

    def test_invalid_session_is_rejected(self):
        session = AnnotationSession.restore(
            sentences=[Sentence(0, "aa")],
            labels=[RelationLabel("rel")],
            entities=[EntityMention(0, 0, Span(0, 2), "aa")],
            relations=[RelationMention(0, 0, 9, ("rel",))],
        )
        with pytest.raises(InvalidSession) as info:
            export(session)
        assert any(f.code == "DANGLING_ENTITY" for f in info.value.findings)

    def test_triplet_multiset_is_conserved(self):
        rng = random.Random(13)
        for _ in range(20):
            session = make_random_session(rng)
            records = json.loads(export(session))
            exported = sorted(
                (r["SentText"], m["Arg1Text"], m["Arg2Text"], name)
                for r in records
                for m in r["RelationMentions"]
                for name in m["RelationNames"]
            )
            assert exported == session_triplets(session)


class TestImport:
    def test_empty_list_builds_empty_session(self):
        session = import_session("[]")
        assert session.sentences == []
        assert session.entities == {}
        assert export(session) == "[]"

    def test_round_trip_is_byte_identical(self):
        rng = random.Random(2024)
        for _ in range(25):
            first = export(make_random_session(rng))
            second = export(import_session(first))
            assert second == first

    def test_label_set_in_first_appearance_order(self):
        text = json.dumps(
            [
                {
                    "SentText": "aa bb cc",
                    "EntityMentions": [
                        {"Text": "aa", "Start": 0, "End": 2},
                        {"Text": "bb", "Start": 3, "End": 5},
                    ],
                    "RelationMentions": [
                        {
                            "Arg1Text": "aa",
                            "Arg1Start": 0,
                            "Arg2Text": "bb",
                            "Arg2Start": 3,
                            "RelationNames": ["beta", "alpha"],
                        },
                        {
                            "Arg1Text": "bb",
                            "Arg1Start": 3,
                            "Arg2Text": "aa",
                            "Arg2Start": 0,
                            "RelationNames": ["gamma", "alpha"],
                        },
                    ],
                }
            ]
        )
        session = import_session(text)
        assert [l.name for l in session.labels] == ["beta", "alpha", "gamma"]

    def test_missing_offsets_bind_first_occurrence(self):
        text = json.dumps(
            [
                {
                    "SentText": "aa bb aa",
                    "EntityMentions": [{"Text": "aa"}, {"Text": "bb"}],
                    "RelationMentions": [
                        {"Arg1Text": "aa", "Arg2Text": "bb", "RelationNames": ["rel"]}
                    ],
                }
            ]
        )
        session = import_session(text)
        spans = sorted((e.span.start, e.span.end) for e in session.entities.values())
        assert spans == [(0, 2), (3, 5)]
        relation = next(iter(session.relations.values()))
        assert session.entities[relation.arg1].span == Span(0, 2)

    def test_arg_without_offsets_binds_to_annotated_entity(self):
        # first occurrence of "aa" is unannotated; binding must still land
        # on the entity list
        text = json.dumps(
            [
                {
                    "SentText": "aa bb aa",
                    "EntityMentions": [
                        {"Text": "aa", "Start": 6, "End": 8},
                        {"Text": "bb", "Start": 3, "End": 5},
                    ],
                    "RelationMentions": [
                        {"Arg1Text": "aa", "Arg2Text": "bb", "RelationNames": ["rel"]}
                    ],
                }
            ]
        )
        session = import_session(text)
        relation = next(iter(session.relations.values()))
        assert session.entities[relation.arg1].span == Span(6, 8)

    def test_not_json_is_parse_error(self):
        with pytest.raises(ParseError):
            import_session("{not json")

    def test_top_level_object_is_schema_error(self):
        with pytest.raises(SchemaError):
            import_session('{"SentText": "aa"}')

    def test_missing_sent_text_reports_path(self):
        with pytest.raises(SchemaError) as info:
            import_session('[{"EntityMentions": []}]')
        assert info.value.path == "[0].SentText"

    def test_missing_relation_names_reports_path(self):
        text = json.dumps(
            [
                {
                    "SentText": "aa bb",
                    "EntityMentions": [
                        {"Text": "aa", "Start": 0, "End": 2},
                        {"Text": "bb", "Start": 3, "End": 5},
                    ],
                    "RelationMentions": [
                        {"Arg1Text": "aa", "Arg1Start": 0, "Arg2Text": "bb", "Arg2Start": 3}
                    ],
                }
            ]
        )
        with pytest.raises(SchemaError) as info:
            import_session(text)
        assert info.value.path == "[0].RelationMentions[0].RelationNames"

    def test_wrong_slice_is_span_mismatch_with_record_index(self):
        text = json.dumps(
            [
                {"SentText": "left alone", "EntityMentions": [], "RelationMentions": []},
                {
                    "SentText": "Google hired Sergey",
                    "EntityMentions": [{"Text": "Google", "Start": 13, "End": 19}],
                    "RelationMentions": [],
                },
            ]
        )
        with pytest.raises(SpanMismatch) as info:
            import_session(text)
        assert info.value.record_index == 1
        assert "record 1" in str(info.value)

    def test_absent_text_is_span_mismatch(self):
        text = json.dumps([{"SentText": "aa bb", "EntityMentions": [{"Text": "zz"}]}])
        with pytest.raises(SpanMismatch):
            import_session(text)

    def test_self_pair_imports_and_fails_validation(self):
        text = json.dumps(
            [
                {
                    "SentText": "aa bb",
                    "EntityMentions": [{"Text": "aa", "Start": 0, "End": 2}],
                    "RelationMentions": [
                        {
                            "Arg1Text": "aa",
                            "Arg1Start": 0,
                            "Arg2Text": "aa",
                            "Arg2Start": 0,
                            "RelationNames": ["rel"],
                        }
                    ],
                }
            ]
        )
        session = import_session(text)
        assert any(f.code == "SELF_PAIR" for f in validate_session(session))

    def test_duplicate_spans_rejected(self):
        text = json.dumps(
            [
                {
                    "SentText": "aa bb",
                    "EntityMentions": [
                        {"Text": "aa", "Start": 0, "End": 2},
                        {"Text": "aa", "Start": 0, "End": 2},
                    ],
                }
            ]
        )
        with pytest.raises(SchemaError):
            import_session(text)


class TestExportBrat:
    def test_first_sentence_has_zero_shift(self):
        session = AnnotationSession(clock=make_clock())
        session.ingest_sentences("ab cd")
        session.add_entity(0, Span(0, 2))
        _, ann = export_brat(session)
        assert ann == "T1\tEntity 0 2\tab\n"

    def test_second_sentence_shifts_by_text_plus_newline(self):
        session = AnnotationSession(clock=make_clock())
        session.ingest_sentences("xx\nyy")
        session.add_entity(1, Span(0, 2))
        doc, ann = export_brat(session)
        assert doc == "xx\nyy"
        line = ann.strip()
        assert line == "T1\tEntity 3 5\tyy"
        assert doc[3:5] == "yy"

    def test_relation_labels_are_sanitized(self):
        session = AnnotationSession(clock=make_clock())
        session.ingest_sentences("aa bb")
        session.ingest_labels("/business/person/company")
        a = session.add_entity(0, Span(0, 2))
        b = session.add_entity(0, Span(3, 5))
        session.set_relation(0, a, b, "/business/person/company", True)
        _, ann = export_brat(session)
        r_line = [l for l in ann.splitlines() if l.startswith("R")][0]
        # oracle: apply the character class rule one character at a time
        expected = "".join(
            c if re.match(r"[A-Za-z0-9_]", c) else "_" for c in "/business/person/company"
        )
        assert expected == "_business_person_company"
        assert r_line == f"R1\t{expected} Arg1:T1 Arg2:T2"

    def test_one_r_line_per_pair_label(self):
        session = AnnotationSession(clock=make_clock())
        session.ingest_sentences("aa bb")
        session.ingest_labels("r1\nr2")
        a = session.add_entity(0, Span(0, 2))
        b = session.add_entity(0, Span(3, 5))
        session.set_relation(0, a, b, "r1", True)
        session.set_relation(0, a, b, "r2", True)
        _, ann = export_brat(session)
        assert [l.split("\t")[0] for l in ann.splitlines()] == ["T1", "T2", "R1", "R2"]

    def test_offsets_slice_the_joined_document(self):
        rng = random.Random(77)
        for _ in range(20):
            session = make_random_session(rng)
            doc, ann = export_brat(session)
            t_lines = [l for l in ann.splitlines() if l.startswith("T")]
            assert len(t_lines) == len(session.entities)
            for line in t_lines:
                _, middle, text = line.split("\t")
                _, start, end = middle.split(" ")
                assert doc[int(start) : int(end)] == text

    def test_empty_session(self):
        doc, ann = export_brat(AnnotationSession())
        assert doc == ""
        assert ann == ""

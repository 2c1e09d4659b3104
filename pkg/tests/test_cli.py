import json
import subprocess
import sys
from pathlib import Path

import pytest

from relanno import build_demo_session, export, export_brat, import_session, validate_session

from conftest import make_planted_corpus

CORRUPTED = json.dumps(
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


def run_cli(*args, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "relanno", *args],
        input=stdin.encode("utf-8"),
        capture_output=True,
    )


@pytest.fixture(scope="module")
def demo_json():
    return export(build_demo_session())


class TestExitCodes:
    def test_validate_clean_fixture_exits_zero_silently(self, demo_json):
        result = run_cli("validate", stdin=demo_json)
        assert result.returncode == 0
        assert result.stdout == b""

    def test_validate_corrupted_fixture_exits_one(self):
        result = run_cli("validate", stdin=CORRUPTED)
        assert result.returncode == 1
        assert b"ERROR SELF_PAIR" in result.stdout

    def test_unknown_flag_exits_two(self):
        result = run_cli("validate", "--frobnicate")
        assert result.returncode == 2
        assert result.stdout == b""
        assert result.stderr != b""

    def test_unknown_command_exits_two(self):
        assert run_cli("explode").returncode == 2

    def test_missing_input_file_exits_three(self):
        result = run_cli("validate", "--input", "/no/such/file.json")
        assert result.returncode == 3
        assert result.stdout == b""
        assert result.stderr != b""

    def test_malformed_json_exits_three(self):
        result = run_cli("validate", stdin="{oops")
        assert result.returncode == 3
        assert result.stdout == b""


class TestValidate:
    def test_warnings_go_to_stdout_but_exit_zero(self):
        doc = json.dumps(
            [{"SentText": "aa bb", "EntityMentions": [{"Text": "aa", "Start": 0, "End": 2}]}]
        )
        result = run_cli("validate", stdin=doc)
        assert result.returncode == 0
        assert b"WARNING NO_RELATIONS" in result.stdout


class TestStats:
    def test_json_report(self, demo_json):
        result = run_cli("stats", "--report-format", "json", stdin=demo_json)
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert report["sentence_count"] == 3
        assert report["avg_entities_per_sentence"] == pytest.approx(20 / 3)

    def test_default_report_format_is_json(self, demo_json):
        result = run_cli("stats", stdin=demo_json)
        assert json.loads(result.stdout)["sentence_count"] == 3

    def test_table_report(self, demo_json):
        result = run_cli("stats", "--report-format", "table", stdin=demo_json)
        lines = result.stdout.decode().splitlines()
        assert len(lines) == 4
        assert lines[0].startswith("sentence_count")
        assert lines[0].endswith("3")

    def test_planted_corpus_densities(self):
        result = run_cli("stats", "--report-format", "json", stdin=export(make_planted_corpus()))
        report = json.loads(result.stdout)
        assert report["sentence_count"] == 50
        assert report["avg_entities_per_sentence"] == pytest.approx(6.2, abs=1e-9)
        assert report["avg_relation_pairs_per_sentence"] == pytest.approx(4.1, abs=1e-9)


class TestConvert:
    def test_json_output_matches_library_export(self, demo_json):
        result = run_cli("convert", "--format", "json", stdin=demo_json)
        assert result.returncode == 0
        assert result.stdout.decode("utf-8") == export(import_session(demo_json))

    def test_missing_format_flag_is_usage_error(self, demo_json):
        assert run_cli("convert", stdin=demo_json).returncode == 2

    def test_brat_writes_txt_and_ann_pair(self, demo_json, tmp_path):
        out = tmp_path / "demo"
        result = run_cli("convert", "--format", "brat", "--output", str(out), stdin=demo_json)
        assert result.returncode == 0
        doc, ann = export_brat(import_session(demo_json))
        assert (tmp_path / "demo.txt").read_text(encoding="utf-8") == doc
        assert (tmp_path / "demo.ann").read_text(encoding="utf-8") == ann

    def test_brat_output_suffix_is_normalized(self, demo_json, tmp_path):
        out = tmp_path / "demo.ann"
        result = run_cli("convert", "--format", "brat", "--output", str(out), stdin=demo_json)
        assert result.returncode == 0
        assert (tmp_path / "demo.txt").exists()
        assert (tmp_path / "demo.ann").exists()

    def test_brat_to_stdout_is_usage_error(self, demo_json):
        result = run_cli("convert", "--format", "brat", stdin=demo_json)
        assert result.returncode == 2
        assert result.stdout == b""

    def test_convert_invalid_session_exits_one(self):
        result = run_cli("convert", "--format", "json", stdin=CORRUPTED)
        assert result.returncode == 1
        assert b"SELF_PAIR" in result.stderr
        assert result.stdout == b""


class TestDemo:
    def test_demo_matches_library_export(self, demo_json):
        result = run_cli("demo")
        assert result.returncode == 0
        assert result.stdout.decode("utf-8") == demo_json

    def test_demo_writes_file(self, tmp_path, demo_json):
        out = tmp_path / "demo.json"
        result = run_cli("demo", "--output", str(out))
        assert result.returncode == 0
        assert out.read_text(encoding="utf-8") == demo_json

    def test_demo_validates_clean(self):
        demo = run_cli("demo").stdout.decode("utf-8")
        assert run_cli("validate", stdin=demo).returncode == 0

    def test_demo_fixture_contents(self):
        records = json.loads(run_cli("demo").stdout.decode("utf-8"))
        assert len(records) == 3
        news, review, causal = records
        assert len(news["EntityMentions"]) == 13
        news_triplets = [
            (m["Arg1Text"], m["Arg2Text"], name)
            for m in news["RelationMentions"]
            for name in m["RelationNames"]
        ]
        assert len(news_triplets) >= 3
        assert ("Sergey Brin", "Google", "/business/person/company") in news_triplets
        assert ("Jerry Yang", "Yahoo", "/business/person/company") in news_triplets
        assert ("Google", "Sergey Brin", "/business/company/founders") in news_triplets

        review_mentions = review["RelationMentions"]
        assert any(
            m["Arg1Text"] == "Appetizer" and "positive" in m["RelationNames"]
            for m in review_mentions
        )

        causal_mentions = causal["RelationMentions"]
        assert causal_mentions[0]["Arg1Text"] == "the fireplace"
        assert causal_mentions[0]["Arg2Text"] == "The warmth"
        assert causal_mentions[0]["RelationNames"] == ["Cause-Effect"]


class TestHelp:
    def test_help_exits_zero(self):
        assert run_cli("--help").returncode == 0


class TestFrontendFixtures:
    """The UI golden fixtures must stay importable and valid here."""

    FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "fixtures"

    @pytest.mark.parametrize("name", ["table1_workflow.json", "unicode_ops.json"])
    def test_fixture_round_trips_and_validates_clean(self, name):
        text = (self.FIXTURES / name).read_text(encoding="utf-8")
        session = import_session(text)
        assert [f for f in validate_session(session) if f.severity == "ERROR"] == []
        assert export(session) == text
        assert run_cli("validate", stdin=text).returncode == 0

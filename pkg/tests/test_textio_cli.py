from __future__ import annotations

import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from support import upto
from transcat import corpus
from transcat.category import TranscriptionCategory
from transcat.cli import run
from transcat.core import FiniteUnarySemigroup
from transcat.enumeration import SearchSpec, enumerate_digests
from transcat.errors import NonAssociative, ParseError, VersionUnsupported
from transcat.functor import trace_category
from transcat.instances import example6, left_zero_band
from transcat.textio import parse, parse_file, render, to_json_obj

MINIMAL = "uas 1\norder 1\nmul\n0\n"

EXAMPLE6 = """\
uas 1
order 4
names e f a 0
mul
e a a 0
0 f 0 0
0 a 0 0
0 0 0 0
plus e f e 0
"""


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestParse:
    def test_minimal(self):
        doc = parse(MINIMAL)
        assert doc.kind == "uas" and doc.version == 1
        assert doc.payload == FiniteUnarySemigroup([[0]])

    def test_example_document(self):
        S = parse(EXAMPLE6).payload
        assert S == example6() and S.names == ("e", "f", "a", "0")

    def test_comments_and_blank_lines(self):
        text = "# header\n\nuas 1   # version\norder 1\n\nmul\n0 # only cell\n"
        assert parse(text).payload.order == 1

    def test_name_collision(self):
        with pytest.raises(ParseError) as err:
            parse("uas 1\norder 2\nnames x x\nmul\nx x\nx x\n")
        assert err.value.line == 3

    def test_unsupported_version(self):
        with pytest.raises(VersionUnsupported):
            parse("uas 2\norder 1\nmul\n0\n")

    def test_unknown_element(self):
        with pytest.raises(ParseError):
            parse("uas 1\norder 1\nmul\n1\n")

    def test_duplicate_map(self):
        with pytest.raises(ParseError):
            parse(MINIMAL + "plus 0\nplus 0\n")

    def test_truncated(self):
        with pytest.raises(ParseError):
            parse("uas 1\norder 2\nmul\n0 0\n")

    def test_non_associative_table(self):
        with pytest.raises(NonAssociative):
            parse("uas 1\norder 2\nmul\n1 0\n0 0\n")

    def test_ucat_round_trip(self):
        C = trace_category(upto("localisable", 3)[7])
        doc = parse(render(C))
        assert doc.kind == "ucat" and doc.payload == C

    def test_ucat_undefined_where_defined(self):
        text = render(trace_category(upto("localisable", 2)[0])).replace("comp\n0", "comp\n.", 1)
        with pytest.raises(ParseError):
            parse(text)

    def test_ucat_defined_where_undefined(self):
        C = trace_category(left_zero_band(2))
        text = render(C)
        assert "." in text
        with pytest.raises(ParseError) as err:
            parse(text.replace(".", "0", 1))
        assert err.value.line == 7  # first comp row

    def test_ucat_keeps_raw_tables(self, capsys, tmp_path):
        # parsing checks the format only; the transcription axioms are checked on demand
        # e|f = f on the left but e|f = e on the right
        C = TranscriptionCategory((0, 1), (0, 1), ((0, None), (None, 1)), ((0, 1), (0, 1)),
                                  ((0, 1), (0, 1)))
        target = tmp_path / "bad.ucat"
        target.write_text(render(C))
        assert parse_file(target).payload == C
        code, out, _ = cli(capsys, "check", "--class", "transcription", str(target))
        assert code == 1 and out.startswith("FAIL transcription: 3.1")


class TestCorpus:
    @pytest.mark.parametrize("path", corpus.files(), ids=lambda p: p.name)
    def test_render_parse_round_trip(self, path):
        doc = parse_file(path)
        text = render(doc)
        again = parse(text)
        assert again.payload == doc.payload and render(again) == text

    def test_bundled_example(self):
        S = parse_file(corpus.path("example6.uas")).payload
        assert S == example6()

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_random_structures_round_trip(self, data):
        S = data.draw(st.sampled_from(upto("star-localisable", 4) + upto("localisable", 4)))
        names = data.draw(st.lists(st.from_regex(r"[a-z][a-z0-9_]{0,3}", fullmatch=True),
                                   min_size=S.order, max_size=S.order, unique=True))
        T = FiniteUnarySemigroup(S.mul, S.plus, S.minus, S.star, tuple(names))
        back = parse(render(T)).payload
        assert back == T and back.names == T.names

    def test_json_view(self):
        obj = to_json_obj(example6())
        assert obj["mul"][0] == ["e", "a", "a", "0"] and obj["plus"] == ["e", "f", "e", "0"]
        assert "minus" not in obj


class TestCli:
    def test_check_band(self, capsys):
        code, out, _ = cli(capsys, "check", "--class", "localisable", str(corpus.path("band2.uas")))
        assert code == 0 and out == "OK localisable\n"

    def test_check_example_witness(self, capsys):
        code, out, _ = cli(capsys, "check", "--class", "left-localisable", str(corpus.path("example6.uas")))
        assert code == 1 and "4.1c at (e,f)" in out

    def test_bare_corpus_names(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert cli(capsys, "check", "--class", "localisable", "band2.uas")[0] == 0

    def test_roundtrip(self, capsys):
        code, out, _ = cli(capsys, "roundtrip", str(corpus.path("example.uas")))
        assert code == 0 and out == "tables identical\n"

    def test_roundtrip_category(self, capsys):
        assert cli(capsys, "roundtrip", str(corpus.path("brandt2.ucat")))[0] == 0

    def test_json_witness(self, capsys):
        code, out, _ = cli(capsys, "--format", "json", "check", "--class", "left-localisable",
                           str(corpus.path("example6.uas")))
        assert code == 1
        assert json.loads(out) == {"class": "left-localisable", "holds": False,
                                   "axiom": "4.1c", "witness": ["e", "f"]}

    def test_star_compatibility(self, capsys):
        code, out, _ = cli(capsys, "check", "--class", "star-localisable", str(corpus.path("semilattice2.uas")))
        assert code == 1 and "(0)" in out

    def test_derive_category_and_back(self, capsys, tmp_path):
        target = tmp_path / "c.ucat"
        code, _, _ = cli(capsys, "--output", str(target), "derive-category", str(corpus.path("example.uas")))
        assert code == 0
        assert parse_file(target).payload == parse_file(corpus.path("example.ucat")).payload
        code, out, _ = cli(capsys, "derive-semigroup", str(target))
        assert code == 0 and parse(out).payload == parse_file(corpus.path("example.uas")).payload

    def test_derive_category_of_non_localisable(self, capsys):
        code, out, _ = cli(capsys, "derive-category", str(corpus.path("example6.uas")))
        assert code == 1 and out == "FAIL: 4.1c at (e,f)\n"

    def test_enumerate_digests(self, capsys):
        code, out, _ = cli(capsys, "enumerate", "--order", "3", "--class", "localisable", "--digests")
        assert code == 0
        assert out.split() == enumerate_digests(SearchSpec(3, "localisable"))

    def test_enumerate_aliases_and_documents(self, capsys):
        code, out, _ = cli(capsys, "enumerate", "--order", "2", "--class", "*-localisable")
        assert code == 0 and out.count("uas 1") == 4 and out.endswith("# 4 structures\n")

    def test_enumerate_too_large(self, capsys):
        code, _, err = cli(capsys, "enumerate", "--order", "9", "--class", "localisable")
        assert code == 2 and "order" in err

    def test_classify(self, capsys):
        code, out, _ = cli(capsys, "classify", str(corpus.path("example6.uas")))
        assert code == 0
        assert "4.1c at (e,f)" in out

    @pytest.mark.parametrize("which", ["mu", "orders", "greens", "congruences"])
    def test_relations(self, capsys, which):
        code, out, _ = cli(capsys, "--format", "json", "relations", "--which", which,
                           str(corpus.path("example.uas")))
        assert code == 0 and json.loads(out)

    def test_mu_of_reduced_monoid(self, capsys):
        code, out, _ = cli(capsys, "relations", "--which", "mu", str(corpus.path("example.uas")))
        assert "mu classes: {0,a,1}" in out and "fundamental: no" in out

    def test_reps(self, capsys):
        code, out, _ = cli(capsys, "reps", str(corpus.path("brandt2.uas")))
        assert code == 0 and out.startswith("delta")

    def test_counterexample(self, capsys):
        code, out, _ = cli(capsys, "counterexample", "--has", "weakly-left-E-abundant",
                           "--lacks", "left-localisable")
        assert code == 0 and "4.1b at (0,0)" in out
        assert parse(out).payload == FiniteUnarySemigroup([[0, 1], [0, 1]], plus=(1, 0))

    def test_counterexample_not_found(self, capsys):
        code, out, _ = cli(capsys, "counterexample", "--has", "ehresmann", "--lacks", "localisable",
                           "--max-order", "2")
        assert code == 1 and "order <= 2" in out

    def test_missing_unary(self, capsys):
        code, _, err = cli(capsys, "check", "--class", "localisable", str(corpus.path("example6.uas")))
        assert code == 2 and "minus" in err

    def test_usage_errors(self, capsys, tmp_path):
        assert cli(capsys, "check", "--class", "nope", str(corpus.path("band2.uas")))[0] == 2
        assert cli(capsys, "check", "--class", "band", str(tmp_path / "none.uas"))[0] == 2
        assert cli(capsys, "frobnicate")[0] == 2
        bad = tmp_path / "bad.uas"
        bad.write_text("uas 1\norder 2\nnames x x\nmul\nx x\nx x\n")
        code, _, err = cli(capsys, "check", "--class", "band", str(bad))
        assert code == 2 and "line 3" in err

    def test_non_associative_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.uas"
        bad.write_text("uas 1\norder 2\nmul\n1 0\n0 0\n")
        code, out, _ = cli(capsys, "check", "--class", "semigroup", str(bad))
        assert code == 1 and out.startswith("FAIL: associativity at (")

    def test_console_script(self):
        proc = subprocess.run([sys.executable, "-m", "transcat.cli", "check", "--class", "band",
                               str(corpus.path("band2.uas"))], capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout == "OK band\n"

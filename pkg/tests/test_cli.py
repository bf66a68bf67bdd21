import json

import pytest

from trihex.core import verification
from trihex.main import build_parser, main


class TestEquiv:
    def test_worked_example(self, run_cli):
        code, out, err = run_cli("equiv", "5,2,2")
        assert code == 0
        assert out == "(5,2,2) (8,1,4) (17,0,3)\n"

    def test_tetrahedron(self, run_cli):
        assert run_cli("equiv", "0,0,0")[1] == "(0,0,0)\n"

    def test_offset_out_of_range(self, run_cli):
        code, out, err = run_cli("equiv", "2,1,5")
        assert code == 2
        assert out == ""
        assert "offset out of range" in err

    def test_malformed_signature(self, run_cli):
        code, _, err = run_cli("equiv", "five")
        assert code == 2
        assert err.startswith("error:")

    def test_verbose_shows_derivation(self, run_cli):
        _, out, _ = run_cli("equiv", "5,2,2", "--verbose")
        lines = out.splitlines()
        assert lines[1] == "h=34"
        assert lines[2] == "j2=3 p2=1 sig2=(8,1,4)"
        assert lines[3] == "j3=6 p3=5 sig3=(17,0,3)"

    def test_json(self, run_cli):
        _, out, _ = run_cli("equiv", "5,2,2", "--format", "json", "--verbose")
        payload = json.loads(out)
        assert payload["order"] == ["5,2,2", "8,1,4", "17,0,3"]
        assert payload["derivation"]["h"] == 34


def test_mirror(run_cli):
    assert run_cli("mirror", "3,1,2")[1] == "(3,1,0)\n"


@pytest.mark.parametrize("text, verdict", [("2,0,1", "tight"), ("5,0,1", "not tight"), ("0,1,0", "not tight")])
def test_tight(run_cli, text, verdict):
    code, out, _ = run_cli("tight", text)
    assert code == 0
    assert out == f"({text}) {verdict}\n"


def test_classes(run_cli):
    code, out, _ = run_cli("classes", "24")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "(5,0,0) (5,0,5) (0,5,0) 10 24"
    assert len(lines) == 4
    assert sum(1 for line in lines if line.endswith(" chiral")) == 2


def test_classes_rejects_bad_vertex_count(run_cli):
    code, _, err = run_cli("classes", "10")
    assert code == 2
    assert "multiple of 4" in err


class TestCensus:
    def test_single_row(self, run_cli):
        code, out, err = run_cli("census", "4")
        assert code == 0
        assert out == "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6\n4,1,1,1,1,1\n"
        assert "census: 1 rows" in err

    def test_below_minimum(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["census", "3"])
        assert excinfo.value.code == 2
        assert "below minimum" in capsys.readouterr().err

    def test_writes_file(self, run_cli, tmp_path):
        target = tmp_path / "census.csv"
        code, out, _ = run_cli("census", "200", "--out", str(target))
        rows = target.read_text(encoding="utf-8").splitlines()
        assert code == 0
        assert len(rows) == 51
        assert rows[-1] == "200,93,31,17,31,16"
        assert out.startswith("census: 50 rows")

    def test_unwritable_path(self, run_cli, tmp_path):
        code, _, err = run_cli("census", "8", "--out", str(tmp_path / "missing" / "census.csv"))
        assert code == 1
        assert "cannot write" in err

    def test_json_rows(self, run_cli):
        _, out, _ = run_cli("census", "12", "--format", "json")
        payload = json.loads(out)
        assert [row["alpha"] for row in payload] == [1, 1, 2]

    def test_parallel_workers(self, run_cli):
        _, serial, _ = run_cli("census", "60")
        _, parallel, _ = run_cli("--workers", "2", "census", "60")
        assert serial == parallel


class TestStats:
    def test_single_value(self, run_cli):
        code, out, _ = run_cli("stats", "4", "4")
        assert code == 0
        assert "alpha_gap_max: 0" in out
        assert "beta_gap_max: 0" in out

    def test_json(self, run_cli):
        _, out, _ = run_cli("stats", "4", "40", "--format", "json")
        payload = json.loads(out)
        assert payload["rows"] == 10
        assert set(payload["alpha_ratio_max"]) == {"exact", "decimal"}

    def test_inverted_range(self, run_cli):
        code, _, err = run_cli("stats", "40", "4")
        assert code == 2
        assert "invalid range" in err


class TestBuild:
    def test_graph6(self, run_cli):
        assert run_cli("build", "0,0,0", "--format", "graph6")[1] == "C~\n"

    def test_json_document(self, run_cli):
        code, out, _ = run_cli("build", "4,1,2")
        payload = json.loads(out)
        assert code == 0
        assert len(payload["vertices"]) == 40
        assert payload["method"] == "quotient"

    def test_dot(self, run_cli):
        _, out, _ = run_cli("build", "1,0,0", "--format", "dot", "--method", "spines")
        assert out.count(" -- ") == 12

    def test_svg(self, run_cli):
        _, out, _ = run_cli("build", "3,1,2", "--format", "svg")
        assert "<svg" in out

    def test_unknown_method_is_a_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["build", "0,0,0", "--method", "origami"])
        assert excinfo.value.code == 2


class TestIdentify:
    def test_round_trip_through_a_file(self, run_cli, tmp_path):
        target = tmp_path / "map.json"
        assert run_cli("build", "8,1,4", "--method", "spines", "--out", str(target))[0] == 0
        code, out, _ = run_cli("identify", str(target))
        assert code == 0
        assert out == "(17,0,3) (8,1,4) (5,2,2) as_built\n"

    def test_missing_file(self, run_cli, tmp_path):
        code, _, err = run_cli("identify", str(tmp_path / "absent.json"))
        assert code == 1
        assert "cannot read" in err

    def test_broken_document(self, run_cli, tmp_path):
        target = tmp_path / "broken.json"
        target.write_text("{}", encoding="utf-8")
        code, _, err = run_cli("identify", str(target))
        assert code == 2
        assert "unsupported document version" in err


def test_verify_small_range(run_cli):
    code, out, _ = run_cli("verify", "--vmax", "16")
    assert code == 0
    assert out.startswith("verified 15 signatures up to v=16")
    assert "0 failures" in out


def test_verify_failure_exits_with_consistency_code(run_cli, monkeypatch):
    monkeypatch.setattr(verification, "_chiral_pairs", lambda v: f"v={v} chiral count off")
    code, out, err = run_cli("verify", "--vmax", "8")
    assert code == 3
    assert "2 failures" in out
    assert "FAIL v=4 chiral count off" in out.splitlines()
    assert "Verification found failures" in err


def test_tiling(run_cli):
    code, out, _ = run_cli("tiling", "0,0,0", "6", "6")
    assert code == 0
    assert out.count('"rotocenter"') == 36


def test_json_logs_go_to_stderr(run_cli):
    code, out, err = run_cli("--log-level", "info", "--log-format", "json", "census", "8")
    assert code == 0
    records = [json.loads(line) for line in err.splitlines() if line.startswith("{")]
    assert any(record["message"] == "Census computed" for record in records)
    assert all(record.get("run_id") for record in records)
    assert out.startswith("v,sigma")


def test_parser_lists_every_command():
    parser = build_parser()
    subparsers = next(action for action in parser._actions if action.dest == "command")
    assert set(subparsers.choices) == {
        "equiv",
        "mirror",
        "tight",
        "classes",
        "census",
        "stats",
        "build",
        "identify",
        "verify",
        "tiling",
    }


def test_tight_verbose_lists_both_criteria(run_cli):
    code, out, _ = run_cli("tight", "2,0,1", "--verbose")
    assert code == 0
    assert out.splitlines() == [
        "(2,0,1) tight",
        "b=0 and f, f+1, s+1 pairwise coprime: true",
        "every class member has b=0: true",
    ]


@pytest.mark.parametrize("argv", [["census", "8", "--verbose"], ["build", "0,0,0", "--verbose"]])
def test_verbose_is_rejected_where_unused(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    assert excinfo.value.code == 2

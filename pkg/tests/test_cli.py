"""Command line interface: every verb, report shape, exit codes, determinism."""

import json

import pytest

from srcfg import cli
from srcfg.constructions import development, projective_plane, triangle_removal
from srcfg.algebra import cyclic
from srcfg.incidence import write_configuration


def run_json(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def strip_timing(report):
    report = dict(report)
    report.pop("timing", None)
    return report


@pytest.fixture()
def z13_file(tmp_path):
    path = tmp_path / "z13.cfg"
    write_configuration(development(cyclic(13), (7, 8, 11)), path)
    return str(path)


class TestReportShape:
    def test_keys_and_command(self, capsys):
        code, rep = run_json(capsys, ["feasible-table", "--vmax", "30"])
        assert code == 0
        assert sorted(rep) == ["check", "command", "inputs", "results", "timing"]
        assert rep["command"] == "feasible-table"
        assert isinstance(rep["timing"]["seconds"], float)
        assert rep["check"] is None

    def test_deterministic_modulo_timing(self, capsys):
        _, a = run_json(capsys, ["feasible-table", "--vmax", "60"])
        _, b = run_json(capsys, ["feasible-table", "--vmax", "60"])
        assert strip_timing(a) == strip_timing(b)


class TestFeasibleTable:
    def test_counts_at_200(self, capsys):
        code, rep = run_json(capsys, ["feasible-table", "--vmax", "200"])
        assert code == 0
        assert rep["results"]["counts"]["feasible"] == 41
        assert rep["results"]["counts"]["candidates"] == 64
        rows = rep["results"]["rows"]
        assert len(rows) == 41
        assert rows[32]["params"] == "(155_7;17,9)"

    def test_all_rows(self, capsys):
        _, rep = run_json(capsys, ["feasible-table", "--vmax", "200", "--all-rows"])
        assert len(rep["results"]["rows"]) == 67

    def test_text_format(self, capsys):
        code = cli.run(["feasible-table", "--vmax", "200", "--format", "text"])
        out = capsys.readouterr().out
        assert code == 0
        assert "feasible 41" in out


class TestConstructVerify:
    def test_moore(self, capsys):
        code, rep = run_json(capsys, ["construct", "moore", "--graph", "petersen"])
        assert code == 0
        assert rep["results"]["params"] == "(10_3;3,4)"

    def test_triangle_removal_out_and_verify(self, capsys, tmp_path):
        out = tmp_path / "tr7.cfg"
        code, rep = run_json(capsys, ["construct", "triangle-removal",
                                      "--order", "7", "--out", str(out)])
        assert code == 0
        assert rep["results"]["params"] == "(36_5;10,12)"
        assert out.exists()
        code, rep = run_json(capsys, ["verify", str(out)])
        assert code == 0
        assert rep["results"]["valid"] is True
        assert rep["results"]["violations"] == []
        assert rep["results"]["proper"] is True
        assert rep["results"]["primitivity"] == "primitive"

    def test_development_catalog(self, capsys):
        code, rep = run_json(capsys, ["construct", "development",
                                      "--catalog", "z13"])
        assert code == 0
        assert rep["results"]["params"] == "(13_3;2,3)"

    def test_development_explicit(self, capsys):
        code, rep = run_json(capsys, ["construct", "development",
                                      "--group", "cyclic(13)",
                                      "--set", "7,8,11"])
        assert code == 0
        assert rep["results"]["params"] == "(13_3;2,3)"

    def test_lp4_flags(self, capsys):
        code, rep = run_json(capsys, ["construct", "lp4", "--order", "2",
                                      "--hyperplane-polarity"])
        assert code == 0
        assert rep["results"]["params"] == "(155_7;17,9)"
        assert rep["results"]["geometry"]["kind"] == "general"

    def test_verify_reports_violations(self, capsys, tmp_path):
        bad = tmp_path / "bad.cfg"
        bad.write_text("4 2\n0 1\n0 1\n2 3\n2 3\n")
        code, rep = run_json(capsys, ["verify", str(bad)])
        assert code == 1
        assert rep["results"]["valid"] is False
        assert rep["results"]["violations"]


class TestAnalysisVerbs:
    def test_classify(self, capsys):
        code, rep = run_json(capsys, ["classify", "--graph", "paley(13)",
                                      "--k", "3"])
        assert code == 0
        r = rep["results"]
        assert r["cliques"] == 26
        assert r["configurations"] == 2
        assert len(r["classes"]) == 1
        assert r["classes"][0]["aut_order"] == 39

    def test_sdds_check(self, capsys):
        code, rep = run_json(capsys, ["sdds-check", "--group", "cyclic(13)",
                                      "--set", "7,8,11"])
        assert code == 0
        assert rep["results"]["sdds"] is True
        assert rep["results"]["lam"] == 2
        assert rep["results"]["mu"] == 3

    def test_sdds_check_negative(self, capsys):
        code, rep = run_json(capsys, ["sdds-check", "--group", "cyclic(13)",
                                      "--set", "0,1,2"])
        assert code == 1
        assert rep["results"]["sdds"] is False

    def test_sdds_search_develop(self, capsys):
        code, rep = run_json(capsys, ["sdds-search", "--group", "cyclic(13)",
                                      "--k", "3", "--lambda", "2", "--mu", "3",
                                      "--develop", "--threads", "2"])
        assert code == 0
        r = rep["results"]
        assert r["sets"] == [[0, 1, 4], [0, 1, 10], [0, 2, 7], [0, 2, 8]]
        assert r["classes"][0]["aut_order"] == 39
        assert len(r["classes"]) == 1

    def test_iso_aut_dual_spectrum(self, capsys, z13_file, tmp_path):
        other = tmp_path / "tr5.cfg"
        write_configuration(triangle_removal(projective_plane(5)), other)

        code, rep = run_json(capsys, ["iso", z13_file, z13_file])
        assert code == 0 and rep["results"]["isomorphic"] is True

        code, rep = run_json(capsys, ["iso", z13_file, str(other)])
        assert code == 0 and rep["results"]["isomorphic"] is False

        code, rep = run_json(capsys, ["aut", z13_file])
        assert code == 0 and rep["results"]["order"] == 39

        out = tmp_path / "dual.cfg"
        code, rep = run_json(capsys, ["dual", z13_file, "--out", str(out)])
        assert code == 0 and rep["results"]["self_dual"] is True
        assert out.exists()

        code, rep = run_json(capsys, ["spectrum", z13_file])
        assert code == 0
        assert rep["results"]["kind"] == "general"
        assert sum(rep["results"]["histogram"].values()) == 13 * 10


class TestReproduce:
    def test_list(self, capsys):
        code, rep = run_json(capsys, ["reproduce", "--list"])
        assert code == 0
        ids = [c["id"] for c in rep["results"]]
        assert ids == [f"C{i}" for i in range(1, 14)]

    def test_c2_matches(self, capsys):
        code, rep = run_json(capsys, ["reproduce", "C2"])
        assert code == 0
        assert rep["check"]["match"] is True
        assert rep["check"]["expected"] == rep["check"]["observed"]

    def test_c3_matches(self, capsys):
        code, rep = run_json(capsys, ["reproduce", "C3"])
        assert code == 0
        assert rep["check"]["match"] is True

    def test_c4_matches(self, capsys):
        code, rep = run_json(capsys, ["reproduce", "C4"])
        assert code == 0
        assert rep["check"]["match"] is True

    def test_unknown_claim(self, capsys):
        code = cli.run(["reproduce", "C99"])
        err = capsys.readouterr().err
        assert code == 1
        assert "error" in err


class TestErrors:
    def test_usage_error_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.run(["no-such-verb"])
        assert exc.value.code == 2

    def test_missing_file(self, capsys):
        code = cli.run(["verify", "/nonexistent/path.cfg"])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_bad_graph_spec(self, capsys):
        code = cli.run(["classify", "--graph", "nonsense(3)", "--k", "3"])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_construct_needs_arguments(self, capsys):
        code = cli.run(["construct", "moore"])
        assert code == 1
        assert "error" in capsys.readouterr().err

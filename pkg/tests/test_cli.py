from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from schubcalc.cli import run
from schubcalc.fq import TrialReport
from schubcalc.partitions import parse_partition, parse_shifted
from schubcalc.polynomials import IntPolynomial
from schubcalc.schur import SchurExpansion
from schubcalc.selftest import SUITES
from schubcalc.tableaux import Tableau


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv) -> str:
    code, out, err = call(*argv)
    assert code == 0, err
    return out.strip()


def js(*argv):
    return json.loads(ok("--json", *argv))


class TestRequiredOutputs:
    def test_four_lines(self):
        assert ok("count", "--grassmannian", "4,2", "--classes", "1", "1", "1", "1") == "2"

    def test_syt(self):
        assert ok("syt", "--shape", "2,2") == "2"

    def test_bruhat(self):
        assert ok("bruhat", "--le", "14325", "45132") == "true"
        assert ok("bruhat", "--le", "45132", "14325") == "false"

    def test_plucker(self):
        assert ok("plucker", "--matrix", "[[0,0,1,2],[1,-3,0,3]]") == "(0:-1:-2:3:6:3)"
        assert ok("plucker", "--matrix", "[[0,0,1,2],[1,-3,0,3]]", "--q", "7") == "(0:6:5:3:6:3)"


class TestCommands:
    def test_lr(self):
        assert ok("lr", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1").splitlines()[0] == "2"

    def test_product_and_grprod(self):
        assert ok("product", "1", "1") == "s[2] + s[1,1]"
        assert ok("grprod", "--grassmannian", "4,2", "1,1", "2") == "0"
        assert ok("grprod", "--grassmannian", "5,2", "1,1", "2") == "s[3,1]"

    def test_pieri(self):
        assert ok("pieri", "--r", "1", "--lambda", "2,1", "--grassmannian", "4,2") == "s[2,2]"

    def test_dual(self):
        assert ok("dual", "--grassmannian", "5,2", "--lambda", "2,1", "--mu", "2,1") == "1"
        assert ok("dual", "--grassmannian", "5,2", "--lambda", "3", "--mu", "2,1") == "0"

    def test_five_chains(self):
        text = ok("count", "--grassmannian", "7,3", "--classes", "2,1", "2,1", "3,1", "2", "--chains")
        assert text.splitlines()[0] == "5"
        assert text.count("chain ") == 5

    def test_syt_list(self):
        assert ok("syt", "--shape", "2,2", "--list").split("\n\n") == ["2", "1 2\n3 4", "1 3\n2 4"]

    def test_schubert_and_monk(self):
        assert ok("schubert", "321") == "x1^2*x2"
        assert ok("monk", "--i", "2", "--w", "132") == "S[1423] + S[231]"

    def test_pq(self):
        assert ok("pq", "s:1", "s:2") == "P[3] + P[2,1]"
        assert ok("pq", "s:1", "s:2", "--method", "both") == "P[3] + P[2,1]"
        assert ok("pq", "--expand", "s:1", "--variant", "Q", "--vars", "2") == "2*x1 + 2*x2"

    def test_ogcount(self):
        assert ok("ogcount", "--n", "3", "--classes", *["s:1"] * 6) == "2"

    def test_oracle_census_and_cell(self):
        assert "35" in ok("oracle", "census", "--grassmannian", "4,2", "--q", "2")
        assert ok("oracle", "cell", "--n", "4", "--lambda", "4,3,1", "--q", "3") == "729"

    def test_oracle_gr_trials(self):
        d = js("oracle", "gr", "--grassmannian", "4,2", "--classes", "1", "1", "1", "1",
               "--q", "7", "--trials", "5", "--seed", "1")
        assert d["field"] == 49 and d["trials"] == 5 and d["modal"] == 2

    def test_oracle_gr_explicit_flags(self, tmp_path):
        eye = [[int(i == j) for j in range(4)] for i in range(4)]
        anti = [row[::-1] for row in eye]
        path = tmp_path / "flags.json"
        path.write_text(json.dumps([anti, eye]))
        base = ["oracle", "gr", "--grassmannian", "4,2", "--q", "3", "--ext", "1", "--flags", str(path)]
        # lines meeting two skew lines: a point on each, (q+1)^2 of them
        assert ok(*base, "--classes", "1", "1") == "16"
        # complementary classes against opposite flags meet in one point
        assert ok(*base, "--classes", "2", "2") == "1"


class TestJson:
    def test_expansion_round_trip(self):
        d = js("product", "2,1", "2,1")
        e = SchurExpansion({parse_partition(k): v for k, v in d.items()})
        assert e[(3, 2, 1)] == 2
        assert SchurExpansion.from_json(json.dumps(d)) == e

    def test_polynomial_round_trip(self):
        d = js("schubert", "132")
        assert IntPolynomial.from_json(json.dumps(d)) == IntPolynomial.var(1) + IntPolynomial.var(2)

    def test_tableaux_round_trip(self):
        d = js("syt", "--shape", "2,2", "--list")
        ts = [Tableau.from_json(json.dumps(t)) for t in d]
        assert [t.rows for t in ts] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]

    def test_count_with_chains(self):
        d = js("count", "--grassmannian", "4,2", "--classes", "1", "1", "1", "1", "--chains")
        assert d["count"] == 2 and len(d["chains"]) == 2
        for chain in d["chains"]:
            assert [Tableau.from_json(json.dumps(t)).shape.outer for t in chain][-1] == (2, 2)

    def test_pq(self):
        d = js("pq", "s:1", "s:2")
        assert {parse_shifted(k): v for k, v in d.items()} == {parse_shifted("s:3"): 1, parse_shifted("s:2,1"): 1}

    def test_scalars(self):
        assert js("bruhat", "--le", "14325", "45132") is True
        assert js("count", "--grassmannian", "4,2", "--classes", "1", "1", "1", "1") == 2
        assert js("plucker", "--matrix", "[[0,0,1,2],[1,-3,0,3]]") == [0, -1, -2, 3, 6, 3]
        assert js("monk", "--i", "1", "--w", "21") == [[3, 1, 2]]

    def test_json_flag_after_command(self):
        assert ok("bruhat", "--le", "12", "21", "--json") == "true"

    def test_trial_report_round_trip(self):
        d = js("oracle", "og", "--n", "2", "--classes", "1", "1", "1", "--q", "5", "--trials", "3", "--seed", "2")
        r = TrialReport(d["field"], d["counts"], d["flag_field"])
        assert r.to_json() == {k: v for k, v in d.items() if k in r.to_json()}


class TestDeterminism:
    @pytest.mark.parametrize("argv", [
        ["oracle", "gr", "--grassmannian", "4,2", "--classes", "1", "1", "1", "1", "--trials", "3", "--seed", "5"],
        ["--json", "oracle", "og", "--n", "2", "--classes", "1", "1", "1", "--q", "3", "--trials", "3", "--seed", "9"],
        ["count", "--grassmannian", "7,3", "--classes", "2,1", "2,1", "3,1", "2", "--chains"],
    ])
    def test_byte_identical(self, argv):
        assert call(*argv) == call(*argv)

    def test_threads_do_not_change_results(self):
        base = ["--json", "oracle", "gr", "--grassmannian", "4,2", "--classes", "1", "1", "1", "1",
                "--trials", "4", "--seed", "3"]
        assert ok(*base) == ok(*base, "--threads", "2")


class TestErrors:
    @pytest.mark.parametrize("argv", [
        ["frobnicate"],
        [],
        ["lr", "--lambda", "2,1"],
        ["lr", "--lambda", "1,2", "--mu", "1", "--nu", "2,1"],
        ["count", "--grassmannian", "4,2", "--classes", "3"],
        ["count", "--grassmannian", "4,2", "--classes", "1", "1", "1"],
        ["count", "--grassmannian", "4", "--classes", "1"],
        ["bruhat", "--le", "123", "1234"],
        ["schubert", "112"],
        ["monk", "--i", "0", "--w", "12"],
        ["pq", "s:2,2"],
        ["ogcount", "--n", "2", "--classes", "s:3"],
        ["plucker", "--matrix", "[[1,2],[3]]"],
        ["plucker", "--matrix", "not json"],
        ["oracle", "census", "--q", "6", "--grassmannian", "4,2"],
        ["oracle", "cell", "--n", "2"],
        ["selftest", "--suite", "nope"],
        ["--threads", "0", "syt", "--shape", "1"],
    ])
    def test_validation_exit_2(self, argv):
        code, out, err = call(*argv)
        assert code == 2
        assert out == ""
        assert err.startswith("error") or "usage" in err

    def test_cap_exit_3(self):
        code, out, err = call("--cap", "10", "oracle", "census", "--grassmannian", "6,3", "--q", "3")
        assert code == 3 and out == "" and "cap" in err


class TestSelftest:
    def test_suite_list(self):
        assert "fq-agreement" in SUITES

    @pytest.mark.parametrize("suite", sorted(SUITES))
    def test_each_suite_passes(self, suite):
        text = ok("selftest", "--suite", suite)
        assert text.startswith(f"PASS {suite}:")

    def test_only_requested_suite_runs(self):
        d = js("selftest", "--suite", "monk")
        assert [r["suite"] for r in d] == ["monk"] and d[0]["passed"]


def test_console_script_module_entry():
    proc = subprocess.run([sys.executable, "-m", "schubcalc.cli", "syt", "--shape", "3,2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "5"

import json

import pytest

from kpeterson.cli import main, parse_phi_expr
from kpeterson.partitions import Partition
from kpeterson.polynomials import Poly
from kpeterson.scalars import Rational
from kpeterson.symfunc import SymFunc


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_gdual_json(self, capsys):
        code, out, _ = run_cli(capsys, "gdual", "1,1")
        assert code == 0
        h = SymFunc.h
        assert SymFunc.from_json(json.loads(out)) == h(1) ** 2 - h(2) + h(1)

    def test_klr(self, capsys):
        code, out, _ = run_cli(capsys, "klr", "1", "1", "2,1")
        assert code == 0 and json.loads(out) == 1

    def test_gstable(self, capsys):
        code, out, _ = run_cli(capsys, "gstable", "1", "2")
        assert code == 0
        poly = Poly.from_json(json.loads(out))
        v = poly.vars
        x1, x2 = Poly.variable(v, "x1"), Poly.variable(v, "x2")
        assert poly == x1 + x2 - x1 * x2

    def test_phi_x1_at_n2(self, capsys):
        code, out, _ = run_cli(capsys, "phi", "--n", "2", "--poly", "x1")
        assert code == 0
        data = json.loads(out)
        assert SymFunc.from_json(data["num"]) == SymFunc.one()
        assert SymFunc.from_json(data["den"]) == 1 + SymFunc.h(1)

    def test_phi_z1_at_n2(self, capsys):
        code, out, _ = run_cli(capsys, "phi", "--n", "2", "--poly", "z1")
        data = json.loads(out)
        assert SymFunc.from_json(data["num"]) == SymFunc.h(1)
        assert SymFunc.from_json(data["den"]) == 1 + SymFunc.h(1)

    def test_lambda_map_text(self, capsys):
        code, out, _ = run_cli(capsys, "lambda-map", "1432")
        assert code == 0 and json.loads(out) == "2,1,1"

    def test_kconj(self, capsys):
        code, out, _ = run_cli(capsys, "kconj", "3,2,2", "--k", "4")
        assert code == 0 and json.loads(out) == "2,2,1,1,1"

    def test_ddet(self, capsys):
        code, out, _ = run_cli(
            capsys, "ddet", "--n", "3", "--theta", "1,0", "--a", "0,0"
        )
        assert code == 0
        from kpeterson.peterson import tau_sigma

        assert SymFunc.from_json(json.loads(out)) == tau_sigma(3).tau[2]

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "result.json"
        code, out, _ = run_cli(capsys, "gdual", "2", "--out", str(path))
        assert code == 0 and out == ""
        assert SymFunc.from_json(json.loads(path.read_text())) == SymFunc.h(2)


class TestExprParser:
    def test_rational_constants_and_powers(self):
        p = parse_phi_expr("3/4*z1^2 - (1 - Q1)", 2)
        v = p.vars
        z1, Q1 = Poly.variable(v, "z1"), Poly.variable(v, "Q1")
        assert p == z1 * z1 * Rational(3, 4) - 1 + Q1

    def test_parse_error_has_position(self, capsys):
        code, _, err = run_cli(capsys, "phi", "--n", "2", "--poly", "z1 +")
        assert code == 2 and "position" in err

    def test_out_of_range_variable(self, capsys):
        code, _, err = run_cli(capsys, "phi", "--n", "2", "--poly", "z3")
        assert code == 2


class TestVerify:
    def test_suite_runs_green(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "example-1-2")
        assert code == 0
        data = json.loads(out)
        assert {c["status"] for c in data["cases"]} == {"pass"}

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["verify", "nonsense"])
        assert err.value.code == 2

    def test_toda_roundtrip_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "toda-roundtrip", "--n", "3", "--trials", "5", "--seed", "7"
        )
        assert code == 0
        data = json.loads(out)
        assert data == {"trials": 5, "failures": 0, "seed": 7}

    def test_report_determinism(self, capsys):
        def strip(payload):
            for case in payload["cases"]:
                case.pop("elapsed_ms")
            return payload

        code1, out1, _ = run_cli(
            capsys, "verify", "toda-roundtrip", "--n", "2", "--trials", "5", "--seed", "3"
        )
        code2, out2, _ = run_cli(
            capsys, "verify", "toda-roundtrip", "--n", "2", "--trials", "5", "--seed", "3"
        )
        assert code1 == code2 == 0
        assert strip(json.loads(out1)) == strip(json.loads(out2))

    def test_jobs_flag_keeps_order(self, capsys):
        code1, out1, _ = run_cli(
            capsys, "verify", "lambda-tables", "--n", "4", "--jobs", "4"
        )
        code2, out2, _ = run_cli(capsys, "verify", "lambda-tables", "--n", "4")
        ids1 = [c["id"] for c in json.loads(out1)["cases"]]
        ids2 = [c["id"] for c in json.loads(out2)["cases"]]
        assert code1 == code2 == 0 and ids1 == ids2

    def test_conjecture_tier_never_fails_process(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "conjecture7-4", "--n", "5")
        assert code == 0
        data = json.loads(out)
        assert all(c["status"] == "reported" for c in data["cases"])

    def test_conjecture2_emits_per_permutation_records(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "conjecture2", "--n", "4")
        assert code == 0
        data = json.loads(out)
        rows = [
            json.loads(c["lhs"].split("; ", 1)[1])
            for c in data["cases"]
            if c["id"].startswith("divisibility-")
        ]
        assert len(rows) == 24
        sample = {r["w"]: r for r in rows}["1432"]
        assert sample["lambda"] == "2,1,1"
        assert sample["lambda_conj"] == "2,1,1"
        assert sample["divisibility"] is True
        assert sample["gtilde"]

    def test_run_suite_rejects_unknown_name(self):
        from kpeterson.suites import run_suite

        with pytest.raises(ValueError):
            run_suite("no-such-suite")

    def test_groth_commands(self, capsys):
        code, out, _ = run_cli(capsys, "groth", "21")
        assert code == 0
        assert Poly.from_json(json.loads(out)).to_str() == "x1"
        code, out, _ = run_cli(capsys, "qgroth", "21", "--text")
        assert code == 0 and out.strip() == "-x1*Q1 + x1 + Q1"
        code, out, _ = run_cli(capsys, "gtilde", "12543", "--text")
        assert code == 0 and "h" in out

    def test_mismatched_n_flag(self, capsys):
        with pytest.raises(SystemExit):
            main(["groth", "21", "--n", "3"])

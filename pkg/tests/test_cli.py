import json

import pytest

from twodom.cli import decimal_str, main
from twodom.graph import parse_edge_list
from twodom.lp import solve_min_a


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exact_named(capsys):
    code, out, _ = run(capsys, "exact", "--named", "K4xK2")
    assert code == 0
    assert out.strip() == "gamma2 = 4"


def test_exact_limit_error(capsys):
    code, _, err = run(capsys, "exact", "--named", "K4xK2", "--limit", "4")
    assert code == 2
    assert "error" in err


def test_check_coeffs_builtin(capsys):
    code, out, _ = run(capsys, "check-coeffs", "--builtin", "6")
    assert code == 0
    assert out.strip() == "41 condition families: all satisfied"


def test_check_coeffs_failing_file(tmp_path, capsys):
    doc = {"d": 6, "s": 1, "a": 0, "y": [0] * 8, "b": [0] * 8}
    path = tmp_path / "zero.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "check-coeffs", "--coeffs", str(path))
    assert code == 1
    assert "violated" in out


def test_check_coeffs_report_out(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "check-coeffs", "--builtin", "7", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["version"] == 1 and doc["overall"] is True


def test_optimize_prints_decimal(capsys):
    code, out, _ = run(capsys, "optimize", "-d", "6")
    assert code == 0
    expected = decimal_str(solve_min_a(6).objective)
    assert out.strip() == f"a* = {expected}"


def test_optimize_json_out(tmp_path, capsys):
    path = tmp_path / "opt.json"
    code, _, _ = run(capsys, "optimize", "-d", "6", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["version"] == 1
    assert doc["d"] == 6
    assert doc["verified"] is True
    assert "/" in doc["a_star"]
    assert "a" in doc["assignment"]


def test_solve_weight_with_certificate(tmp_path, capsys):
    path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "solve", "--named", "K7", "--builtin", "6",
                       "--algorithm", "weight", "--out", str(path))
    assert code == 0
    assert "|D| = 2" in out
    assert "2-dominating: true" in out
    doc = json.loads(path.read_text())
    assert doc["version"] == 1
    assert doc["ok"] is True
    assert doc["algorithm"] == "weight"
    assert len(doc["final_D"]) == 2


def test_solve_rule_trace(capsys):
    code, out, _ = run(capsys, "solve", "--named", "K7", "--builtin", "6",
                       "--algorithm", "rule", "--trace")
    assert code == 0
    assert "step 1: rule 1" in out
    assert "step 2: rule 5" in out


def test_solve_swap(capsys):
    code, out, _ = run(capsys, "solve", "--named", "K4xK2", "--algorithm", "swap")
    assert code == 0
    assert "|D| = 4" in out
    assert "both parts 2-dominating: true" in out


def test_solve_requires_coefficients(capsys):
    code, _, err = run(capsys, "solve", "--named", "K7", "--algorithm", "weight")
    assert code == 2
    assert "error" in err


def test_solve_low_degree_is_usage_error(capsys):
    code, _, err = run(capsys, "solve", "--named", "K4", "--builtin", "6")
    assert code == 2
    assert "error" in err


def test_verify_corollary(capsys):
    code, out, _ = run(capsys, "verify-corollary")
    assert code == 0
    assert "corollary fractions verified" in out


def test_table1_single_delta(capsys):
    code, out, _ = run(capsys, "table1", "--deltas", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("delta")
    assert lines[1].startswith("our bound")
    assert lines[2].startswith("reference bound")
    assert "0.50000" in lines[2]


def test_gen_named_roundtrip(capsys):
    code, out, _ = run(capsys, "gen", "--named", "C5")
    assert code == 0
    g = parse_edge_list(out)
    assert g.n == 5 and g.edge_count == 5


def test_gen_random_regular(capsys):
    code, out, _ = run(capsys, "gen", "--n", "12", "--d", "3", "--seed", "2")
    assert code == 0
    g = parse_edge_list(out)
    assert all(g.degree(v) == 3 for v in range(12))


def test_gen_missing_flags(capsys):
    code, _, err = run(capsys, "gen")
    assert code == 2
    assert "error" in err


def test_gen_parity_error(capsys):
    code, _, err = run(capsys, "gen", "--n", "7", "--d", "3")
    assert code == 2
    assert "even" in err


def test_bench_deterministic_and_csv_shape(capsys):
    code1, out1, _ = run(capsys, "bench", "--d", "6", "--trials", "2", "--seed", "3")
    code2, out2, _ = run(capsys, "bench", "--d", "6", "--trials", "2", "--seed", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0] == "d,n,seed,algorithm,size,bound,ok"
    assert len(lines) == 1 + 2 * 2  # two trials, two algorithms
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[0] == "6"
        assert fields[3] in ("rule", "weight")
        assert fields[6] == "true"


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_decimal_str_half_even():
    from fractions import Fraction
    assert decimal_str(Fraction(1, 2), 0) == "0"
    assert decimal_str(Fraction(3, 2), 0) == "2"
    assert decimal_str(Fraction(1, 3)) == "0.33333"
    assert decimal_str(Fraction(-1, 8), 3) == "-0.125"
    assert decimal_str(Fraction(456883, 918298)) == "0.49753"


def test_solve_with_coefficient_file(tmp_path, capsys):
    from twodom.weights import builtin_coefficients, coefficients_to_json
    path = tmp_path / "c6.json"
    path.write_text(json.dumps(coefficients_to_json(builtin_coefficients(6))))
    code, out, _ = run(capsys, "solve", "--named", "K7", "--coeffs", str(path))
    assert code == 0
    assert "|D| = 2" in out

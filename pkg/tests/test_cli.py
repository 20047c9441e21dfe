import io
import json
import subprocess
import sys

import pytest

from skeintorus.cli import latex, main, value_from_json
from skeintorus.laurent import LaurentPolynomial
from skeintorus.parser import evaluate
from skeintorus.peripheral import IdealPolynomial
from skeintorus.recurrence import LinearRelation


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue().rstrip("\n"), err.getvalue()


def ok(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return out


def as_json(*argv):
    return json.loads(ok("--format", "json", *argv))


class TestText:
    @pytest.mark.parametrize("argv,expected", [
        (("mul", "(1,0)", "(0,1)"), "t*(1,1) + t^-1*(1,-1)"),
        (("mul", "m", "l"), "t^-2*l*m"),
        (("mul", "a", "T[2]"), "a^3 - 2*a"),
        (("mul", "t+1", "t-1"), "t^2 - 1"),
        (("mul", "e[1,0]", "(0,1)"), "t*e[1,1] + t^-1*e[1,-1]"),
        (("act", "(1,0)", "T[2]", "--basis", "T"), "T[3] + T[1]"),
        (("act", "(0,1)", "S[1]", "--right"), "(-t^4 - t^-4)*S[1]"),
        (("act", "(1,-5)", "T[0]", "--basis", "monomial"), "-2*t^15*a"),
        (("xmap", "(1,-5)"), "-t^15*S[1]"),
        (("relation", "unknot", "1"), "(1)*kappa[2] + (t^2 + t^-2)*kappa[1] + (1)*kappa[0] = 0"),
        (("theorem2", "l^2-t^-8*l^2*m^2+l"), "fails at n = [1] (separation bound 2)"),
        (("convert", "(1,0)+t^2+t^-2"), "l^2 + (t^2 + t^-2)*l + 1"),
    ])
    def test_outputs(self, argv, expected):
        assert ok(*argv) == expected

    def test_kappa(self):
        assert ok("kappa", "unknot", "--n-max", "3").splitlines() == [
            "kappa[0] = 1",
            "kappa[1] = -t^2 - t^-2",
            "kappa[2] = t^4 + 1 + t^-4",
            "kappa[3] = -t^6 - t^2 - t^-2 - t^-6",
        ]

    def test_kappa_trefoil(self):
        lines = ok("kappa", "trefoil_left", "--n-max", "1").splitlines()
        assert lines[1] == "kappa[1] = t^18 - t^10 - t^6 - t^2"

    def test_kappa_second_element(self):
        a = ok("kappa", "unknot", "--n-max", "6")
        b = ok("kappa", "unknot", "--n-max", "6", "--element-index", "1")
        assert a == b

    def test_analyze(self):
        assert ok("analyze", "(2,1)+t^10*(2,0)").splitlines() == [
            "p_max = 2", "vanishing_n = [3]", "nu = 4", "separation_bound = 4"
        ]

    def test_convert(self):
        assert ok("convert", "(l+t^2)*(l+t^-2)").splitlines() == [
            "(1,0) + t^2 + t^-2", "recentering = e[-1,0]", "unit = 1"
        ]

    def test_catalog(self):
        text = ok("catalog", "trefoil_left")
        assert "reference peripheral element (t^3 variant): -t^-8*(1,-1) + (1,-5) + t^3*(0,5) - t*(0,1)" in text

    def test_latex(self):
        assert ok("--format", "latex", "xmap", "(0,3)") == "(-t^{6} - t^{-6}) S_{0}(\\alpha)"
        assert ok("relation", "unknot", "0", "--format", "latex") == (
            "(2) \\kappa_{1} + (2 t^{2} + 2 t^{-2}) \\kappa_{0} = 0"
        )

    def test_latex_rewriter(self):
        assert latex("1/2*e[1,-2] + (3,4)") == "\\frac{1}{2} e_{1,-2} + (3,4)_T"


class TestJson:
    @pytest.mark.parametrize("argv", [
        ("mul", "(1,0)", "(0,1)"),
        ("mul", "l", "m"),
        ("mul", "a", "S[2]"),
        ("mul", "t", "t"),
        ("mul", "e[1,0]", "e[0,1]"),
        ("act", "(1,2)", "T[3]"),
        ("xmap", "(2,1)", "--basis", "T"),
    ])
    def test_value_roundtrip(self, argv):
        assert str(value_from_json(as_json(*argv))) == ok(*argv)

    def test_relation(self):
        data = as_json("relation", "trefoil_left", "2")
        rel = LinearRelation.from_json(data)
        assert str(rel) == ok("relation", "trefoil_left", "2")
        assert set(data) == {"n", "terms"}
        assert set(data["terms"][0]) == {"kappa_index", "coeff"}

    def test_kappa(self):
        data = as_json("kappa", "trefoil_left", "--n-max", "2")
        values = [LaurentPolynomial.from_json(d["value"]) for d in data["kappa"]]
        assert str(values[1]) == "t^18 - t^10 - t^6 - t^2"
        assert data["element"]["type"] == "torus"

    def test_convert(self):
        data = as_json("convert", "(l+t^2)*(l+t^-2)")
        assert data["recentering"] == [1, 0]
        assert value_from_json(data["element"]) == evaluate("(1,0)+t^2+t^-2")
        back = as_json("convert", "(1,0)+t^2+t^-2")
        assert IdealPolynomial.from_json(back["ideal"]) == evaluate("(l+t^2)*(l+t^-2)", context="ideal")

    def test_analyze_and_theorem2(self):
        assert as_json("analyze", "unknot") == {
            "p_max": 1, "vanishing_n": [], "nu": 0, "separation_bound": 0
        }
        assert as_json("theorem2", "l^2-t^-8*l^2*m^2+l")["violating_n"] == [1]

    def test_catalog(self):
        data = as_json("catalog", "unknot")
        assert data["name"] == "unknot"
        assert value_from_json(data["peripheral_elements"][0]["element"]) == evaluate("(1,0)+t^2+t^-2")

    def test_unknown_type(self):
        with pytest.raises(ValueError):
            value_from_json({"type": "matrix"})


class TestSeeds:
    def test_seed_solves_engineered_element(self, tmp_path):
        from skeintorus.quantum_torus import cosine_multiply

        el = cosine_multiply(evaluate("(1,1) + t^9*(1,0)"), evaluate("(1,0)+t^2+t^-2"))
        seed = tmp_path / "seed.json"
        seed.write_text(json.dumps({
            "1": {"2": "-1", "-2": "-1"},
            "5": {"10": "-1", "6": "-1", "2": "-1", "-2": "-1", "-6": "-1", "-10": "-1"},
        }))
        text = ok("kappa", str(el), "--n-max", "7", "--seed", str(seed))
        assert text.splitlines()[7] == "kappa[7] = -t^14 - t^10 - t^6 - t^2 - t^-2 - t^-6 - t^-10 - t^-14"
        code, _, err = run("kappa", str(el), "--n-max", "7")
        assert code == 3 and err.startswith("MissingSeed")

    def test_missing_seed_file(self, tmp_path):
        code, _, err = run("kappa", "unknot", "--seed", str(tmp_path / "none.json"))
        assert code == 2


class TestExitCodes:
    @pytest.mark.parametrize("argv,code,name", [
        (("xmap", "T[3"), 2, "ParseError"),
        (("mul", "(1,0)", "a"), 2, "TypeMismatch"),
        (("mul", "l", "(1,0)"), 2, "TypeMismatch"),
        (("kappa", "figure8"), 4, "UnknownKnot"),
        (("relation", "trefoil_right", "0"), 4, "UnknownKnot"),
        (("kappa", "(1,0"), 2, "ParseError"),
        (("catalog", "figure8"), 4, "UnknownKnot"),
        (("frob",), 4, "UnknownCommand"),
        (("kappa", "(1,-5) - t^-8*(1,-1) + t^3*(0,5) - t*(0,1)", "--n-max", "1"), 3, "NotDivisible"),
        (("xmap", "e[1,0]"), 3, "NotSymmetric"),
        (("convert", "l+m"), 3, "NoSymmetrization"),
        (("theorem2", "l^3"), 3, "WrongDegree"),
    ])
    def test_codes(self, argv, code, name):
        got, out, err = run(*argv)
        assert got == code
        assert err.startswith(name)
        assert out == ""

    def test_parse_error_reports_offset(self):
        _, _, err = run("xmap", "T[3")
        assert "offset 3" in err

    def test_argparse_usage_error(self):
        assert run("relation", "unknot")[0] == 2


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "skeintorus", "kappa", "trefoil_left", "--n-max", "4", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["kappa"][0]["value"] == {"0": "1"}

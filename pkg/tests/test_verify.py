import pytest

from oddjm.verify import ALIASES, SUITES, formula_poly, golden, resolve_suite, run_suite


def test_aliases_resolve_to_suites():
    for name, targets in ALIASES.items():
        assert resolve_suite(name) == targets
        assert all(t in SUITES for t in targets)
    assert resolve_suite("jack") == ("jack",)
    with pytest.raises(KeyError):
        resolve_suite("nope")


def test_golden_data_is_well_formed():
    data = golden()
    assert {"averages", "weingarten", "weingarten_general_n", "second_order"} <= set(data)
    assert all({"mu", "n", "signed"} <= set(row) for row in data["weingarten"])
    assert data["second_order"]["3"] == 29


def test_formula_poly():
    # 2*alpha*n + alpha^2 - 5*alpha + 1 at alpha = 2
    terms = [[1, 1, "2"], [2, 0, "1"], [1, 0, "-5"], [0, 0, "1"]]
    assert str(formula_poly(terms, 2)) == "-5 + 4*n"


def test_quick_suites_pass():
    for name in ("coset", "weingarten-table"):
        checks = run_suite(name)
        assert checks and all(c.passed for c in checks), [c for c in checks if not c.passed]

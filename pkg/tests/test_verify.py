import json

from formdiv.corpus import INTRO_EXAMPLE
from formdiv.groups import centralizer, load_group
from formdiv.parser import parse_formula
from formdiv.verify import analyze, divisors, predicted_divisor, verify


def test_intro_divisor_with_trivial_constants(S3):
    phi = parse_formula(INTRO_EXAMPLE, ["x1", "x2"])
    assert analyze(phi).n == 8
    assert predicted_divisor(phi, S3, {"a": "e", "b": "e"}) == 2


def test_frobenius_divisor(S3):
    phi = parse_formula("x1^4 = 1", ["x1"])
    assert predicted_divisor(phi, S3, {}) == 2


def test_commutator_divisor_is_group_order():
    G = load_group("D4")
    phi = parse_formula("[x1,x2] = 1", ["x1", "x2"])
    assert analyze(phi).n == 0
    assert predicted_divisor(phi, G, {}) == 8


def test_worked_example_all_bindings(S3, worked):
    report = verify(worked, [S3])
    assert len(report.results) == 36
    assert report.ok
    assert all(r.count % r.divisor == 0 for r in report.results)


def test_isolated_constant_is_dropped_from_centralizer(S3):
    phi = parse_formula("exists t (t^-1*g*t = x1^2)", ["x1"])
    a = analyze(phi)
    assert a.isolation.isolated == frozenset({"g"})
    g = S3.element("#3")
    d = divisors(a, S3, {"g": g})
    assert d.centralizer_order == 6
    assert d.centralizer_order_all == len(centralizer(S3, [g]))
    assert d.divisor % d.divisor_all == 0


def test_divisor_all_divides_divisor(worked):
    report = verify(worked, [load_group("D4"), load_group("Q8")], seed=3)
    for r in report.results:
        assert r.divisor % r.divisor_all == 0


def test_report_json_is_deterministic(S3, worked):
    a = verify(worked, [S3], seed=1).to_json()
    b = verify(worked, [S3], seed=1).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["n"] == "2"
    assert a["invariant_factors"] == ["1", "2"]
    assert all(isinstance(x, str) for row in a["matrix"] for x in row)


def test_budget_marks_result_skipped():
    phi = parse_formula("forall y exists z (y*z*x1 = z*y*x2)", ["x1", "x2"])
    report = verify(phi, [load_group("S4")], budget=1000)
    assert [r.status for r in report.results] == ["skipped"]
    assert report.ok and report.results[0].count is None


def test_explicit_bindings(S3, worked):
    report = verify(worked, [S3], {"S3": [{"a": "e", "b": "#1"}]})
    assert len(report.results) == 1
    assert report.results[0].binding == {"a": S3.element_names[0], "b": S3.element_names[1]}

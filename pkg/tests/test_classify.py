import pytest
from hypothesis import given, strategies as st

from isprings.classify import (
    IMPLICATIONS,
    PROPERTIES,
    Verdict,
    check_implications,
    classify,
    finding,
    implication_violations,
    is_almost_multiplication,
    is_isp,
    is_marot,
    is_special_primary,
    is_strongly_isp,
    is_von_neumann_regular,
    verdict,
)
from isprings.expr import ring_from_text
from isprings.ideals import ideal_name
from isprings.integers import ZINT
from isprings.ring import make_zmod

T, F, V = Verdict.TRUE, Verdict.FALSE, Verdict.VACUOUS


def test_verdict_truthiness():
    assert T and V and not F


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("Zmod(8)", {"special_primary": T, "strongly_isp": T, "zpi": T, "von_neumann_regular": F, "isp": V}),
        ("Zmod(6)", {"von_neumann_regular": T, "strongly_isp": T, "special_primary": F}),
        ("Zmod(4)", {"von_neumann_regular": F}),
        ("Zmod(12)", {"almost_multiplication": T}),
        ("trivext(Zmod(4), mod(2))", {"isp": V, "strongly_isp": F, "ssp": F}),
        ("trivext(Zmod(2), mod(2))", {"strongly_isp": T}),
        ("trivext(Zmod(2), mod(2, 2))", {"special_primary": F, "almost_multiplication": F}),
        ("dup(trivext(Zmod(2), mod(2)), ideal((0,1)))", {"strongly_isp": F}),
        ("dup(Zmod(6), ideal(3))", {"strongly_isp": T}),
        ("dup(Zmod(8), ideal(2))", {"isp": V}),
        ("Zmod(7)", {"field": T, "special_primary": T, "almost_multiplication": T}),
    ],
)
def test_examples(expr, expected):
    R = ring_from_text(expr)
    for name, v in expected.items():
        assert verdict(R, name) is v, name


def test_false_verdicts_carry_counterexamples(corpus):
    for _, R in corpus:
        for p in PROPERTIES:
            f = finding(R, p)
            if f.verdict is F:
                assert f.counterexample is not None, (R.provenance, p)
            elif p in ("strongly_isp", "ssp", "zpi", "zpui") and f.verdict is T:
                assert f.factorizations


def test_trivext_counterexample_is_zero_times_module():
    R = ring_from_text("trivext(Zmod(4), mod(2))")
    assert ideal_name(finding(R, "strongly_isp").counterexample) == "((0,1))"


def test_finite_rings_are_total_quotient_rings(corpus):
    for _, R in corpus:
        assert verdict(R, "total_quotient") is T
        assert is_isp(R) is V and is_marot(R) is V and verdict(R, "dedekind") is V


def test_strong_equivalences_and_diagram(corpus):
    for _, R in corpus:
        values = {bool(verdict(R, p)) for p in ("strongly_isp", "ssp", "zpi", "zpui")}
        assert len(values) == 1, R.provenance
        assert check_implications(R)


@given(st.integers(2, 80))
def test_zmod_laws(n):
    Z = make_zmod(n)
    squarefree = all(n % (p * p) for p in range(2, n + 1))
    assert bool(is_von_neumann_regular(Z)) == squarefree
    assert is_strongly_isp(Z) is T
    local = sum(1 for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))) == 1
    assert bool(is_special_primary(Z)) == local
    assert is_almost_multiplication(Z) is T


def test_implication_violations_detects_broken_arrows():
    vs = {p: T for p in PROPERTIES}
    assert implication_violations(vs) == []
    vs["isp"] = F
    assert ("strongly_isp", "isp") in implication_violations(vs)
    assert len(IMPLICATIONS) == 6


def test_classify_reports_and_integers():
    report = classify(make_zmod(8))
    assert list(report.verdicts) == list(PROPERTIES)
    z = classify(ZINT)
    assert z["total_quotient"] is F and z["isp"] is T and z["strongly_isp"] is T and z["domain"] is T


def test_classify_is_deterministic():
    a = classify(ring_from_text("dup(Zmod(12), ideal(6))"))
    b = classify(ring_from_text("dup(Zmod(12), ideal(6))"))
    assert a.verdicts == b.verdicts

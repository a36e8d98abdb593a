import pytest
from hypothesis import given, strategies as st

from isprings.classify import verdict
from isprings.constructions import dup, trivext
from isprings.expr import ideal_from_text, module_from_text, ring_from_text
from isprings.ideals import all_ideals, ideal_product, is_multiplication_ideal, principal_ideal, prime_ideals
from isprings.module import is_multiplication_module
from isprings.ring import make_zmod
from isprings.theorems import THEOREM_IDS, check_theorem, module_orders, run_suite, theorem_suite


def test_all_theorem_ids_present():
    assert set(THEOREM_IDS) == {
        "prop-2.2", "thm-exten", "thm-dup", "lemma-regu", "lemma-inver", "lemma-p=jp", "prop-sisp",
        "prop-spr", "thm-sispamr", "cor-nsisp", "prop-strong", "prop-supp", "prop-car", "thm-dupli",
        "remark-tq-dup",
    }


def test_examples():
    Z6 = make_zmod(6)
    assert check_theorem("thm-dupli", Z6, principal_ideal(Z6, 3)).status == "pass"
    c = check_theorem("prop-spr", ring_from_text("trivext(Zmod(2), mod(2, 2))"))
    assert c.status == "inapplicable" and c.transcript[-1].endswith("holds")
    F = make_zmod(2)
    assert check_theorem("prop-car", F, module_from_text(F, "mod(2, 2)")).status == "pass"
    assert check_theorem("prop-2.2", make_zmod(4), make_zmod(6), make_zmod(2)).status == "pass"
    assert check_theorem("prop-sisp", make_zmod(4), make_zmod(3)).status == "pass"


def test_instance_validation():
    Z = make_zmod(4)
    with pytest.raises(ValueError):
        check_theorem("thm-dup", Z)
    with pytest.raises(ValueError):
        check_theorem("thm-dup", Z, principal_ideal(make_zmod(8), 2))
    with pytest.raises(ValueError):
        check_theorem("prop-2.2", Z)
    with pytest.raises(ValueError):
        check_theorem("prop-car", Z, principal_ideal(Z, 2))
    with pytest.raises(KeyError):
        check_theorem("thm-nope", Z)


@given(st.integers(2, 48))
def test_prime_inside_multiplication_ideal(n):
    Z = make_zmod(n)
    for I in all_ideals(Z):
        if is_multiplication_ideal(I):
            for P in prime_ideals(Z):
                if P < I:
                    assert ideal_product(I, P) == P


@given(st.sampled_from([2, 3, 4, 6, 8, 10, 12, 15]), st.data())
def test_idempotent_duplication_preserves_strong_isp(n, data):
    Z = make_zmod(n)
    idem = [principal_ideal(Z, e) for e in sorted(Z.idempotents)]
    I = data.draw(st.sampled_from(idem))
    assert bool(verdict(dup(Z, I), "strongly_isp")) == bool(verdict(Z, "strongly_isp"))


@given(st.sampled_from([2, 3, 4, 5, 6, 8, 9]), st.data())
def test_strong_trivext_descends(n, data):
    Z = make_zmod(n)
    E = module_from_text(Z, "mod(" + ", ".join(map(str, data.draw(st.sampled_from(module_orders(Z, 16))))) + ")")
    R = trivext(Z, E)
    if verdict(R, "strongly_isp"):
        assert verdict(Z, "strongly_isp")
        assert is_multiplication_module(E)


def test_suite_covers_every_theorem(corpus):
    rings = [R for _, R in corpus if R.size <= 12]
    entries = theorem_suite(rings)
    assert {tid for tid, _ in entries} == set(THEOREM_IDS)
    halves = run_suite(entries, 0, 2) + run_suite(entries, 1, 2)
    assert [i for i, _ in halves] == list(range(len(entries)))
    assert all(c.ok for _, c in halves)


def test_failing_hypothesis_is_inapplicable_not_pass():
    Z = make_zmod(4)
    c = check_theorem("thm-dupli", Z, ideal_from_text(Z, "ideal(2)"))
    assert "[(2) A⋈I strongly ISP <=> A strongly ISP] hypothesis false: inapplicable" in c.transcript

import pytest
from hypothesis import given, strategies as st

from isprings.expr import ideal_from_text, ring_from_text
from isprings.factor import (
    MODES,
    factor,
    factor_inv_primes,
    factor_inv_radical,
    factor_primes_only,
    factor_radicals_only,
)
from isprings.ideals import all_ideals, ideal_name, is_radical, principal_ideal, unit_ideal, zero_ideal
from isprings.ring import make_zmod
from oracles import bfs_factor


def _agrees(I, f, mode):
    want = bfs_factor(I.ring, frozenset(I.elements), mode)
    if want is None:
        return f is None
    J, parts = want
    return (
        f is not None
        and frozenset(f.invertible_part.elements) == J
        and [frozenset(H.elements) for H in f.radical_parts] == parts
    )


def test_inv_radical_agrees_with_bfs_oracle(small_rings):
    for R in small_rings:
        for I in all_ideals(R):
            if I.is_proper:
                assert _agrees(I, factor_inv_radical(I), "strong"), (R.provenance, ideal_name(I))


def test_prime_modes_agree_with_bfs_oracle(small_rings):
    for R in small_rings:
        for I in all_ideals(R):
            if I.is_proper:
                assert _agrees(I, factor(I, "zpi"), "zpi"), (R.provenance, ideal_name(I))


@given(st.integers(2, 64))
def test_factorizations_reconstruct_target(n):
    Z = make_zmod(n)
    for I in all_ideals(Z):
        if not I.is_proper:
            continue
        for mode in ("strong", "ssp", "zpi", "zpui"):
            f = factor(I, mode)
            if f is not None:
                assert f.product() == I
                assert f.n >= 1 and all(H.is_proper and is_radical(H) for H in f.radical_parts)


def test_zmod8_examples():
    Z = make_zmod(8)
    f = factor(principal_ideal(Z, 4), "strong")
    assert str(f) == "J=(1), H=[(2),(2)]"
    assert [ideal_name(H) for H in factor_radicals_only(zero_ideal(Z))] == ["(2)"] * 3
    assert str(factor(principal_ideal(Z, 2), "zpi")) == "J=(1), H=[(2)]"


def test_zmod6_zero_is_product_of_both_primes():
    Z = make_zmod(6)
    parts = factor_primes_only(zero_ideal(Z))
    assert sorted(ideal_name(H) for H in parts) == ["(2)", "(3)"]
    assert str(factor_inv_primes(zero_ideal(Z))) == "J=(1), H=[(3),(2)]"


def test_trivext_zero_times_e_has_no_factorization():
    R = ring_from_text("trivext(Zmod(4), mod(2))")
    I = ideal_from_text(R, "ideal((0,1))")
    for mode in ("strong", "ssp", "zpi", "zpui"):
        assert factor(I, mode) is None
    assert factor_inv_radical(I) is None


def test_rejects_unit_ideal_and_irregular_targets():
    Z = make_zmod(8)
    for mode in MODES:
        with pytest.raises(ValueError):
            factor(unit_ideal(Z), mode)
    for mode in ("isp", "sp"):
        with pytest.raises(ValueError):
            factor(principal_ideal(Z, 2), mode)
    with pytest.raises(ValueError):
        factor(principal_ideal(Z, 2), "nope")


def test_reduced_zero_ideal_is_radical_factor():
    Z = make_zmod(6)
    assert str(factor_inv_radical(zero_ideal(Z))) == "J=(1), H=[(0)]"
    Z8 = make_zmod(8)
    assert [ideal_name(H) for H in factor_radicals_only(principal_ideal(Z8, 4))] == ["(2)", "(2)"]


def test_invertible_part_is_trivial_on_finite_rings(corpus):
    for _, R in corpus:
        for I in all_ideals(R):
            if I.is_proper:
                f = factor_inv_radical(I)
                assert (f is None) == (factor_radicals_only(I) is None)
                assert f is None or f.invertible_part == unit_ideal(R)

from math import prod

import pytest
from hypothesis import given, strategies as st

from isprings.integers import (
    IntegerIdeal,
    int_factor_isp,
    int_factor_sp,
    int_factor_zpi,
    int_is_isp,
    int_radical,
    integer_ideal,
    is_squarefree,
    prime_factors,
)
from oracles import brute_squarefree, divisor_tuple_isp


def test_isp_matches_divisor_oracle_up_to_10000():
    for n in [0, *range(2, 10001)]:
        m, ds = int_factor_isp(n)
        assert (m, ds) == divisor_tuple_isp(n), n
        assert m * prod(ds) == n


@given(st.integers(2, 10**6))
def test_layers_and_primes(n):
    layers = int_factor_sp(n)
    assert prod(layers) == n and all(brute_squarefree(d) for d in layers)
    assert all(layers[i + 1] <= layers[i] and layers[i] % layers[i + 1] == 0 for i in range(len(layers) - 1))
    ps = int_factor_zpi(n)
    assert prod(ps) == n and ps == sorted(ps)
    assert int_radical(n) == prod(set(ps))
    assert is_squarefree(n) == brute_squarefree(n)


def test_small_cases():
    assert int_factor_isp(0) == (1, [0])
    assert int_factor_isp(12) == (2, [6])
    assert int_factor_sp(72) == [6, 6, 2]
    assert prime_factors(360) == [2, 2, 2, 3, 3, 5]
    for f in (int_factor_isp, int_factor_sp, int_factor_zpi):
        with pytest.raises(ValueError):
            f(1)


def test_integer_ideals():
    assert integer_ideal(12, 18) == IntegerIdeal(6)
    assert IntegerIdeal(12) <= IntegerIdeal(4) and not IntegerIdeal(4) <= IntegerIdeal(12)
    assert IntegerIdeal(0) <= IntegerIdeal(5) and not IntegerIdeal(5) <= IntegerIdeal(0)
    assert IntegerIdeal(4) * IntegerIdeal(3) == IntegerIdeal(12)
    ok, cert = int_is_isp(200)
    assert ok and cert[0] == (1, [0]) and len(cert) == 200

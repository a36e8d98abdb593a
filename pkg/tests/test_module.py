import pytest
from hypothesis import given, strategies as st

from isprings.ideals import all_ideals, principal_ideal, prime_ideals
from isprings.module import (
    annihilator,
    cyclic_module,
    ideal_module,
    ideal_times_module,
    is_divisible,
    is_module_isomorphic_to_ring,
    is_multiplication_module,
    is_simple,
    is_submodule_bits,
    localize_module,
    make_module,
    regular_module,
    submodules,
    support,
)
from isprings.ring import make_zmod
from isprings.theorems import module_orders


def _subgroup_count(orders):
    # brute force: subsets closed under addition, via generated subgroups
    from itertools import product

    elems = list(product(*(range(d) for d in orders)))

    def add(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, orders))

    found = set()
    frontier = [frozenset({tuple(0 for _ in orders)})]
    found.add(frontier[0])
    while frontier:
        S = frontier.pop()
        for e in elems:
            if e in S:
                continue
            T = set(S) | {e}
            while True:
                new = {add(x, y) for x in T for y in T} - T
                if not new:
                    break
                T |= new
            T = frozenset(T)
            if T not in found:
                found.add(T)
                frontier.append(T)
    return len(found)


@given(st.sampled_from([2, 3, 4, 6, 8, 9, 12]), st.data())
def test_reduction_module_submodules_are_subgroups(n, data):
    A = make_zmod(n)
    orders = data.draw(st.sampled_from(module_orders(A, 16)))
    E = make_module(A, orders)
    subs = submodules(E)
    assert len(subs) == _subgroup_count(orders)
    assert all(is_submodule_bits(E, V.bits) for V in subs)


def test_make_module_validation():
    F = make_zmod(2)
    with pytest.raises(ValueError, match="order 3 does not divide the characteristic 2"):
        make_module(F, [3])
    with pytest.raises(ValueError):
        make_module(F, [1])
    with pytest.raises(ValueError):
        make_module(F, [])


def test_vector_space_examples():
    F = make_zmod(2)
    E = make_module(F, [2, 2])
    assert E.size == 4 and len(submodules(E)) == 5
    assert not is_multiplication_module(E) and not is_simple(E) and is_divisible(E)
    L = make_module(F, [2])
    assert is_simple(L) and is_multiplication_module(L) and is_module_isomorphic_to_ring(L)


def test_cyclic_modules_are_multiplication_modules():
    A = make_zmod(12)
    for I in all_ideals(A):
        if I.is_proper:
            assert is_multiplication_module(cyclic_module(A, I))
    assert is_multiplication_module(regular_module(A))
    assert is_multiplication_module(ideal_module(principal_ideal(A, 2)))


def test_annihilator_support_and_localization():
    A = make_zmod(12)
    E = make_module(A, [4])
    assert annihilator(E) == principal_ideal(A, 4)
    assert support(E) == [principal_ideal(A, 2)]
    for P in prime_ideals(A):
        EP = localize_module(E, P)
        assert EP.size == (4 if P == principal_ideal(A, 2) else 1)
    E2 = localize_module(E, principal_ideal(A, 2))
    assert is_module_isomorphic_to_ring(E2)


def test_ideal_times_module():
    A = make_zmod(8)
    E = make_module(A, [8, 4])
    V = ideal_times_module(principal_ideal(A, 2), E)
    assert V.size == 8
    assert ideal_times_module(principal_ideal(A, 4), E).size == 2

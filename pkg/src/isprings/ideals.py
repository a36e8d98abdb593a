"""Ideals of a finite ring as bitsets, with lattice enumeration and arithmetic.

An ``Ideal`` is just ``(ring, bits)``. Two ideals of the same ring are equal
exactly when their bitsets are, so ``bits`` doubles as the canonical
encoding. The canonical order of ideals is by ``(size, bits)``.
"""

from dataclasses import dataclass, field

from ._bits import additive_generators, from_iter, iter_bits, popcount, span, subset, to_list
from .ring import format_value, localize_at_prime


@dataclass(frozen=True)
class Ideal:
    ring: object = field(repr=False)
    bits: int

    @property
    def size(self):
        return popcount(self.bits)

    @property
    def elements(self):
        return to_list(self.bits)

    @property
    def key(self):
        return (self.size, self.bits)

    def __contains__(self, x):
        return bool((self.bits >> x) & 1)

    def __le__(self, other):
        return subset(self.bits, other.bits)

    def __lt__(self, other):
        return self.bits != other.bits and subset(self.bits, other.bits)

    @property
    def is_proper(self):
        return not (self.bits >> self.ring.one) & 1

    @property
    def is_zero(self):
        return self.bits == 1

    @property
    def is_regular(self):
        return any((self.bits >> r) & 1 for r in self.ring.regular_elements)

    def __repr__(self):
        return f"Ideal{ideal_name(self)}@{self.ring.provenance}"


def _full(A):
    return (1 << A.size) - 1


def unit_ideal(A):
    return Ideal(A, _full(A))


def zero_ideal(A):
    return Ideal(A, 1)


def is_ideal_bits(A, bits):
    """Closure under addition, negation and multiplication by every element."""
    members = to_list(bits)
    if not bits & 1:
        return False
    for x in members:
        if not (bits >> A.neg[x]) & 1:
            return False
        if any(not (bits >> A.mul[x][r]) & 1 for r in A):
            return False
        if any(not (bits >> A.add[x][y]) & 1 for y in members):
            return False
    return True


def make_ideal(A, bits):
    if not is_ideal_bits(A, bits):
        raise ValueError(f"{sorted(iter_bits(bits))} is not an ideal of {A.provenance}")
    return Ideal(A, bits)


def principal_ideal(A, a):
    return Ideal(A, from_iter(A.mul[a]))


def _gens(I):
    cache = I.ring.memo("gens")
    g = cache.get(I.bits)
    if g is None:
        g = cache[I.bits] = additive_generators(I.ring.add, I.bits)
    return g


def generated_ideal(A, elements):
    bits = 1
    for a in elements:
        p = principal_ideal(A, a)
        if not subset(p.bits, bits):
            bits = span(A.add, _gens(p), bits)
    return Ideal(A, bits)


def _same_ring(I, J):
    if I.ring is not J.ring:
        raise ValueError(f"ideals of different rings: {I.ring.provenance} vs {J.ring.provenance}")
    return I.ring


def ideal_sum(I, J):
    A = _same_ring(I, J)
    if subset(J.bits, I.bits):
        return I
    if subset(I.bits, J.bits):
        return J
    return Ideal(A, span(A.add, _gens(J), I.bits))


def ideal_product(I, J):
    A = _same_ring(I, J)
    lo, hi = sorted((I.bits, J.bits))
    cache = A.memo("product")
    bits = cache.get((lo, hi))
    if bits is None:
        mul = A.mul
        prods = {mul[g][h] for g in _gens(I) for h in _gens(J)}
        bits = cache[(lo, hi)] = span(A.add, sorted(prods))
    return Ideal(A, bits)


def ideal_power(I, k):
    result = unit_ideal(I.ring)
    for _ in range(k):
        result = ideal_product(result, I)
    return result


def ideal_intersection(I, J):
    A = _same_ring(I, J)
    return Ideal(A, I.bits & J.bits)


def ideal_quotient(I, J):
    """``(I : J) = {x : xJ ⊆ I}``."""
    A = _same_ring(I, J)
    gens = _gens(J)
    return Ideal(A, from_iter(x for x in A if all((I.bits >> A.mul[x][g]) & 1 for g in gens)))


def all_ideals(A):
    """Every ideal of ``A`` once, in canonical ``(size, bits)`` order.

    Principal ideals are closed under sums with principal ideals until no new
    ideal appears; every ideal is a finite sum of principal ones.
    """
    cache = A.memo("lattice")
    if "all" not in cache:
        principals = sorted({principal_ideal(A, a).bits for a in A})
        seen = set(principals)
        queue = list(principals)
        add = A.add
        while queue:
            bits = queue.pop()
            for p in principals:
                if subset(p, bits):
                    continue
                s = span(add, _gens(Ideal(A, p)), bits)
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        cache["all"] = tuple(sorted((Ideal(A, b) for b in seen), key=lambda I: I.key))
    return cache["all"]


def radical(I):
    A = I.ring
    cache = A.memo("radical")
    bits = cache.get(I.bits)
    if bits is None:
        out = 0
        for x in A:
            y, seen = x, set()
            while y not in seen:
                if (I.bits >> y) & 1:
                    out |= 1 << x
                    break
                seen.add(y)
                y = A.mul[y][x]
        bits = cache[I.bits] = out
    return Ideal(A, bits)


def is_radical(I):
    return radical(I).bits == I.bits


def is_prime(I):
    if not I.is_proper:
        return False
    A = I.ring
    outside = [x for x in A if not (I.bits >> x) & 1]
    return all(not (I.bits >> A.mul[a][b]) & 1 for a in outside for b in outside)


def is_primary(I):
    if not I.is_proper:
        return False
    A = I.ring
    rad = radical(I).bits
    for a in A:
        if (I.bits >> a) & 1:
            continue
        for b in A:
            if (I.bits >> A.mul[a][b]) & 1 and not (rad >> b) & 1:
                return False
    return True


def _lattice_list(A, name, pred):
    cache = A.memo("lattice")
    if name not in cache:
        cache[name] = tuple(I for I in all_ideals(A) if pred(I))
    return cache[name]


def prime_ideals(A):
    return _lattice_list(A, "primes", is_prime)


def maximal_ideals(A):
    proper = [I for I in all_ideals(A) if I.is_proper]
    return _lattice_list(A, "maximal", lambda I: I.is_proper and not any(I < J for J in proper))


def radical_ideals(A, proper=True):
    return _lattice_list(A, "radical_proper" if proper else "radical_all", lambda I: is_radical(I) and (I.is_proper or not proper))


def is_maximal(I):
    return I in maximal_ideals(I.ring)


def minimal_primes(I):
    over = [P for P in prime_ideals(I.ring) if I <= P]
    return [P for P in over if not any(Q < P for Q in over)]


def localize_ideal(I, P):
    """Image ``I_P`` inside ``A_P`` as an ideal of the localized ring."""
    AP, canon = localize_at_prime(I.ring, P)
    return Ideal(AP, from_iter(canon[x] for x in iter_bits(I.bits)))


def is_principal(I):
    A = I.ring
    return any(principal_ideal(A, a).bits == I.bits for a in iter_bits(I.bits))


def is_invertible(I):
    """Finitely generated (automatic here), regular, and principal at every maximal ideal."""
    A = I.ring
    cache = A.memo("invertible")
    if I.bits not in cache:
        cache[I.bits] = I.is_regular and all(is_principal(localize_ideal(I, M)) for M in maximal_ideals(A))
    return cache[I.bits]


def invertible_ideals(A):
    return _lattice_list(A, "invertible", is_invertible)


def multiplication_witnesses(I):
    """Map each ideal ``K ⊆ I`` to the least ``J`` with ``JI = K``; ``None`` if some ``K`` has none."""
    A = I.ring
    ideals = all_ideals(A)
    witnesses = {}
    for K in ideals:
        if not K <= I:
            continue
        J = next((J for J in ideals if ideal_product(J, I).bits == K.bits), None)
        if J is None:
            return None
        witnesses[K] = J
    return witnesses


def is_multiplication_ideal(I):
    return multiplication_witnesses(I) is not None


def stabilization_index(H):
    """Least ``k >= 1`` with ``H^k = H^(k+1)``."""
    k, power = 1, H
    while True:
        nxt = ideal_product(power, H)
        if nxt.bits == power.bits:
            return k
        k, power = k + 1, nxt


def generators(I):
    """A short generating set: one generator if principal (preferring 1 for the unit ideal)."""
    A = I.ring
    if not I.is_proper:
        return [A.one]
    for a in iter_bits(I.bits):
        if principal_ideal(A, a).bits == I.bits:
            return [a]
    gens, cur = [], zero_ideal(A)
    for a in iter_bits(I.bits):
        if not (cur.bits >> a) & 1:
            gens.append(a)
            cur = ideal_sum(cur, principal_ideal(A, a))
            if cur.bits == I.bits:
                break
    return gens


def ideal_literal(I):
    """Expression-language literal ``ideal(g1, ...)`` for ``I``."""
    A = I.ring
    return "ideal(" + ", ".join(format_value(A.values[g]) for g in generators(I)) + ")"


def ideal_name(I):
    A = I.ring
    return "(" + ", ".join(format_value(A.values[g]) for g in generators(I)) + ")"

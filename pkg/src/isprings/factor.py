"""Search for factorizations ``I = J * H1 * ... * Hn`` over a finite ring.

``J`` ranges over an "invertible" alphabet (possibly just the unit ideal) and
the ``Hi`` over a factor alphabet (proper radical ideals, or primes), with
``n >= 1``. Only ideals containing ``I`` can occur, since every factor
contains the product. The exponent of each ``H`` is capped at the least
``k`` with ``H^k = H^(k+1)``; a longer run of ``H`` leaves the product
unchanged, so a shortest factorization never needs it.

The answer is the least factorization under ``(n, J.key, sorted part keys)``.
"""

from dataclasses import dataclass

from ._bits import subset
from .ideals import (
    Ideal,
    ideal_name,
    ideal_product,
    invertible_ideals,
    prime_ideals,
    radical_ideals,
    stabilization_index,
    unit_ideal,
)

MODES = ("isp", "strong", "sp", "ssp", "zpi", "zpui")


@dataclass(frozen=True)
class Factorization:
    invertible_part: Ideal
    radical_parts: tuple

    def __post_init__(self):
        if not self.radical_parts:
            raise ValueError("a factorization needs at least one non-invertible factor")

    @property
    def n(self):
        return len(self.radical_parts)

    def product(self):
        result = self.invertible_part
        for H in self.radical_parts:
            result = ideal_product(result, H)
        return result

    @property
    def key(self):
        return (self.n, self.invertible_part.key, tuple(H.key for H in self.radical_parts))

    def __str__(self):
        parts = ",".join(ideal_name(H) for H in self.radical_parts)
        return f"J={ideal_name(self.invertible_part)}, H=[{parts}]"


def least_factorization(target, alphabet, invertibles):
    """Least factorization of ``target`` over the given alphabets, or ``None``."""
    A = target.ring
    t = target.bits
    alpha = sorted((H for H in alphabet if subset(t, H.bits) and H.is_proper), key=lambda H: H.key)
    invs = sorted((J for J in invertibles if subset(t, J.bits)), key=lambda J: J.key)
    if not alpha or not invs:
        return None
    caps = [stabilization_index(H) for H in alpha]
    failed = set()

    def mult(x, i):
        return ideal_product(Ideal(A, x), alpha[i]).bits

    def dfs(partial, start, used, remaining):
        if remaining == 0:
            return () if partial == t else None
        state = (partial, start, used, remaining)
        if state in failed:
            return None
        for i in range(start, len(alpha)):
            u = used if i == start else 0
            if u >= caps[i]:
                continue
            nxt = mult(partial, i)
            if not subset(t, nxt):
                continue
            rest = dfs(nxt, i, u + 1, remaining - 1)
            if rest is not None:
                return (i,) + rest
        failed.add(state)
        return None

    for n in range(1, sum(caps) + 1):
        for J in invs:
            found = dfs(J.bits, 0, 0, n)
            if found is not None:
                return Factorization(J, tuple(alpha[i] for i in found))
    return None


def _check_target(I, require_regular):
    if not I.is_proper:
        raise ValueError("only proper ideals are factored")
    if require_regular and not I.is_regular:
        raise ValueError(f"{ideal_name(I)} is not a regular ideal")


def factor_inv_radical(I, require_regular=False):
    """Invertible ideal times a nonempty product of proper radical ideals."""
    _check_target(I, require_regular)
    A = I.ring
    return least_factorization(I, radical_ideals(A), invertible_ideals(A))


def factor_radicals_only(I, require_regular=False):
    _check_target(I, require_regular)
    f = least_factorization(I, radical_ideals(I.ring), [unit_ideal(I.ring)])
    return None if f is None else f.radical_parts


def factor_primes_only(I):
    _check_target(I, False)
    f = least_factorization(I, prime_ideals(I.ring), [unit_ideal(I.ring)])
    return None if f is None else f.radical_parts


def factor_inv_primes(I):
    _check_target(I, False)
    A = I.ring
    return least_factorization(I, prime_ideals(A), invertible_ideals(A))


def factor(I, mode):
    """Dispatch on a ring-class name; always returns a ``Factorization`` or ``None``.

    ``isp`` and ``sp`` only quantify over regular ideals and reject others.
    """
    A = I.ring
    one = [unit_ideal(A)]
    if mode == "isp":
        _check_target(I, True)
        return least_factorization(I, radical_ideals(A), invertible_ideals(A))
    if mode == "strong":
        _check_target(I, False)
        return least_factorization(I, radical_ideals(A), invertible_ideals(A))
    if mode == "sp":
        _check_target(I, True)
        return least_factorization(I, radical_ideals(A), one)
    if mode == "ssp":
        _check_target(I, False)
        return least_factorization(I, radical_ideals(A), one)
    if mode == "zpi":
        _check_target(I, False)
        return least_factorization(I, prime_ideals(A), one)
    if mode == "zpui":
        _check_target(I, False)
        return least_factorization(I, prime_ideals(A), invertible_ideals(A))
    raise ValueError(f"unknown factorization mode {mode!r}; expected one of {', '.join(MODES)}")

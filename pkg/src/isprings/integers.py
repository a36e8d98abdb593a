"""The ring of integers, with the ideal ``nZ`` encoded by ``n >= 0``.

Containment is divisibility (``0`` lies in everything), products multiply,
and every nonzero ideal is invertible, so here the invertible factor of an
invertible-radical factorization carries real information.
"""

from dataclasses import dataclass
from math import gcd, prod

DEFAULT_BOUND = 1000


@dataclass(frozen=True)
class IntegerRing:
    provenance: str = "Zint"


ZINT = IntegerRing()


@dataclass(frozen=True)
class IntegerIdeal:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("integer ideals are encoded by nonnegative generators")

    def __le__(self, other):
        # nZ ⊆ mZ iff m | n
        return other.n == 0 and self.n == 0 or (other.n != 0 and self.n % other.n == 0)

    def __mul__(self, other):
        return IntegerIdeal(self.n * other.n)

    @property
    def is_proper(self):
        return self.n != 1

    def __str__(self):
        return f"({self.n})"


def integer_ideal(*generators):
    g = 0
    for x in generators:
        g = gcd(g, abs(x))
    return IntegerIdeal(g)


def prime_factors(n):
    """Prime factorization of ``n >= 1`` as an ascending list with repetition."""
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_squarefree(n):
    f = prime_factors(n)
    return len(f) == len(set(f))


def int_radical(n):
    """Generator of the radical of ``nZ``: product of the distinct primes of ``n``."""
    if n in (0, 1):
        return n
    return prod(set(prime_factors(n)))


def int_factor_isp(n):
    """``(m, [d])`` with ``m * d = n``, ``d = rad(n)``; ``(1, [0])`` for the zero ideal.

    ``m`` generates the invertible part (``m = 1`` is the unit ideal) and ``d``
    the single proper radical factor. Among all factorizations this one has the
    fewest radical factors and then the smallest ``m``.
    """
    if n < 0:
        raise ValueError("negative generator")
    if n == 1:
        raise ValueError("the unit ideal is not proper")
    if n == 0:
        return 1, [0]
    d = int_radical(n)
    return n // d, [d]


def int_factor_sp(n):
    """Product of squarefree integers ``> 1`` (no invertible part): the layers of ``n``.

    Layer ``j`` is the product of the primes occurring with exponent ``>= j``;
    the number of layers is the largest exponent, which is the least possible.
    """
    if n == 1:
        raise ValueError("the unit ideal is not proper")
    if n == 0:
        return [0]
    f = prime_factors(n)
    top = max(f.count(p) for p in set(f))
    return [prod(p for p in set(f) if f.count(p) >= j) for j in range(1, top + 1)]


def int_factor_zpi(n):
    if n == 1:
        raise ValueError("the unit ideal is not proper")
    return [0] if n == 0 else prime_factors(n)


def int_is_isp(bound=DEFAULT_BOUND):
    """``(True, certificate)``: a checked factorization for ``n = 0`` and every ``2 <= n <= bound``."""
    certificate = {}
    for n in [0, *range(2, bound + 1)]:
        m, ds = int_factor_isp(n)
        if m * prod(ds) != n or not all(d == 0 or (d > 1 and is_squarefree(d)) for d in ds):
            return False, {n: (m, ds)}
        certificate[n] = (m, ds)
    return True, certificate


def classify_integers(R=ZINT, bound=DEFAULT_BOUND):
    """Report for ``Z``: factorization properties certified up to ``bound``."""
    from .classify import ClassificationReport, Verdict

    ok_isp, cert = int_is_isp(bound)
    ok_sp = all(prod(int_factor_sp(n)) == n for n in range(2, bound + 1))
    ok_zpi = all(prod(int_factor_zpi(n)) == n for n in range(2, bound + 1))
    T, F = Verdict.TRUE, Verdict.FALSE
    # the regular non-unit 2 generates a proper regular ideal; Z has primes (2), (3), ...
    verdicts = {
        "total_quotient": F,
        "isp": T if ok_isp else F,
        "strongly_isp": T if ok_isp else F,
        "sp": T if ok_sp else F,
        "ssp": T if ok_sp else F,
        "zpi": T if ok_zpi else F,
        "zpui": T if ok_zpi else F,
        "special_primary": F,
        "almost_multiplication": T,
        "von_neumann_regular": F,
        "marot": T,
        "dedekind": T if ok_zpi else F,
        "local": F,
        "field": F,
        "domain": T,
        "reduced": T,
    }
    counterexamples = {
        "total_quotient": 2,
        "special_primary": 3,
        "von_neumann_regular": 2,
        "local": 3,
        "field": 2,
    }
    extras = {"bound": bound, "counterexamples": counterexamples, "certificate": cert}
    return ClassificationReport(R.provenance, None, verdicts, {}, ring=R, extras=extras)

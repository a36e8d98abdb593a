"""Finite commutative rings with identity on the carrier ``0..n-1``.

Every ring stores full addition and multiplication tables (tuples of tuples)
together with a ``values`` tuple giving each index a readable structured
value: an int for ``Z/n``, a tuple for products and pair constructions.
Index 0 is always the additive identity.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache

from ._bits import additive_generators, from_iter, iter_bits


@dataclass(frozen=True)
class ConstructionTag:
    """How a ring was built: ``kind`` plus the objects it was built from."""

    kind: str
    components: tuple = ()


class FiniteRing:
    """A finite commutative ring with ``1 != 0``.

    Instances are immutable after construction. Derived data (units, the
    ideal lattice, search memos) is computed on first use and never changed.
    """

    def __init__(self, add, mul, one, values, provenance, tag=None, parent=None, projection=None):
        size = len(add)
        if size < 2:
            raise ValueError("the zero ring is excluded: rings must have 1 != 0")
        if one == 0:
            raise ValueError("one must differ from zero")
        if len(values) != size or len(mul) != size:
            raise ValueError("tables and values disagree on the ring size")
        if tuple(add[0]) != tuple(range(size)):
            raise ValueError("index 0 must be the additive identity")
        self.size = size
        self.add = tuple(tuple(r) for r in add)
        self.mul = tuple(tuple(r) for r in mul)
        self.one = one
        self.zero = 0
        self.values = tuple(values)
        self.provenance = provenance
        self.tag = tag or ConstructionTag("table")
        self.parent = parent
        self.projection = tuple(projection) if projection is not None else None
        self.neg = tuple(row.index(0) for row in self.add)
        self._index = {v: i for i, v in enumerate(self.values)}
        self._memo = {}

    @classmethod
    def from_rules(cls, values, add_fn, mul_fn, one_value, provenance, **kw):
        """Materialise tables from value-level ``add_fn``/``mul_fn``; ``values[0]`` must be zero."""
        values = tuple(values)
        index = {v: i for i, v in enumerate(values)}
        add = [[index[add_fn(a, b)] for b in values] for a in values]
        mul = [[index[mul_fn(a, b)] for b in values] for a in values]
        return cls(add, mul, index[one_value], values, provenance, **kw)

    def __repr__(self):
        return f"FiniteRing({self.provenance}, size={self.size})"

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def __getitem__(self, index):
        return RingElement(self, index)

    # element arithmetic on indices

    def plus(self, a, b):
        return self.add[a][b]

    def minus(self, a, b):
        return self.add[a][self.neg[b]]

    def times(self, a, b):
        return self.mul[a][b]

    def power(self, a, k):
        result = self.one
        for _ in range(k):
            result = self.mul[result][a]
        return result

    def multiple(self, k, a):
        """``k * a`` for a nonnegative integer ``k``."""
        result = 0
        for _ in range(k):
            result = self.add[result][a]
        return result

    def value(self, index):
        return self.values[index]

    def lookup(self, value):
        """Index of the element with the given structured value.

        Quotients and localizations also accept values of their parent ring,
        mapped through the canonical projection.
        """
        if value in self._index:
            return self._index[value]
        if self.parent is not None:
            return self.projection[self.parent.lookup(value)]
        raise KeyError(f"{value!r} is not an element of {self.provenance}")

    def memo(self, name):
        """Per-ring write-once cache namespace used by the lattice code."""
        return self._memo.setdefault(name, {})

    # structural queries

    @cached_property
    def units(self):
        one, mul = self.one, self.mul
        return frozenset(a for a in self if one in mul[a])

    @cached_property
    def zero_divisors(self):
        mul = self.mul
        return frozenset(a for a in self if any(mul[a][b] == 0 for b in range(1, self.size)))

    @cached_property
    def regular_elements(self):
        return frozenset(range(self.size)) - self.zero_divisors

    @cached_property
    def idempotents(self):
        return frozenset(a for a in self if self.mul[a][a] == a)

    @cached_property
    def nilpotents(self):
        out = []
        for a in self:
            x = a
            for _ in range(self.size):
                if x == 0:
                    out.append(a)
                    break
                x = self.mul[x][a]
        return frozenset(out)

    @cached_property
    def characteristic(self):
        k, x = 1, self.one
        while x != 0:
            x = self.add[x][self.one]
            k += 1
        return k

    @cached_property
    def is_additively_cyclic(self):
        return self.characteristic == self.size

    @cached_property
    def integer_of(self):
        """For additively cyclic rings, the map index -> k with ``k * 1`` equal to it."""
        if not self.is_additively_cyclic:
            raise ValueError(f"{self.provenance} is not generated additively by 1")
        table = [0] * self.size
        x = 0
        for k in range(self.size):
            table[x] = k
            x = self.add[x][self.one]
        return tuple(table)


@dataclass(frozen=True)
class RingElement:
    ring: FiniteRing
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.ring.size:
            raise IndexError(f"index {self.index} outside {self.ring.provenance}")

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise ValueError("elements of different rings")
            return other.index
        return self.ring.multiple(other, self.ring.one) if isinstance(other, int) else NotImplemented

    def __add__(self, other):
        return RingElement(self.ring, self.ring.plus(self.index, self._coerce(other)))

    def __sub__(self, other):
        return RingElement(self.ring, self.ring.minus(self.index, self._coerce(other)))

    def __mul__(self, other):
        return RingElement(self.ring, self.ring.times(self.index, self._coerce(other)))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg[self.index])

    def __pow__(self, k):
        return RingElement(self.ring, self.ring.power(self.index, k))

    @property
    def value(self):
        return self.ring.values[self.index]

    def __repr__(self):
        return f"{self.value!r}@{self.ring.provenance}"


def format_value(v):
    """Render a structured element value in expression-language syntax."""
    if isinstance(v, tuple):
        return "(" + ",".join(format_value(x) for x in v) + ")"
    return str(v)


@lru_cache(maxsize=None)
def make_zmod(n):
    """``Z/nZ`` with index ``i`` representing residue ``i``."""
    if n < 2:
        raise ValueError(f"Zmod({n}) is the zero ring or empty; need n >= 2")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, 1, tuple(range(n)), f"Zmod({n})", tag=ConstructionTag("zmod", (n,)))


def units(A):
    return A.units


def regular_elements(A):
    return A.regular_elements


def idempotents(A):
    return A.idempotents


def nilradical(A):
    from .ideals import Ideal

    return Ideal(A, from_iter(A.nilpotents))


def is_local(A):
    """``(True, M)`` with the unique maximal ideal, else ``(False, None)``."""
    from .ideals import maximal_ideals

    ms = maximal_ideals(A)
    return (True, ms[0]) if len(ms) == 1 else (False, None)


def is_field(A):
    return len(A.units) == A.size - 1


def is_reduced(A):
    return len(A.nilpotents) == 1


def check_axioms(A):
    """Exhaustively verify the commutative ring axioms; raise ``ValueError`` on the first failure."""
    add, mul, n = A.add, A.mul, A.size
    for a in range(n):
        if add[a][A.neg[a]] != 0:
            raise ValueError(f"{a} has no additive inverse")
        if mul[a][A.one] != a:
            raise ValueError(f"1*{a} != {a}")
        for b in range(n):
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise ValueError(f"commutativity fails at ({a}, {b})")
            ab, mab = add[a][b], mul[a][b]
            for c in range(n):
                if add[ab][c] != add[a][add[b][c]]:
                    raise ValueError(f"+ associativity fails at ({a}, {b}, {c})")
                if mul[mab][c] != mul[a][mul[b][c]]:
                    raise ValueError(f"* associativity fails at ({a}, {b}, {c})")
                if mul[a][add[b][c]] != add[mab][mul[a][c]]:
                    raise ValueError(f"distributivity fails at ({a}, {b}, {c})")


def _coset_ring(A, kernel, provenance, tag):
    """Ring of cosets ``A / kernel``; cosets indexed by their least member."""
    coset_of = [-1] * A.size
    reps = []
    kernel_elems = list(iter_bits(kernel))
    for a in A:
        if coset_of[a] >= 0:
            continue
        c = len(reps)
        reps.append(a)
        for k in kernel_elems:
            coset_of[A.add[a][k]] = c
    m = len(reps)
    add = [[coset_of[A.add[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    mul = [[coset_of[A.mul[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    values = [A.values[r] for r in reps]
    ring = FiniteRing(add, mul, coset_of[A.one], values, provenance, tag=tag, parent=A, projection=coset_of)
    return ring, tuple(coset_of)


def quotient(A, I):
    """``A/I`` with its projection map (tuple: index of A -> index of A/I)."""
    if I.ring is not A:
        raise ValueError("ideal belongs to a different ring")
    if I.bits >> A.one & 1:
        raise ValueError("quotient by the unit ideal is the zero ring")
    from .ideals import ideal_literal

    prov = f"quot({A.provenance}, {ideal_literal(I)})"
    return _coset_ring(A, I.bits, prov, ConstructionTag("quotient", (A, I)))


def localization_kernel(A, S):
    """Elements killed by some member of ``S``."""
    return from_iter(x for x in A if any(A.mul[u][x] == 0 for u in S))


def localize(A, S, provenance=None, tag=None):
    """Fraction ring ``A_S`` and the canonical map ``a -> a/1``.

    Fractions ``(a, s)`` are grouped under ``(a,s) ~ (b,t)`` iff ``u(at - bs) = 0``
    for some ``u`` in ``S``. In a finite ring every fraction equals some ``b/1``,
    so classes are labelled by their least such ``b``.
    """
    S = frozenset(S)
    if 0 in S:
        raise ValueError("multiplicative set contains 0; the localization is the zero ring")
    if A.one not in S or any(A.mul[s][t] not in S for s in S for t in S):
        raise ValueError("S is not multiplicatively closed")
    kernel = localization_kernel(A, S)
    ring, canon = _coset_ring(A, kernel, provenance or f"loc({A.provenance})", tag or ConstructionTag("localization", (A, S)))
    # (a,s) ~ (b,1) iff a - bs lies in the kernel, i.e. canon[a] == canon[bs]
    classes = {}
    for s in sorted(S):
        least_b = {}
        for b in A:
            least_b.setdefault(canon[A.mul[b][s]], b)
        for a in A:
            b = least_b.get(canon[a])
            if b is None:
                raise AssertionError(f"fraction ({a}, {s}) has no representative b/1")
            classes.setdefault(b, []).append((a, s))
    if len({canon[b] for b in classes}) != ring.size:
        raise AssertionError("fraction classes disagree with the kernel quotient")
    return ring, canon


def localize_at_prime(A, P):
    """``A_P`` with ``S = A \\ P`` and its canonical map; ``P`` must be prime."""
    from .ideals import ideal_literal, ideal_name, is_prime

    if P.ring is not A:
        raise ValueError("ideal belongs to a different ring")
    if not is_prime(P):
        raise ValueError(f"{ideal_name(P)} is not a prime ideal of {A.provenance}")
    key = P.bits
    cache = A.memo("localize_at_prime")
    if key not in cache:
        S = [a for a in A if not (P.bits >> a) & 1]
        cache[key] = localize(A, S, f"loc({A.provenance}, {ideal_literal(P)})", ConstructionTag("localization", (A, P)))
    return cache[key]


def invariant_vector(A):
    from .ideals import all_ideals

    return (A.size, len(A.units), len(all_ideals(A)), len(A.nilpotents), len(A.idempotents), A.characteristic)


def is_isomorphic(A, B, exhaustive_limit=16):
    """Invariant-vector comparison, plus a backtracking search when ``size <= exhaustive_limit``."""
    if invariant_vector(A) != invariant_vector(B):
        return False
    if A.size > exhaustive_limit:
        return True
    return find_isomorphism(A, B) is not None


def _additive_order(R, x):
    k, y = 1, x
    while y != 0:
        y = R.add[y][x]
        k += 1
    return k


def find_isomorphism(A, B):
    """A ring isomorphism ``A -> B`` as a tuple of indices, or ``None``.

    Backtracks over images of a greedy additive generating set, extending the
    map coset by coset and pruning on injectivity and multiplicativity.
    """
    if A.size != B.size:
        return None
    gens = additive_generators(A.add, (1 << A.size) - 1)
    orders = [_additive_order(A, g) for g in gens]

    def search(f, t):
        if t == len(gens):
            return f
        g = gens[t]
        for y in B:
            if _additive_order(B, y) != orders[t]:
                continue
            new = dict(f)
            kg, ky = g, y
            while kg not in f:
                for x, fx in f.items():
                    new[A.add[kg][x]] = B.add[ky][fx]
                kg, ky = A.add[kg][g], B.add[ky][y]
            if f[kg] != ky or len(set(new.values())) != len(new):
                continue
            if A.one in new and new[A.one] != B.one:
                continue
            if any(
                A.mul[a][b] in new and new[A.mul[a][b]] != B.mul[new[a]][new[b]]
                for a in new
                for b in new
            ):
                continue
            found = search(new, t + 1)
            if found is not None:
                return found
        return None

    result = search({0: 0}, 0)
    if result is None:
        return None
    return tuple(result[a] for a in A)

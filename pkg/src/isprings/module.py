"""Finite modules over finite rings.

A module has its own carrier ``0..m-1`` (0 the zero vector), an addition
table, and an action table ``act[a][e]`` indexed by ring element then module
element. Submodules are bitsets over the module carrier.
"""

from dataclasses import dataclass, field
from itertools import product

from ._bits import additive_generators, from_iter, iter_bits, popcount, span, subset
from .ideals import Ideal, all_ideals, ideal_name, prime_ideals
from .ring import _coset_ring, localize_at_prime


class FiniteModule:
    def __init__(self, ring, add, act, values, provenance):
        if len(add) < 1 or tuple(add[0]) != tuple(range(len(add))):
            raise ValueError("index 0 must be the zero of the module")
        self.ring = ring
        self.size = len(add)
        self.add = tuple(tuple(r) for r in add)
        self.act = tuple(tuple(r) for r in act)
        self.values = tuple(values)
        self.provenance = provenance
        self.neg = tuple(row.index(0) for row in self.add)
        self._memo = {}

    def __repr__(self):
        return f"FiniteModule({self.provenance} over {self.ring.provenance}, size={self.size})"

    def __iter__(self):
        return iter(range(self.size))

    def memo(self, name):
        return self._memo.setdefault(name, {})

    @property
    def is_zero(self):
        return self.size == 1

    @property
    def zero_divisors(self):
        """``Z(E)``: ring elements killing some nonzero module element."""
        act = self.act
        return frozenset(a for a in self.ring if any(act[a][e] == 0 for e in range(1, self.size)))


@dataclass(frozen=True)
class Submodule:
    module: object = field(repr=False)
    bits: int

    @property
    def size(self):
        return popcount(self.bits)

    @property
    def key(self):
        return (self.size, self.bits)

    def __le__(self, other):
        return subset(self.bits, other.bits)

    def __contains__(self, e):
        return bool((self.bits >> e) & 1)


def make_module(A, cyclic_orders):
    """``Z/d1 ⊕ ... ⊕ Z/dk`` over an additively cyclic ring, acting by reduction.

    Each ring element is ``k * 1`` for an integer ``k``; it acts as ``k``. This
    is well defined exactly when each ``d_i`` divides the characteristic.
    """
    orders = tuple(cyclic_orders)
    if not orders:
        raise ValueError("a module needs at least one cyclic summand")
    if not A.is_additively_cyclic:
        raise ValueError(f"{A.provenance} is not additively cyclic, so reduction modules are undefined")
    for d in orders:
        if d < 2:
            raise ValueError(f"cyclic order {d} would give a zero summand; orders must be >= 2")
        if A.characteristic % d:
            raise ValueError(f"order {d} does not divide the characteristic {A.characteristic} of {A.provenance}")
    elems = list(product(*(range(d) for d in orders)))
    index = {e: i for i, e in enumerate(elems)}
    add = [[index[tuple((x + y) % d for x, y, d in zip(e, f, orders))] for f in elems] for e in elems]
    ints = A.integer_of
    act = [[index[tuple((ints[a] * x) % d for x, d in zip(e, orders))] for e in elems] for a in A]
    values = [e[0] if len(orders) == 1 else e for e in elems]
    prov = "mod(" + ", ".join(map(str, orders)) + ")"
    return FiniteModule(A, add, act, values, prov)


def regular_module(A):
    return FiniteModule(A, A.add, A.mul, A.values, f"regular({A.provenance})")


def ideal_module(I):
    A = I.ring
    elems = list(iter_bits(I.bits))
    pos = {x: i for i, x in enumerate(elems)}
    add = [[pos[A.add[x][y]] for y in elems] for x in elems]
    act = [[pos[A.mul[a][x]] for x in elems] for a in A]
    return FiniteModule(A, add, act, [A.values[x] for x in elems], f"ideal-module{ideal_name(I)}")


def cyclic_module(A, I):
    """``A/I`` as an ``A``-module."""
    Q, proj = _coset_ring(A, I.bits, f"quot({A.provenance})", None)
    act = [[proj[A.mul[a][Q_rep]] for Q_rep in _reps(proj, Q.size)] for a in A]
    return FiniteModule(A, Q.add, act, Q.values, f"cyclic{ideal_name(I)}")


def _reps(proj, m):
    reps = [None] * m
    for x, c in enumerate(proj):
        if reps[c] is None:
            reps[c] = x
    return reps


def _module_gens(E, bits):
    cache = E.memo("gens")
    g = cache.get(bits)
    if g is None:
        g = cache[bits] = additive_generators(E.add, bits)
    return g


def cyclic_submodule(E, e):
    return Submodule(E, from_iter(E.act[a][e] for a in E.ring))


def submodule_sum(V, W):
    E = V.module
    return Submodule(E, span(E.add, _module_gens(E, W.bits), V.bits))


def ideal_times_module(I, E, V=None):
    """``I V`` (``V`` defaults to all of ``E``): the span of ``i v``."""
    A = I.ring
    vbits = (1 << E.size) - 1 if V is None else V.bits
    gens_i = additive_generators(A.add, I.bits)
    prods = {E.act[g][v] for g in gens_i for v in _module_gens(E, vbits)}
    return Submodule(E, span(E.add, sorted(prods)))


def submodules(E):
    """All submodules, closing cyclic submodules under sums; canonical ``(size, bits)`` order."""
    cache = E.memo("lattice")
    if "all" not in cache:
        cyclics = sorted({cyclic_submodule(E, e).bits for e in E})
        seen = set(cyclics)
        queue = list(cyclics)
        while queue:
            bits = queue.pop()
            for c in cyclics:
                if subset(c, bits):
                    continue
                s = span(E.add, _module_gens(E, c), bits)
                if s not in seen:
                    seen.add(s)
                    queue.append(s)
        cache["all"] = tuple(sorted((Submodule(E, b) for b in seen), key=lambda V: V.key))
    return cache["all"]


def is_submodule_bits(E, bits):
    members = list(iter_bits(bits))
    if not bits & 1:
        return False
    return all(
        all((bits >> E.add[x][y]) & 1 for y in members) and all((bits >> E.act[a][x]) & 1 for a in E.ring)
        for x in members
    )


def is_simple(E):
    return not E.is_zero and len(submodules(E)) == 2


def is_divisible(E):
    """``E = aE`` for every regular ``a``."""
    full = (1 << E.size) - 1
    return all(from_iter(E.act[a]) == full for a in E.ring.regular_elements)


def multiplication_witnesses(E):
    """Map each submodule ``V`` to the least ideal ``I`` with ``IE = V``; ``None`` if one fails."""
    if E.is_zero:
        return None
    images = {}
    for I in all_ideals(E.ring):
        images.setdefault(ideal_times_module(I, E).bits, I)
    witnesses = {}
    for V in submodules(E):
        if V.bits not in images:
            return None
        witnesses[V] = images[V.bits]
    return witnesses


def is_multiplication_module(E):
    return multiplication_witnesses(E) is not None


def annihilator(E):
    A = E.ring
    return Ideal(A, from_iter(a for a in A if all(x == 0 for x in E.act[a])))


def support(E):
    """Primes containing the annihilator (``E`` is finitely generated)."""
    ann = annihilator(E)
    return [P for P in prime_ideals(E.ring) if ann <= P]


def localize_module(E, P):
    """``E_P`` over ``A_P``: classes of pairs ``(e, s)``, each equal to some ``e'/1``."""
    A = E.ring
    AP, canon = localize_at_prime(A, P)
    S = [s for s in A if not (P.bits >> s) & 1]
    kernel = from_iter(e for e in E if any(E.act[u][e] == 0 for u in S))
    coset_of = [-1] * E.size
    reps = []
    kmembers = list(iter_bits(kernel))
    for e in E:
        if coset_of[e] < 0:
            c = len(reps)
            reps.append(e)
            for k in kmembers:
                coset_of[E.add[e][k]] = c
    m = len(reps)
    add = [[coset_of[E.add[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    ring_reps = _reps(canon, AP.size)
    act = [[coset_of[E.act[ring_reps[c]][reps[j]]] for j in range(m)] for c in range(AP.size)]
    values = [E.values[r] for r in reps]
    return FiniteModule(AP, add, act, values, f"{E.provenance}_{ideal_name(P)}")


def is_module_isomorphic_to_ring(E):
    """``E ≅ A`` as ``A``-modules: some ``e`` with ``a -> a e`` bijective."""
    A = E.ring
    if E.size != A.size:
        return False
    return any(len(set(E.act[a][e] for a in A)) == A.size for e in E)


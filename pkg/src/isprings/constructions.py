"""Direct products, trivial ring extensions ``A ∝ E`` and amalgamated duplications ``A ⋈ I``."""

from ._bits import from_iter, iter_bits
from .ideals import Ideal, ideal_literal
from .module import ideal_times_module
from .ring import ConstructionTag, FiniteRing


def direct_product(*rings):
    """Componentwise ring; the first factor is the most significant index digit."""
    if len(rings) < 2:
        raise ValueError("a direct product needs at least two factors")
    sizes = [R.size for R in rings]
    coords = [()]
    for R in rings:
        coords = [c + (x,) for c in coords for x in R]
    index = {c: i for i, c in enumerate(coords)}
    add = [[index[tuple(R.add[x][y] for R, x, y in zip(rings, c, d))] for d in coords] for c in coords]
    mul = [[index[tuple(R.mul[x][y] for R, x, y in zip(rings, c, d))] for d in coords] for c in coords]
    values = [tuple(R.values[x] for R, x in zip(rings, c)) for c in coords]
    one = index[tuple(R.one for R in rings)]
    prov = "prod(" + ", ".join(R.provenance for R in rings) + ")"
    ring = FiniteRing(add, mul, one, values, prov, tag=ConstructionTag("product", tuple(rings)))
    ring.coordinates = tuple(coords)
    assert len(coords) == _prod(sizes)
    return ring


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def product_ideal(R, ideals):
    """``I1 × ... × Ik`` inside a direct product ``R``."""
    coords = R.coordinates
    return Ideal(R, from_iter(i for i, c in enumerate(coords) if all((I.bits >> x) & 1 for I, x in zip(ideals, c))))


def trivext(A, E):
    """``A ∝ E`` on pairs ``(a, e)`` with ``(a,e)(b,f) = (ab, af + be)``; index ``a*|E| + e``."""
    if E.ring is not A:
        raise ValueError(f"{E.provenance} is a module over {E.ring.provenance}, not {A.provenance}")
    m = E.size
    pairs = [(a, e) for a in A for e in E]
    add = [[A.add[a][b] * m + E.add[e][f] for (b, f) in pairs] for (a, e) in pairs]
    mul = [[A.mul[a][b] * m + E.add[E.act[a][f]][E.act[b][e]] for (b, f) in pairs] for (a, e) in pairs]
    values = [(A.values[a], E.values[e]) for a, e in pairs]
    prov = f"trivext({A.provenance}, {E.provenance})"
    return FiniteRing(add, mul, A.one * m, values, prov, tag=ConstructionTag("trivext", (A, E)))


def _trivext_parts(R):
    if R.tag.kind != "trivext":
        raise ValueError(f"{R.provenance} is not a trivial ring extension")
    return R.tag.components


def homogeneous_ideal(R, I, V):
    """``I ∝ V`` in ``R = A ∝ E``; requires ``IE ⊆ V``."""
    A, E = _trivext_parts(R)
    if not ideal_times_module(I, E) <= V:
        raise ValueError(f"{ideal_literal(I)} E is not contained in the given submodule")
    m = E.size
    return Ideal(R, from_iter(a * m + v for a in iter_bits(I.bits) for v in iter_bits(V.bits)))


def homogeneous_parts(L):
    """``(I, V)`` if ``L = I ∝ V`` is homogeneous, else ``None``."""
    from .module import Submodule

    R = L.ring
    A, E = _trivext_parts(R)
    m = E.size
    ibits = from_iter(x // m for x in iter_bits(L.bits))
    vbits = from_iter(x for x in iter_bits(L.bits) if x < m)
    I, V = Ideal(A, ibits), Submodule(E, vbits)
    if ideal_times_module(I, E) <= V and homogeneous_ideal(R, I, V).bits == L.bits:
        return I, V
    return None


def dup(A, I):
    """``A ⋈ I = {(a, a+i)}`` inside ``A × A``; index ``a*|I| + (position of i in I)``."""
    if I.ring is not A:
        raise ValueError("ideal belongs to a different ring")
    ielems = list(iter_bits(I.bits))
    pos = {x: k for k, x in enumerate(ielems)}
    m = len(ielems)
    pairs = [(a, i) for a in A for i in ielems]
    add_, mul_ = A.add, A.mul

    def idx(a, i):
        return a * m + pos[i]

    add = [[idx(add_[a][b], add_[i][j]) for (b, j) in pairs] for (a, i) in pairs]
    # (a, a+i)(b, b+j) = (ab, ab + aj + bi + ij)
    mul = [
        [idx(mul_[a][b], add_[add_[mul_[a][j]][mul_[b][i]]][mul_[i][j]]) for (b, j) in pairs]
        for (a, i) in pairs
    ]
    values = [(A.values[a], A.values[add_[a][i]]) for a, i in pairs]
    prov = f"dup({A.provenance}, {ideal_literal(I)})"
    return FiniteRing(add, mul, idx(A.one, 0), values, prov, tag=ConstructionTag("dup", (A, I)))


def _dup_parts(D):
    if D.tag.kind != "dup":
        raise ValueError(f"{D.provenance} is not an amalgamated duplication")
    return D.tag.components


def dup_ideal(D, H):
    """``H ⋈ I = {(h, h+i) : h ∈ H, i ∈ I}`` in ``D = A ⋈ I``."""
    A, I = _dup_parts(D)
    if H.ring is not A:
        raise ValueError("ideal H must belong to the base ring")
    ielems = list(iter_bits(I.bits))
    m = len(ielems)
    return Ideal(D, from_iter(h * m + k for h in iter_bits(H.bits) for k in range(m)))


def dup_base_parts(L):
    """``(H, True)`` if ``L = H ⋈ I`` for the ideal ``H`` of first coordinates, else ``(H, False)``."""
    D = L.ring
    A, I = _dup_parts(D)
    m = I.size
    hbits = from_iter(x // m for x in iter_bits(L.bits))
    H = Ideal(A, hbits)
    return H, dup_ideal(D, H).bits == L.bits

"""Executable transfer and structure theorems, checked instance by instance.

Each check evaluates hypotheses and conclusions with the exhaustive
predicates and records every intermediate verdict in a transcript. A part
whose hypothesis fails is inapplicable, not passed; where a contrapositive
says something about the instance it is evaluated as a consistency check.
"""

from dataclasses import dataclass, field

from ._bits import from_iter, iter_bits
from .classify import finding, isp_domain, verdict
from .constructions import direct_product, dup, dup_base_parts, dup_ideal, product_ideal, trivext
from .factor import factor_inv_radical
from .ideals import (
    Ideal,
    all_ideals,
    ideal_literal,
    ideal_name,
    ideal_product,
    invertible_ideals,
    is_invertible,
    is_multiplication_ideal,
    maximal_ideals,
    prime_ideals,
)
from .module import (
    is_divisible,
    is_module_isomorphic_to_ring,
    is_multiplication_module,
    is_simple,
    localize_module,
    make_module,
    support,
)
from .ring import FiniteRing, is_field, localize, localize_at_prime, quotient

PASS, FAIL, INAPPLICABLE = "pass", "fail", "inapplicable"


@dataclass
class TheoremCheck:
    theorem: str
    instance: str
    status: str = INAPPLICABLE
    transcript: list = field(default_factory=list)

    @property
    def ok(self):
        return self.status != FAIL

    def note(self, line):
        self.transcript.append(line)

    def part(self, label, hypothesis, conclusion):
        """Record ``hypothesis => conclusion``; ``conclusion`` is a thunk returning bool."""
        if not hypothesis:
            self.note(f"[{label}] hypothesis false: inapplicable")
            return None
        holds = bool(conclusion())
        self.note(f"[{label}] hypothesis true, conclusion {'holds' if holds else 'FAILS'}")
        if not holds:
            self.status = FAIL
        elif self.status == INAPPLICABLE:
            self.status = PASS
        return holds

    def consistency(self, label, holds):
        self.note(f"[{label}] {'holds' if holds else 'FAILS'}")
        if not holds:
            self.status = FAIL


def _v(A, name):
    return verdict(A, name)


def _show(check, A, *names):
    for name in names:
        check.note(f"{A.provenance}: {name} = {_v(A, name).value}")


def _ring_dup(A, I):
    cache = A.memo("dup")
    if I.bits not in cache:
        cache[I.bits] = dup(A, I)
    return cache[I.bits]


def _ring_trivext(A, E):
    cache = A.memo("trivext")
    if E.provenance not in cache:
        cache[E.provenance] = trivext(A, E)
    return cache[E.provenance]


def _ann_multiple(A, a, bits, act):
    """``{a x : x in bits}`` as a bitset, using the given action table."""
    return from_iter(act[a][x] for x in iter_bits(bits))


def _reg_fixes_ideal(A, I):
    """``I = aI`` for every regular ``a``."""
    return all(_ann_multiple(A, a, I.bits, A.mul) == I.bits for a in A.regular_elements)


def _s_set(A, E):
    """``A \\ (Z(A) ∪ Z(E))``."""
    return frozenset(A) - A.zero_divisors - E.zero_divisors


def _divisible_by(E, S):
    full = (1 << E.size) - 1
    return all(from_iter(E.act[s]) == full for s in S)


# ring-only theorems


def _lemma_p_jp(check, A):
    pairs = 0
    for I in all_ideals(A):
        if not is_multiplication_ideal(I):
            continue
        for P in prime_ideals(A):
            if P < I:
                pairs += 1
                check.part(
                    f"P={ideal_name(P)} inside multiplication ideal I={ideal_name(I)}",
                    True,
                    lambda P=P, I=I: ideal_product(I, P).bits == P.bits,
                )
    if not pairs:
        check.note("no prime strictly inside a multiplication ideal")


def _prop_sisp(check, A, *others):
    s = _v(A, "strongly_isp")
    _show(check, A, "strongly_isp")
    for P in prime_ideals(A):
        Q, _ = quotient(A, P)
        check.part(f"(1) A/{ideal_name(P)} is an ISP-domain", s, lambda Q=Q: isp_domain(Q))
    for P in prime_ideals(A):
        AP, _ = localize_at_prime(A, P)
        check.part(f"(2) A_{ideal_name(P)} strongly ISP", s, lambda AP=AP: _v(AP, "strongly_isp"))
    seen = set()
    for x in A:
        if x in A.nilpotents:
            continue
        S, y = set(), A.one
        while y not in S:
            S.add(y)
            y = A.mul[y][x]
        key = frozenset(S)
        if key in seen:
            continue
        seen.add(key)
        AS, _ = localize(A, S, f"loc({A.provenance}, powers of {A.values[x]})")
        check.part(f"(2) A_S strongly ISP, S = powers of {A.values[x]}", s, lambda AS=AS: _v(AS, "strongly_isp"))
    if others:
        rings = (A, *others)
        B = direct_product(*rings)
        _show(check, B, "strongly_isp")
        check.part(
            "(3) product strongly ISP iff every factor is",
            True,
            lambda: bool(_v(B, "strongly_isp")) == all(bool(_v(R, "strongly_isp")) for R in rings),
        )


def _prop_spr(check, A):
    local = finding(A, "local").verdict
    s = _v(A, "strongly_isp")
    zero_dim = len(prime_ideals(A)) == len(maximal_ideals(A))
    _show(check, A, "local", "strongly_isp", "special_primary")
    check.note(f"every prime maximal (dimension 0): {zero_dim}")
    check.part("local zero-dimensional strongly ISP => special primary", local and zero_dim and s, lambda: _v(A, "special_primary"))
    if local and zero_dim and not _v(A, "special_primary"):
        check.consistency("contrapositive: local, not special primary => not strongly ISP", not s)


def _thm_sispamr(check, A):
    s = _v(A, "strongly_isp")
    nonzero_primes_maximal = all(P.is_zero or P in maximal_ideals(A) for P in prime_ideals(A))
    _show(check, A, "strongly_isp", "almost_multiplication")
    check.note(f"every nonzero prime maximal: {nonzero_primes_maximal}")
    check.part("strongly ISP => almost multiplication", s and nonzero_primes_maximal, lambda: _v(A, "almost_multiplication"))
    if nonzero_primes_maximal and not _v(A, "almost_multiplication"):
        check.consistency("contrapositive: not almost multiplication => not strongly ISP", not s)


def _cor_nsisp(check, A):
    _show(check, A, "zpi", "ssp", "strongly_isp")
    check.note("finite, hence Noetherian")
    vals = {bool(_v(A, p)) for p in ("zpi", "ssp", "strongly_isp")}
    check.part("ZPI <=> Noetherian SSP <=> Noetherian strongly ISP", True, lambda: len(vals) == 1)


# ring + ideal theorems


def _thm_dup(check, A, I):
    D = _ring_dup(A, I)
    _show(check, A, "isp")
    _show(check, D, "isp")
    check.part("(1) A⋈I ISP => A ISP", _v(D, "isp"), lambda: _v(A, "isp"))
    hyp = _reg_fixes_ideal(A, I)
    check.note(f"I = aI for every regular a: {hyp}")
    check.part("(2) A⋈I ISP <=> A ISP", hyp, lambda: bool(_v(D, "isp")) == bool(_v(A, "isp")))


def _lemma_regu(check, A, I):
    D = _ring_dup(A, I)
    cond1 = True
    for L in all_ideals(D):
        if not L.is_regular:
            continue
        H, is_dup = dup_base_parts(L)
        if not (is_dup and H.is_regular):
            cond1 = False
            check.note(f"regular ideal {ideal_name(L)} is not H⋈I with H regular")
            break
    cond2 = _reg_fixes_ideal(A, I)
    check.note(f"(1) regular ideals of A⋈I have the form H⋈I: {cond1}")
    check.note(f"(2) I = aI for every regular a: {cond2}")
    check.part("(1) <=> (2)", True, lambda: cond1 == cond2)


def _lemma_inver(check, A, I):
    D = _ring_dup(A, I)
    for J in all_ideals(A):
        JI = dup_ideal(D, J)
        check.part(f"J={ideal_name(J)}: J⋈I invertible => J invertible", is_invertible(JI), lambda J=J: is_invertible(J))


def _thm_dupli(check, A, I):
    D = _ring_dup(A, I)
    _show(check, A, "strongly_isp")
    _show(check, D, "strongly_isp")
    check.part("(1) A⋈I strongly ISP => A strongly ISP", _v(D, "strongly_isp"), lambda: _v(A, "strongly_isp"))
    idempotent = ideal_product(I, I).bits == I.bits
    check.note(f"I idempotent (finitely generated automatically): {idempotent}")
    check.part(
        "(2) A⋈I strongly ISP <=> A strongly ISP",
        idempotent,
        lambda: bool(_v(D, "strongly_isp")) == bool(_v(A, "strongly_isp")),
    )


def _remark_tq_dup(check, A, I):
    D = _ring_dup(A, I)
    _show(check, A, "total_quotient")
    _show(check, D, "total_quotient")
    check.part("A total quotient => A⋈I total quotient", _v(A, "total_quotient"), lambda: _v(D, "total_quotient"))


# ring + module theorems


def _thm_exten(check, A, E):
    R = _ring_trivext(A, E)
    S = _s_set(A, E)
    hyp = _divisible_by(E, S)
    check.note(f"S = A \\ (Z(A) ∪ Z(E)) has {len(S)} elements; E = sE for all s in S: {hyp}")
    meeting = [I for I in all_ideals(A) if I.is_proper and any(s in I for s in S)]
    check.note(f"proper ideals of A meeting S: {len(meeting)}")
    _show(check, R, "isp")

    def rhs():
        return all(factor_inv_radical(I) is not None for I in meeting)

    check.part("A∝E ISP <=> ideals meeting S factor", hyp, lambda: bool(_v(R, "isp")) == rhs())


def _prop_strong(check, A, E):
    R = _ring_trivext(A, E)
    sR = _v(R, "strongly_isp")
    _show(check, R, "strongly_isp")
    _show(check, A, "strongly_isp", "von_neumann_regular")
    mult = is_multiplication_module(E)
    check.note(f"E multiplication module: {mult}")
    check.part("(1) A∝E strongly ISP => A strongly ISP", sR, lambda: _v(A, "strongly_isp"))
    check.part("(2) A vNr and E multiplication => A∝E strongly ISP", _v(A, "von_neumann_regular") and mult, lambda: sR)
    hyp3 = sR and _divisible_by(E, _s_set(A, E))
    check.part("(3) A∝E strongly ISP and E = sE => E multiplication", hyp3, lambda: mult)


def _prop_supp(check, A, E):
    R = _ring_trivext(A, E)
    all_max = len(prime_ideals(R)) == len(maximal_ideals(R))
    _show(check, R, "strongly_isp")
    check.note(f"every prime of A∝E maximal: {all_max}")
    hyp = _v(R, "strongly_isp") and all_max
    for M in support(E):
        if M not in maximal_ideals(A):
            continue

        def concl(M=M):
            AM, _ = localize_at_prime(A, M)
            EM = localize_module(E, M)
            check.note(f"M={ideal_name(M)}: |A_M|={AM.size}, |E_M|={EM.size}, A_M field: {is_field(AM)}")
            return is_field(AM) and is_module_isomorphic_to_ring(EM)

        check.part(f"M={ideal_name(M)} in Supp(E): A_M field and E_M ≅ A_M", hyp, concl)


def _prop_car(check, A, E):
    R = _ring_trivext(A, E)
    domain = bool(_v(A, "domain"))
    divisible = is_divisible(E)
    check.note(f"A domain: {domain}; E divisible: {divisible}")
    _show(check, R, "strongly_isp")

    def iff():
        rhs = isp_domain(A) and is_simple(E)
        check.note(f"A ISP-domain and E simple: {rhs}")
        return bool(_v(R, "strongly_isp")) == rhs

    check.part("A∝E strongly ISP <=> A ISP-domain and E simple", domain and divisible, iff)


# rings list


def _prop_2_2(check, *rings):
    B = direct_product(*rings)
    _show(check, B, "isp")
    for R in rings:
        _show(check, R, "isp")
    check.part("product ISP <=> every factor ISP", True, lambda: bool(_v(B, "isp")) == all(bool(_v(R, "isp")) for R in rings))

    # every ideal of the product is a product of component ideals
    count = 1
    for R in rings:
        count *= len(all_ideals(R))
    check.consistency(f"ideal count {len(all_ideals(B))} = product of factor counts {count}", len(all_ideals(B)) == count)
    inv = {L.bits for L in invertible_ideals(B)}
    expected = {product_ideal(B, [I for I in Js]).bits for Js in _cartesian([invertible_ideals(R) for R in rings])}
    check.consistency("invertible ideals of the product are products of invertible ideals", inv == expected)


def _cartesian(lists):
    out = [()]
    for xs in lists:
        out = [o + (x,) for o in out for x in xs]
    return out


RING_THEOREMS = {
    "lemma-p=jp": _lemma_p_jp,
    "prop-sisp": _prop_sisp,
    "prop-spr": _prop_spr,
    "thm-sispamr": _thm_sispamr,
    "cor-nsisp": _cor_nsisp,
}
IDEAL_THEOREMS = {
    "thm-dup": _thm_dup,
    "lemma-regu": _lemma_regu,
    "lemma-inver": _lemma_inver,
    "thm-dupli": _thm_dupli,
    "remark-tq-dup": _remark_tq_dup,
}
MODULE_THEOREMS = {
    "thm-exten": _thm_exten,
    "prop-strong": _prop_strong,
    "prop-supp": _prop_supp,
    "prop-car": _prop_car,
}
PRODUCT_THEOREMS = {"prop-2.2": _prop_2_2}

THEOREMS = {**PRODUCT_THEOREMS, **MODULE_THEOREMS, **IDEAL_THEOREMS, **RING_THEOREMS}
THEOREM_IDS = tuple(THEOREMS)


def _describe(args):
    parts = []
    for x in args:
        if isinstance(x, FiniteRing):
            parts.append(x.provenance)
        elif isinstance(x, Ideal):
            parts.append(ideal_literal(x))
        else:
            parts.append(getattr(x, "provenance", repr(x)))
    return "; ".join(parts)


def check_theorem(theorem_id, *instance):
    """Run one theorem on one instance and return a ``TheoremCheck``.

    Instances: ``prop-2.2`` takes two or more rings; ``prop-sisp`` a ring and
    optionally more rings for its product part; module theorems ``(A, E)``;
    ideal theorems ``(A, I)``; the rest a single ring.
    """
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    _validate(theorem_id, instance)
    check = TheoremCheck(theorem_id, _describe(instance))
    THEOREMS[theorem_id](check, *instance)
    return check


def _validate(tid, instance):
    if tid in PRODUCT_THEOREMS:
        if len(instance) < 2 or not all(isinstance(R, FiniteRing) for R in instance):
            raise ValueError(f"{tid} needs at least two finite rings")
    elif tid in IDEAL_THEOREMS:
        if len(instance) != 2 or not isinstance(instance[1], Ideal) or instance[1].ring is not instance[0]:
            raise ValueError(f"{tid} needs a ring and one of its ideals")
    elif tid in MODULE_THEOREMS:
        if len(instance) != 2 or getattr(instance[1], "ring", None) is not instance[0] or isinstance(instance[1], Ideal):
            raise ValueError(f"{tid} needs a ring and a module over it")
    elif tid == "prop-sisp":
        if not instance or not all(isinstance(R, FiniteRing) for R in instance):
            raise ValueError(f"{tid} needs one or more finite rings")
    elif len(instance) != 1 or not isinstance(instance[0], FiniteRing):
        raise ValueError(f"{tid} needs exactly one finite ring")


def module_orders(A, limit):
    """Nonincreasing tuples of cyclic orders (divisors ``>= 2`` of the characteristic) with product ``<= limit``."""
    if not A.is_additively_cyclic:
        return []
    divs = [d for d in range(A.characteristic, 1, -1) if A.characteristic % d == 0]
    out = []

    def grow(prefix, prod_, start):
        if prefix:
            out.append(tuple(prefix))
        for k in range(start, len(divs)):
            d = divs[k]
            if prod_ * d <= limit:
                grow(prefix + [d], prod_ * d, k)

    grow([], 1, 0)
    return sorted(out, key=lambda t: (len(t), t))


def cached_module(A, orders):
    cache = A.memo("modules")
    if orders not in cache:
        cache[orders] = make_module(A, orders)
    return cache[orders]


def theorem_suite(rings, max_size=64):
    """Instances for every theorem over a corpus, keeping constructed rings within ``max_size``.

    Ring-only theorems run on every ring; ideal theorems on each ``(A, I)``
    with ``|A||I| <= max_size``; module theorems on each additively cyclic
    ring and reduction module with ``|A||E| <= max_size``; ``prop-2.2`` and
    the product part of ``prop-sisp`` on the factors of product rings and on
    pairs of rings whose product fits.
    """
    rings = list(rings)
    out = []
    for A in rings:
        for tid in RING_THEOREMS:
            out.append((tid, (A,)))
        for I in all_ideals(A):
            if A.size * I.size <= max_size:
                for tid in IDEAL_THEOREMS:
                    out.append((tid, (A, I)))
        for orders in module_orders(A, max_size // A.size):
            E = cached_module(A, orders)
            for tid in MODULE_THEOREMS:
                out.append((tid, (A, E)))
    groups = []
    for A in rings:
        if A.tag.kind == "product":
            groups.append(tuple(A.tag.components))
    small = [A for A in rings if A.tag.kind == "zmod"]
    for i, A in enumerate(small):
        for B in small[i:]:
            if A.size * B.size <= max_size:
                groups.append((A, B))
    for g in groups:
        out.append(("prop-2.2", g))
        out.append(("prop-sisp", g))
    return out


def run_suite(entries, shard=0, shards=1):
    """Run the ``shard``-th of ``shards`` contiguous slices: ``[(position, TheoremCheck)]``.

    Slices are contiguous so that checks sharing a ring share its caches.
    """
    lo, hi = len(entries) * shard // shards, len(entries) * (shard + 1) // shards
    out = []
    for i in range(lo, hi):
        tid, inst = entries[i]
        out.append((i, check_theorem(tid, *inst)))
    return out

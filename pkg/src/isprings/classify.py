"""Ring-class predicates, witnessed reports and the implication diagram.

Verdicts are three-valued. ``VACUOUS`` marks a property that holds only
because its quantifier ranges over nothing (on a finite ring every regular
element is a unit, so there are no proper regular ideals). It is truthy.
"""

from dataclasses import dataclass, field
from enum import Enum

from ._bits import iter_bits
from .factor import factor
from .ideals import (
    Ideal,
    all_ideals,
    generated_ideal,
    ideal_product,
    maximal_ideals,
    prime_ideals,
    principal_ideal,
    zero_ideal,
)
from .ring import localize_at_prime, nilradical


class Verdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    VACUOUS = "vacuous-true"

    def __bool__(self):
        return self is not Verdict.FALSE


@dataclass(frozen=True)
class Finding:
    """A verdict plus whatever backs it up."""

    verdict: Verdict
    counterexample: Ideal = None
    witness: Ideal = None
    factorizations: tuple = ()
    note: str = ""


class InconsistencyError(AssertionError):
    pass


PROPERTIES = (
    "total_quotient",
    "isp",
    "strongly_isp",
    "sp",
    "ssp",
    "zpi",
    "zpui",
    "special_primary",
    "almost_multiplication",
    "von_neumann_regular",
    "marot",
    "dedekind",
    "local",
    "field",
    "domain",
    "reduced",
)

# (premise, conclusion) arrows of the implication diagram
IMPLICATIONS = (
    ("total_quotient", "isp"),
    ("sp", "isp"),
    ("ssp", "strongly_isp"),
    ("zpui", "strongly_isp"),
    ("von_neumann_regular", "strongly_isp"),
    ("strongly_isp", "isp"),
)

_FACTOR_MODES = {
    "isp": ("isp", True),
    "strongly_isp": ("strong", False),
    "sp": ("sp", True),
    "ssp": ("ssp", False),
    "zpi": ("zpi", False),
    "zpui": ("zpui", False),
}


def _bool(flag, counterexample=None, witness=None, note=""):
    if flag:
        return Finding(Verdict.TRUE, witness=witness, note=note)
    return Finding(Verdict.FALSE, counterexample=counterexample, note=note)


def _factor_finding(A, name):
    mode, regular_only = _FACTOR_MODES[name]
    targets = [I for I in all_ideals(A) if I.is_proper and (I.is_regular or not regular_only)]
    if not targets:
        return Finding(Verdict.VACUOUS, note="no proper regular ideals")
    found = []
    for I in targets:
        f = factor(I, mode)
        if f is None:
            return Finding(Verdict.FALSE, counterexample=I, factorizations=tuple(found), note="no factorization")
        found.append((I, f))
    return Finding(Verdict.TRUE, factorizations=tuple(found))


def _total_quotient(A):
    bad = sorted(A.regular_elements - A.units)
    return _bool(not bad, counterexample=principal_ideal(A, bad[0]) if bad else None)


def _local(A):
    ms = maximal_ideals(A)
    return _bool(len(ms) == 1, counterexample=ms[1] if len(ms) > 1 else None, witness=ms[0] if len(ms) == 1 else None)


def _field(A):
    nonzero_proper = [I for I in all_ideals(A) if I.is_proper and not I.is_zero]
    return _bool(not nonzero_proper, counterexample=nonzero_proper[0] if nonzero_proper else None)


def _domain(A):
    Z = zero_ideal(A)
    bad = sorted(A.zero_divisors - {0})
    return _bool(not bad, counterexample=principal_ideal(A, bad[0]) if bad else None, witness=Z if not bad else None)


def _reduced(A):
    N = nilradical(A)
    return _bool(N.is_zero, counterexample=N)


def _special_primary(A):
    primes = prime_ideals(A)
    if len(primes) != 1:
        return Finding(Verdict.FALSE, counterexample=primes[1], note="more than one prime")
    M = primes[0]
    powers, P = set(), M
    while P.bits not in powers:
        powers.add(P.bits)
        P = ideal_product(P, M)
    for I in all_ideals(A):
        if I.is_proper and I.bits not in powers:
            return Finding(Verdict.FALSE, counterexample=I, note="not a power of the maximal ideal")
    return Finding(Verdict.TRUE, witness=M)


def is_special_primary(A):
    return finding(A, "special_primary").verdict


def _almost_multiplication(A):
    # a finite localization is never a rank-one valuation domain
    for P in prime_ideals(A):
        AP, _ = localize_at_prime(A, P)
        if not is_special_primary(AP):
            return Finding(Verdict.FALSE, counterexample=P, note="localization is not special primary")
    return Finding(Verdict.TRUE)


def _vnr(A):
    for a in A:
        if not any(A.mul[A.mul[a][a]][x] == a for x in A):
            return Finding(Verdict.FALSE, counterexample=principal_ideal(A, a))
    return Finding(Verdict.TRUE)


def _marot(A):
    targets = [I for I in all_ideals(A) if I.is_proper and I.is_regular]
    if not targets:
        return Finding(Verdict.VACUOUS, note="no proper regular ideals")
    for I in targets:
        regs = [x for x in iter_bits(I.bits) if x in A.regular_elements]
        if generated_ideal(A, regs).bits != I.bits:
            return Finding(Verdict.FALSE, counterexample=I)
    return Finding(Verdict.TRUE)


def _dedekind(A):
    targets = [I for I in all_ideals(A) if I.is_proper and I.is_regular]
    if not targets:
        return Finding(Verdict.VACUOUS, note="no proper regular ideals")
    found = []
    for I in targets:
        f = factor(I, "zpi")
        if f is None:
            return Finding(Verdict.FALSE, counterexample=I)
        found.append((I, f))
    return Finding(Verdict.TRUE, factorizations=tuple(found))


_DECIDERS = {
    "total_quotient": _total_quotient,
    "special_primary": _special_primary,
    "almost_multiplication": _almost_multiplication,
    "von_neumann_regular": _vnr,
    "marot": _marot,
    "dedekind": _dedekind,
    "local": _local,
    "field": _field,
    "domain": _domain,
    "reduced": _reduced,
}


def finding(A, name):
    """Memoized decision of property ``name`` for ``A``."""
    cache = A.memo("findings")
    if name not in cache:
        if name in _FACTOR_MODES:
            cache[name] = _factor_finding(A, name)
        elif name in _DECIDERS:
            cache[name] = _DECIDERS[name](A)
        else:
            raise ValueError(f"unknown property {name!r}")
    return cache[name]


def verdict(A, name):
    return finding(A, name).verdict


def is_total_quotient(A):
    return verdict(A, "total_quotient")


def is_isp(A):
    return verdict(A, "isp")


def is_strongly_isp(A):
    return verdict(A, "strongly_isp")


def is_sp(A):
    return verdict(A, "sp")


def is_ssp(A):
    return verdict(A, "ssp")


def is_zpi(A):
    return verdict(A, "zpi")


def is_zpui(A):
    return verdict(A, "zpui")


def is_almost_multiplication(A):
    return verdict(A, "almost_multiplication")


def is_von_neumann_regular(A):
    return verdict(A, "von_neumann_regular")


def is_marot(A):
    return verdict(A, "marot")


def is_dedekind(A):
    return verdict(A, "dedekind")


def is_domain(A):
    return verdict(A, "domain")


def implication_violations(verdicts):
    return [(p, q) for p, q in IMPLICATIONS if verdicts[p] and not verdicts[q]]


def check_implications(A):
    """True iff every arrow of the diagram holds for ``A``."""
    return not implication_violations({p: verdict(A, p) for p in PROPERTIES})


@dataclass
class ClassificationReport:
    provenance: str
    size: int
    verdicts: dict
    findings: dict = field(repr=False)
    ring: object = field(default=None, repr=False)
    extras: dict = field(default_factory=dict, repr=False)

    def __getitem__(self, name):
        return self.verdicts[name]


def classify(A):
    """Decide every property, attach witnesses, and validate the implication diagram."""
    from .integers import IntegerRing, classify_integers

    if isinstance(A, IntegerRing):
        return classify_integers(A)
    findings = {name: finding(A, name) for name in PROPERTIES}
    verdicts = {name: f.verdict for name, f in findings.items()}
    bad = implication_violations(verdicts)
    if bad:
        p, q = bad[0]
        raise InconsistencyError(f"{A.provenance}: {p} = {verdicts[p].value} but {q} = {verdicts[q].value}")
    return ClassificationReport(A.provenance, A.size, verdicts, findings, ring=A)


def isp_domain(A):
    """ISP-domain: a domain that is an ISP-ring."""
    return bool(is_domain(A)) and bool(is_isp(A))


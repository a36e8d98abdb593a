"""Deterministic rendering of classification reports, ideal listings and spectra.

The machine-readable form is a plain tree whose key insertion order is the
schema order; ``json.dumps`` without key sorting keeps it byte-stable.
Ideals appear as ``{"name": ..., "elements": [indices]}``.
"""

import json

from ._bits import to_list
from .classify import IMPLICATIONS, PROPERTIES
from .ideals import (
    all_ideals,
    ideal_name,
    is_invertible,
    is_prime,
    is_radical,
    maximal_ideals,
    minimal_primes,
    prime_ideals,
    zero_ideal,
)

LABELS = {
    "total_quotient": "total quotient",
    "isp": "ISP",
    "strongly_isp": "strongly ISP",
    "sp": "SP",
    "ssp": "SSP",
    "zpi": "ZPI",
    "zpui": "ZPUI",
    "special_primary": "special primary",
    "almost_multiplication": "almost multiplication",
    "von_neumann_regular": "von Neumann regular",
    "marot": "Marot",
    "dedekind": "Dedekind",
    "local": "local",
    "field": "field",
    "domain": "domain",
    "reduced": "reduced",
}


def dumps(tree):
    return json.dumps(tree, ensure_ascii=False, indent=2)


def ideal_tree(I):
    if I is None:
        return None
    return {"name": ideal_name(I), "elements": to_list(I.bits)}


def factorization_tree(I, f):
    return {
        "ideal": ideal_tree(I),
        "invertible": ideal_tree(f.invertible_part),
        "radicals": [ideal_tree(H) for H in f.radical_parts],
    }


def report_tree(report, expression=None):
    """Fixed-order tree: ring, size, verdicts, witnesses, implications."""
    ring = expression or report.provenance
    verdicts = {p: report.verdicts[p].value for p in PROPERTIES}
    if report.size is None:
        # integer backend: ideals are named by their nonnegative generator
        cx = report.extras["counterexamples"]
        witnesses = {
            p: {"verdict": verdicts[p], "counterexample": f"({cx[p]})" if p in cx else None, "bound": report.extras["bound"]}
            for p in PROPERTIES
        }
    else:
        witnesses = {}
        for p in PROPERTIES:
            f = report.findings[p]
            witnesses[p] = {
                "verdict": verdicts[p],
                "counterexample": ideal_tree(f.counterexample),
                "witness": ideal_tree(f.witness),
                "factorizations": [factorization_tree(I, g) for I, g in f.factorizations],
                "note": f.note,
            }
    implications = [
        {"premise": a, "conclusion": b, "holds": not (report.verdicts[a] and not report.verdicts[b])}
        for a, b in IMPLICATIONS
    ]
    return {"ring": ring, "size": report.size, "verdicts": verdicts, "witnesses": witnesses, "implications": implications}


def report_text(report, expression=None):
    ring = expression or report.provenance
    size = "infinite" if report.size is None else str(report.size)
    lines = [f"ring: {ring}", f"size: {size}"]
    for p in PROPERTIES:
        line = f"{LABELS[p]}: {report.verdicts[p].value}"
        if report.size is None:
            cx = report.extras["counterexamples"].get(p)
            if cx is not None:
                line += f" (counterexample ({cx}))"
        else:
            f = report.findings[p]
            if f.counterexample is not None:
                line += f" (counterexample {ideal_name(f.counterexample)})"
            elif f.note and report.verdicts[p].value == "vacuous-true":
                line += f" ({f.note})"
        lines.append(line)
    return "\n".join(lines)


def _ideal_flags(I):
    A = I.ring
    flags = []
    if not I.is_proper:
        flags.append("unit")
    if I.is_zero:
        flags.append("zero")
    if I.is_proper and is_prime(I):
        flags.append("prime")
    if I in maximal_ideals(A):
        flags.append("maximal")
    if I.is_proper and is_radical(I):
        flags.append("radical")
    if is_invertible(I):
        flags.append("invertible")
    return flags


def ideals_tree(A, ring):
    return {
        "ring": ring,
        "size": A.size,
        "ideals": [{**ideal_tree(I), "size": I.size, "flags": _ideal_flags(I)} for I in all_ideals(A)],
    }


def ideals_text(A, ring):
    lines = [f"ring: {ring}", f"ideals: {len(all_ideals(A))}"]
    for I in all_ideals(A):
        flags = " ".join(_ideal_flags(I))
        lines.append(f"{ideal_name(I)} size={I.size}" + (f" [{flags}]" if flags else ""))
    return "\n".join(lines)


def spectrum_tree(A, ring):
    minimal = {P.bits for P in minimal_primes(zero_ideal(A))}
    maximal = {M.bits for M in maximal_ideals(A)}
    return {
        "ring": ring,
        "primes": [
            {**ideal_tree(P), "maximal": P.bits in maximal, "minimal": P.bits in minimal} for P in prime_ideals(A)
        ],
    }


def spectrum_text(A, ring):
    tree = spectrum_tree(A, ring)
    lines = [f"ring: {ring}", f"primes: {len(tree['primes'])}"]
    for P in tree["primes"]:
        tags = [t for t in ("maximal", "minimal") if P[t]]
        lines.append(P["name"] + (f" [{' '.join(tags)}]" if tags else ""))
    return "\n".join(lines)

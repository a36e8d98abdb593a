"""Naive reference implementations, kept independent of the package's bitset engine.

Everything works on frozensets of element indices read straight from the
ring's tables, with fixpoint closures instead of cyclic-coset tricks.
"""

from itertools import combinations_with_replacement
from math import isqrt


def close_ideal(A, gens):
    """Smallest ideal containing ``gens``: close under + and ring multiplication."""
    s = {0} | set(gens)
    while True:
        new = {A.add[x][y] for x in s for y in s} | {A.mul[a][x] for a in A for x in s}
        if new <= s:
            return frozenset(s)
        s |= new


def naive_ideals(A):
    out = {close_ideal(A, [])}
    frontier = list(out)
    while frontier:
        I = frontier.pop()
        for a in A:
            if a not in I:
                J = close_ideal(A, I | {a})
                if J not in out:
                    out.add(J)
                    frontier.append(J)
    return out


def naive_product(A, I, J):
    return close_ideal(A, [A.mul[x][y] for x in I for y in J])


def naive_radical(A, I):
    out = set()
    for x in A:
        y = x
        for _ in range(A.size + 1):
            if y in I:
                out.add(x)
                break
            y = A.mul[y][x]
    return frozenset(out)


def naive_is_prime(A, I):
    if len(I) == A.size:
        return False
    return all(a in I or b in I for a in A for b in A if A.mul[a][b] in I)


def naive_invertibles(A, ideals):
    """``J`` with ``JK = A`` for some ideal ``K`` (a finite ring is its own total quotient ring)."""
    whole = frozenset(A)
    return [J for J in ideals if any(naive_product(A, J, K) == whole for K in ideals)]


def _key(I):
    return (len(I), sum(1 << x for x in I))


def bfs_factor(A, target, mode="strong"):
    """Least ``(J, [H...])`` with ``target = J H1 ... Hn`` found by breadth-first search over ``n``.

    The search stops once the set of products reachable with ``n`` factors
    repeats an earlier set; from then on nothing new can appear.
    """
    ideals = naive_ideals(A)
    whole = frozenset(A)
    if mode in ("zpi", "zpui"):
        alphabet = [H for H in ideals if naive_is_prime(A, H)]
    else:
        alphabet = [H for H in ideals if H != whole and naive_radical(A, H) == H]
    invs = naive_invertibles(A, ideals) if mode in ("strong", "isp", "zpui") else [whole]
    alphabet.sort(key=_key)
    invs.sort(key=_key)
    if not alphabet:
        return None
    reach, seen, n = set(invs), [], 0
    while True:
        n += 1
        reach = frozenset(naive_product(A, P, H) for P in reach for H in alphabet)
        if target in reach:
            break
        if reach in seen:
            return None
        seen.append(reach)
    best = None
    for J in invs:
        for parts in combinations_with_replacement(alphabet, n):
            P = J
            for H in parts:
                P = naive_product(A, P, H)
            if P == target:
                cand = (_key(J), tuple(_key(H) for H in parts))
                if best is None or cand < best[0]:
                    best = (cand, J, parts)
    return best[1], list(best[2])


def divisors(n):
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def brute_squarefree(d):
    return d > 1 and all(d % (k * k) for k in range(2, isqrt(d) + 1))


def divisor_tuple_isp(n):
    """Over all ``(m, d)`` with ``m d = n`` and ``d > 1`` squarefree, the one with least ``m``."""
    if n == 0:
        return 1, [0]
    for m in divisors(n):
        if brute_squarefree(n // m):
            return m, [n // m]
    return None

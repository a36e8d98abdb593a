"""Bitset helpers shared by rings and modules.

Subsets of a carrier ``0..n-1`` are Python ints; bit ``i`` set means element
``i`` is a member. Additive subgroups are built from an addition table.
"""


def iter_bits(bits):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def to_list(bits):
    return list(iter_bits(bits))


def from_iter(items):
    bits = 0
    for i in items:
        bits |= 1 << i
    return bits


def popcount(bits):
    return bin(bits).count("1")


def subset(a, b):
    return a & ~b == 0


def add_cyclic(add, group, x):
    """Return the subgroup ``group + <x>``; ``group`` must already be a subgroup."""
    if (group >> x) & 1:
        return group
    members = to_list(group)
    result = group
    y = x
    while not (result >> y) & 1:
        row = add[y]
        for s in members:
            result |= 1 << row[s]
        y = add[y][x]
    return result


def span(add, gens, start=1):
    """Additive subgroup generated by ``gens`` (``start`` defaults to ``{0}``)."""
    group = start
    for g in gens:
        group = add_cyclic(add, group, g)
    return group


def additive_generators(add, bits):
    """Greedy additive generating set of the subgroup ``bits``, in index order."""
    gens = []
    group = 1
    for x in iter_bits(bits):
        if not (group >> x) & 1:
            group = add_cyclic(add, group, x)
            gens.append(x)
            if group == bits:
                break
    return gens

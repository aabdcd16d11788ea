"""Brute-force reference computations that share no code with the package."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, prod


def coords(index: int, moduli: tuple[int, ...]) -> tuple[int, ...]:
    """Mixed-radix digits of ``index``, first modulus most significant."""
    out = []
    for m in reversed(moduli):
        index, r = divmod(index, m)
        out.append(r)
    return tuple(reversed(out))


def abelian_tensor_order(moduli) -> int:
    return prod(gcd(a, b) for a in moduli for b in moduli)


def abelian_wedge_order(moduli) -> int:
    return prod(gcd(moduli[i], moduli[j]) for i, j in itertools.combinations(range(len(moduli)), 2))


def abelian_tensor_zero(x, y, moduli) -> bool:
    return all((x[i] * y[j]) % gcd(moduli[i], moduli[j]) == 0
               for i in range(len(moduli)) for j in range(len(moduli)))


def abelian_wedge_zero(x, y, moduli) -> bool:
    return all((x[i] * y[j] - x[j] * y[i]) % gcd(moduli[i], moduli[j]) == 0
               for i, j in itertools.combinations(range(len(moduli)), 2))


def abelian_degrees(moduli) -> tuple[Fraction, Fraction]:
    n = prod(moduli)
    elems = [coords(i, moduli) for i in range(n)]
    t = sum(abelian_tensor_zero(x, y, moduli) for x in elems for y in elems)
    w = sum(abelian_wedge_zero(x, y, moduli) for x in elems for y in elems)
    return Fraction(t, n * n), Fraction(w, n * n)


def commuting_pairs(table, A, B) -> int:
    return sum(1 for a in A for b in B if table[a][b] == table[b][a])


def class_count(table, n) -> int:
    inv = [row.index(0) for row in table]
    seen, count = set(), 0
    for x in range(n):
        if x not in seen:
            count += 1
            seen |= {table[table[inv[g]][x]][g] for g in range(n)}
    return count


def closed(table, S) -> bool:
    return all(table[a][b] in S for a in S for b in S)


def normal_subgroups_by_subsets(table, n) -> set[frozenset[int]]:
    """Every union of conjugacy classes containing 0 that is closed."""
    inv = [row.index(0) for row in table]
    classes, seen = [], set()
    for x in range(1, n):
        if x not in seen:
            c = frozenset(table[table[inv[g]][x]][g] for g in range(n))
            seen |= c
            classes.append(c)
    out = set()
    for r in range(len(classes) + 1):
        for combo in itertools.combinations(classes, r):
            S = frozenset({0}).union(*combo)
            if n % len(S) == 0 and closed(table, S):
                out.add(S)
    return out

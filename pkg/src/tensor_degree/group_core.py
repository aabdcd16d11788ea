"""Finite groups stored as multiplication tables.

Elements are the integers ``0..n-1`` and ``0`` is always the identity.  The
product ``g*h`` is ``table[g, h]``.  Conjugation follows the exponential
notation ``x^g = g^-1 x g`` unless a function says otherwise.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import NotAGroup, NotNormal

#: groups up to this order get an exhaustive associativity check
EXHAUSTIVE_ASSOC_LIMIT = 64
#: random triples tested above the exhaustive limit
ASSOC_SAMPLES = 10_000


class FiniteGroup:
    """A validated finite group given by its Cayley table.

    Build instances with :func:`build_group`; the constructor trusts its input.
    """

    def __init__(self, table: np.ndarray, inverse: np.ndarray, label: str = ""):
        self.table = table
        self.inverse = inverse
        self.label = label
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    @cached_property
    def rows(self) -> list[list[int]]:
        # plain lists: scalar lookups on numpy arrays are slow in tight loops
        return self.table.tolist()

    @cached_property
    def inv(self) -> list[int]:
        return self.inverse.tolist()

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def conj(self, x: int, g: int) -> int:
        """``x^g = g^-1 x g``."""
        rows = self.rows
        return rows[rows[self.inv[g]][x]][g]

    def lconj(self, g: int, x: int) -> int:
        """Left conjugation ``g x g^-1``."""
        rows = self.rows
        return rows[rows[g][x]][self.inv[g]]

    def commutator(self, h: int, k: int) -> int:
        """``[h, k] = h k h^-1 k^-1``, the commutator matching left actions."""
        rows, inv = self.rows, self.inv
        return rows[rows[rows[h][k]][inv[h]]][inv[k]]

    def element_order(self, g: int) -> int:
        n, x = 1, g
        while x != 0:
            x = self.rows[x][g]
            n += 1
        return n

    def order_profile(self) -> list[int]:
        """Sorted list of element orders (an isomorphism-invariant fingerprint)."""
        return sorted(self.element_order(g) for g in range(self.order))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, repr=False)
    elements: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def members(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, tuple(sorted(self.members & other.members)))

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by element index."""
        gens: list[int] = []
        span: set[int] = {0}
        for g in self.elements:
            if g not in span:
                gens.append(g)
                span = set(subgroup_closure(self.parent, gens).elements)
                if len(span) == len(self.elements):
                    break
        return tuple(gens)

    def check(self) -> None:
        """Raise ``NotAGroup`` unless this is a genuine subgroup of its parent."""
        G = self.parent
        if 0 not in self.members:
            raise NotAGroup("subgroup does not contain the identity")
        if list(self.elements) != sorted(self.members):
            raise NotAGroup("subgroup elements not strictly increasing")
        idx = np.asarray(self.elements)
        prods = G.table[np.ix_(idx, idx)]
        if not np.isin(prods, idx).all():
            raise NotAGroup("subgroup not closed under products")
        if not np.isin(G.inverse[idx], idx).all():
            raise NotAGroup("subgroup not closed under inverses")
        if G.order % len(self.elements):
            raise NotAGroup("subgroup order does not divide group order")


@dataclass(frozen=True)
class ClassPartition:
    classes: tuple[tuple[int, ...], ...]
    reps: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]


def _first_assoc_failure(table: np.ndarray) -> tuple[int, int, int] | None:
    n = table.shape[0]
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        ar = np.arange(n)
        left = table[table[:, :, None], ar[None, None, :]]   # (ab)c
        right = table[ar[:, None, None], table[None, :, :]]  # a(bc)
        bad = np.argwhere(left != right)
        return tuple(int(v) for v in bad[0]) if len(bad) else None
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
    bad = np.flatnonzero(table[table[a, b], c] != table[a, table[b, c]])
    if len(bad):
        i = bad[0]
        return int(a[i]), int(b[i]), int(c[i])
    return None


def build_group(table, label: str = "") -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`.

    If the identity is not element 0 the labels of the identity and of 0 are
    swapped so that it is.
    """
    T = np.array(table, dtype=np.int64)
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise NotAGroup(f"table must be a non-empty square array, got shape {T.shape}")
    n = T.shape[0]
    if T.min() < 0 or T.max() >= n:
        raise NotAGroup("table entries must lie in 0..n-1")
    full = np.arange(n)
    bad_rows = np.flatnonzero((np.sort(T, axis=1) != full).any(axis=1))
    if len(bad_rows):
        raise NotAGroup(f"row {bad_rows[0]} is not a permutation (closure/cancellation fails)")
    bad_cols = np.flatnonzero((np.sort(T, axis=0) != full[:, None]).any(axis=0))
    if len(bad_cols):
        raise NotAGroup(f"column {bad_cols[0]} is not a permutation (closure/cancellation fails)")
    ids = [e for e in range(n) if np.array_equal(T[e], full) and np.array_equal(T[:, e], full)]
    if not ids:
        raise NotAGroup("no two-sided identity element")
    e = ids[0]
    if e != 0:
        perm = full.copy()
        perm[[0, e]] = perm[[e, 0]]
        # relabel: new element i is old element perm[i]; perm is an involution
        T = perm[T[np.ix_(perm, perm)]]
    bad = _first_assoc_failure(T)
    if bad is not None:
        a, b, c = bad
        raise NotAGroup(f"associativity fails for triple ({a}, {b}, {c})")
    inverse = np.argmin(T, axis=1)  # position of the 0 entry in each row
    return FiniteGroup(T, inverse, label)


def subgroup_closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens`` (breadth-first closure)."""
    gens = sorted(set(int(g) for g in gens) - {0})
    rows = G.rows
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = rows[x]
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(G, tuple(sorted(seen)))


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    members = S.members
    for g in range(G.order):
        for s in S.elements:
            if G.conj(s, g) not in members:
                return False
    return True


def centralizer(G: FiniteGroup, K: Subgroup, X: Iterable[int]) -> Subgroup:
    """``{k in K : xk = kx for every x in X}``."""
    rows = G.rows
    X = [x for x in set(X) if x != 0]
    out = tuple(k for k in K.elements if all(rows[x][k] == rows[k][x] for x in X))
    return Subgroup(G, out)


def conjugacy_classes(G: FiniteGroup, H: Subgroup, K: Subgroup) -> ClassPartition:
    """Orbits of ``H`` under conjugation by ``K``.

    Classes are listed by their minimum element, which is also the
    representative.
    """
    members = H.members
    seen: set[int] = set()
    classes = []
    for h in H.elements:
        if h in seen:
            continue
        orbit = {G.conj(h, k) for k in K.elements}
        if not orbit <= members:
            raise NotNormal(f"conjugating {h} by elements of K leaves H")
        seen |= orbit
        classes.append(tuple(sorted(orbit)))
    return ClassPartition(tuple(classes), tuple(c[0] for c in classes))


def relative_commutator(G: FiniteGroup, H: Subgroup, K: Subgroup) -> Subgroup:
    """``[H, K]``, generated by all commutators of an element of H with one of K."""
    comms = {G.commutator(h, k) for h in H.elements for k in K.elements}
    return subgroup_closure(G, comms)


def product_set(G: FiniteGroup, H: Subgroup, K: Subgroup) -> frozenset[int]:
    rows = G.rows
    return frozenset(rows[h][k] for h in H.elements for k in K.elements)


def smallest_prime_divisor(n: int) -> int | None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


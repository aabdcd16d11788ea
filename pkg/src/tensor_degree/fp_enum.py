"""Finitely presented groups and Todd-Coxeter enumeration over the trivial subgroup.

Words are sequences of signed generator indices: ``+i`` is generator ``i``
(1-based) and ``-i`` its inverse.  Internally a letter becomes a coset-table
column: ``2*(i-1)`` for ``+i`` and ``2*(i-1) + 1`` for ``-i``, so the inverse
column of ``c`` is ``c ^ 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import CosetLimitExceeded, NotNormal, ParseError
from .group_core import FiniteGroup, Subgroup, build_group, is_normal, subgroup_closure

DEFAULT_MAX_COSETS = 50_000
MAX_GENERATORS = 4096

Word = tuple[int, ...]


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for s in word:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """Generators ``1..ngens`` and relators, each a word equal to the identity.

    Relators are freely reduced, deduplicated and sorted by length and then
    lexicographically on construction, so two presentations listing the same
    relators in different orders are identical.
    """

    ngens: int
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if self.ngens < 0:
            raise ValueError("ngens must be non-negative")
        if self.ngens > MAX_GENERATORS:
            raise ValueError(f"{self.ngens} generators exceed the cap of {MAX_GENERATORS}")
        rels = set()
        for r in self.relators:
            for s in r:
                if not (isinstance(s, (int, np.integer)) and 1 <= abs(s) <= self.ngens):
                    raise ValueError(f"bad letter {s!r} in relator {tuple(r)}")
            w = free_reduce(int(s) for s in r)
            if w:
                rels.add(w)
        object.__setattr__(self, "relators", tuple(sorted(rels, key=lambda w: (len(w), w))))

    def to_text(self) -> str:
        lines = [f"gens {self.ngens}"]
        lines += [",".join(str(s) for s in r) for r in self.relators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, path: str | None = None) -> "Presentation":
        ngens = None
        rels = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if ngens is None:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "gens" or not parts[1].isdigit():
                    raise ParseError(lineno, "first line must be 'gens <k>'", path)
                ngens = int(parts[1])
                continue
            try:
                word = [int(tok) for tok in line.split(",")]
            except ValueError:
                raise ParseError(lineno, "relator must be comma-separated integers", path) from None
            if any(not 1 <= abs(s) <= ngens for s in word):
                raise ParseError(lineno, f"letters must have absolute value in 1..{ngens}", path)
            rels.append(tuple(word))
        if ngens is None:
            raise ParseError(1, "missing 'gens <k>' header", path)
        return cls(ngens, tuple(rels))

    @classmethod
    def read(cls, path: str | Path) -> "Presentation":
        return cls.from_text(Path(path).read_text(), str(path))


@dataclass(frozen=True)
class EnumeratedGroup:
    group: FiniteGroup
    genmap: tuple[int, ...]

    def generator_image(self, letter: int) -> int:
        g = self.genmap[abs(letter) - 1]
        return g if letter > 0 else self.group.inv[g]


def _columns(word: Word) -> list[int]:
    return [2 * (s - 1) if s > 0 else 2 * (-s - 1) + 1 for s in word]


def coset_table(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> list[list[int]]:
    """Complete coset table of the trivial subgroup (HLT strategy).

    Every relator is traced from every live coset in turn, defining new
    cosets to close the cycle; coincidences are processed immediately with
    union-find.  Returns the compacted table; row 0 is the subgroup coset.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    ncols = 2 * pres.ngens
    rels = [_columns(r) for r in pres.relators]
    table: list[list[int]] = [[-1] * ncols]
    parent: list[int] = [0]
    live = 1

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def define(c: int, x: int) -> None:
        nonlocal live
        if live >= max_cosets:
            raise CosetLimitExceeded(max_cosets)
        n = len(table)
        table.append([-1] * ncols)
        parent.append(n)
        table[c][x] = n
        table[n][x ^ 1] = c
        live += 1

    def merge(a: int, b: int, queue: list[int]) -> None:
        nonlocal live
        a, b = find(a), find(b)
        if a != b:
            if a > b:
                a, b = b, a
            parent[b] = a
            queue.append(b)
            live -= 1

    def coincidence(a: int, b: int) -> None:
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = find(g), find(d)
                if table[mu][x] >= 0:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(a: int, w: list[int]) -> None:
        f, b = a, a
        i, j = 0, len(w) - 1
        while True:
            while i <= j:
                nxt = table[f][w[i]]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                prv = table[b][w[j] ^ 1]
                if prv < 0:
                    break
                b = prv
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            define(f, w[i])

    a = 0
    while a < len(table):
        if parent[a] == a:
            for w in rels:
                scan_and_fill(a, w)
                if parent[a] != a:
                    break
            if parent[a] == a:
                row = table[a]
                for x in range(ncols):
                    if row[x] < 0:
                        define(a, x)
        a += 1

    alive = [c for c in range(len(table)) if parent[c] == c]
    renum = {c: i for i, c in enumerate(alive)}
    return [[renum[find(d)] for d in table[c]] for c in alive]


def todd_coxeter(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS,
                 label: str = "") -> EnumeratedGroup:
    """Enumerate ``pres`` and return its regular representation as a group table."""
    ct = np.asarray(coset_table(pres, max_cosets), dtype=np.int64)
    n = ct.shape[0]
    # spanning tree: element j is the word (word of tree_parent[j]) . tree_col[j]
    tree_parent = np.full(n, -1)
    tree_col = np.full(n, -1)
    order = [0]
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for x in range(ct.shape[1]):
            d = int(ct[c, x])
            if not seen[d]:
                seen[d] = True
                tree_parent[d], tree_col[d] = c, x
                order.append(d)
                queue.append(d)
    mult = np.empty((n, n), dtype=np.int64)
    mult[:, 0] = np.arange(n)
    for j in order[1:]:
        mult[:, j] = ct[mult[:, tree_parent[j]], tree_col[j]]
    group = build_group(mult, label=label)
    genmap = tuple(int(ct[0, 2 * g]) for g in range(pres.ngens))
    return EnumeratedGroup(group, genmap)


def evaluate_word(eg: EnumeratedGroup, word: Sequence[int]) -> int:
    rows = eg.group.rows
    x = 0
    for s in word:
        x = rows[x][eg.generator_image(s)]
    return x


def quotient_group(G: FiniteGroup, N: Subgroup, label: str = "") -> tuple[FiniteGroup, np.ndarray]:
    """``G/N`` with cosets numbered by their minimum element, plus the projection."""
    if not is_normal(G, N):
        raise NotNormal("quotient by a subgroup that is not normal")
    projection = np.full(G.order, -1, dtype=np.int64)
    reps: list[int] = []
    rows = G.rows
    for g in range(G.order):
        if projection[g] < 0:
            idx = len(reps)
            reps.append(g)
            for x in N.elements:
                projection[rows[g][x]] = idx
    r = np.asarray(reps)
    Q = projection[G.table[np.ix_(r, r)]]
    return build_group(Q, label=label), projection


def kernel(G: FiniteGroup, image_map: Sequence[int]) -> Subgroup:
    return Subgroup(G, tuple(int(g) for g in np.flatnonzero(np.asarray(image_map) == 0)))


def generated_by_images(eg: EnumeratedGroup) -> bool:
    return subgroup_closure(eg.group, eg.genmap).order == eg.group.order

"""Named small groups with fixed element orderings, and the group file format.

Element orderings (identity is always 0):

* ``C<n>``: index ``i`` is ``a^i``.
* ``D<n>`` (order ``2n``): index ``i + n*e`` is ``r^i s^e``.
* ``Dic<n>`` (order ``4n``): index ``i + 2n*e`` is ``a^i x^e`` with
  ``a^(2n) = 1``, ``x^2 = a^n`` and ``x^-1 a x = a^-1``.  ``Q8`` is ``Dic2``
  and ``Q16`` is ``Dic4``.
* ``S<n>``, ``A<n>``: permutations of ``0..n-1`` as image tuples in
  lexicographic order; ``p*q`` applies ``p`` first, then ``q``.
* ``AxB``: pairs ``(a, b)`` in lexicographic order, index ``a*|B| + b``.
"""
from __future__ import annotations

import itertools
import re
from pathlib import Path

import numpy as np

from .errors import ParseError, UnknownGroup
from .group_core import FiniteGroup, build_group

#: orders above this are refused by the catalog
MAX_CATALOG_ORDER = 4096

_BASE = re.compile(r"^(C|D|Dic|Q|S|A)(\d+)$")


def cyclic_table(n: int) -> np.ndarray:
    ar = np.arange(n)
    return (ar[:, None] + ar[None, :]) % n


def dihedral_table(n: int) -> np.ndarray:
    T = np.empty((2 * n, 2 * n), dtype=np.int64)
    for a in range(2 * n):
        i, e = a % n, a // n
        for b in range(2 * n):
            j, f = b % n, b // n
            T[a, b] = (i + (j if e == 0 else -j)) % n + n * ((e + f) % 2)
    return T


def dicyclic_table(n: int) -> np.ndarray:
    m = 2 * n
    T = np.empty((2 * m, 2 * m), dtype=np.int64)
    for a in range(2 * m):
        i, e = a % m, a // m
        for b in range(2 * m):
            j, f = b % m, b // m
            if e == 0:
                T[a, b] = (i + j) % m + m * f
            elif f == 0:
                T[a, b] = (i - j) % m + m
            else:
                T[a, b] = (i - j + n) % m
    return T


def permutation_table(perms: list[tuple[int, ...]]) -> np.ndarray:
    index = {p: i for i, p in enumerate(perms)}
    T = np.empty((len(perms), len(perms)), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            T[i, j] = index[tuple(q[x] for x in p)]
    return T


def _parity(p: tuple[int, ...]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inversions % 2


def direct_product_table(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    na, nb = A.shape[0], B.shape[0]
    # (a1,b1)(a2,b2) = (a1a2, b1b2) at index a*nb + b
    return (A[:, None, :, None] * nb + B[None, :, None, :]).reshape(na * nb, na * nb)


def _base_table(expr: str) -> np.ndarray:
    m = _BASE.match(expr)
    if not m:
        raise UnknownGroup(expr)
    kind, n = m.group(1), int(m.group(2))
    if kind == "C" and n >= 1:
        return cyclic_table(n)
    if kind == "D" and n >= 1:
        return dihedral_table(n)
    if kind == "Dic" and n >= 1:
        return dicyclic_table(n)
    if kind == "Q" and n >= 4 and n % 4 == 0:
        return dicyclic_table(n // 4)
    if kind in ("S", "A") and 1 <= n <= 6:
        perms = list(itertools.permutations(range(n)))
        if kind == "A":
            perms = [p for p in perms if _parity(p) == 0]
        return permutation_table(perms)
    raise UnknownGroup(expr)


def _predicted_order(factor: str) -> int:
    m = _BASE.match(factor)
    if not m:
        raise UnknownGroup(factor)
    kind, n = m.group(1), int(m.group(2))
    if kind in ("S", "A"):
        f = 1
        for i in range(2, n + 1):
            f *= i
        return f // 2 if kind == "A" and n > 1 else f
    return {"C": n, "D": 2 * n, "Dic": 4 * n, "Q": n}[kind]


def catalog_group(expr: str) -> FiniteGroup:
    """Build a named group such as ``"S3"``, ``"D4"``, ``"Q8"`` or ``"C2xC2xC2"``."""
    expr = expr.strip()
    factors = expr.split("x")
    if not expr or any(not f for f in factors):
        raise UnknownGroup(expr)
    total = 1
    for f in factors:
        total *= _predicted_order(f)
    if total > MAX_CATALOG_ORDER:
        raise UnknownGroup(f"{expr} (order {total} exceeds {MAX_CATALOG_ORDER})")
    T = _base_table(factors[0])
    for f in factors[1:]:
        T = direct_product_table(T, _base_table(f))
    return build_group(T, label=expr)


def cyclic_factors(expr: str) -> tuple[int, ...] | None:
    """Cyclic orders of a catalog product of cyclic groups, else ``None``.

    Element ``i`` of such a group has coordinates given by the mixed-radix
    digits of ``i`` (first factor most significant).
    """
    factors = expr.strip().split("x")
    out = []
    for f in factors:
        m = re.fullmatch(r"C(\d+)", f)
        if not m:
            return None
        out.append(int(m.group(1)))
    return tuple(out)


def read_group_file(path: str | Path, label: str | None = None) -> FiniteGroup:
    """Parse the text table format: ``n`` then ``n`` rows of ``n`` indices.

    The identity must already be element 0.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(0, f"cannot read file: {exc.strerror}", str(path)) from exc
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise ParseError(1, "empty file", str(path))
    lineno, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(lineno, f"expected the group order, got {first!r}", str(path)) from None
    if n < 1:
        raise ParseError(lineno, "group order must be positive", str(path))
    if len(lines) - 1 != n:
        raise ParseError(lineno, f"expected {n} table rows, found {len(lines) - 1}", str(path))
    rows = []
    for lineno, ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ParseError(lineno, "non-integer entry", str(path)) from None
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, found {len(row)}", str(path))
        if any(not 0 <= v < n for v in row):
            raise ParseError(lineno, f"entries must lie in 0..{n - 1}", str(path))
        rows.append(row)
    T = np.asarray(rows, dtype=np.int64)
    ar = np.arange(n)
    if not (np.array_equal(T[0], ar) and np.array_equal(T[:, 0], ar)):
        raise ParseError(lines[1][0], "element 0 is not the identity", str(path))
    return build_group(T, label=label or path.stem)

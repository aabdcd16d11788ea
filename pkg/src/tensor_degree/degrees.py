"""Relative commutativity, tensor and exterior degrees as exact fractions.

Every degree is computed twice, once by counting pairs in ``H x K`` and once
as a sum over the ``K``-classes of ``H``, and the two must agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .errors import ElementOutOfRange, InternalCheckFailed, NotAGroup
from .group_core import Subgroup, centralizer, conjugacy_classes, product_set
from .tensor import ExteriorData, Mode, vanishes

Kind = Literal["comm", "tensor", "exterior"]


def star_centralizer(ed: ExteriorData, X: Iterable[int], mode: Mode = "tensor") -> Subgroup:
    """``{k in K : x (x) k = 1 for all x in X}``, or the same with ``^``."""
    X = list(X)
    for x in X:
        if x not in ed.H:
            raise ElementOutOfRange(f"{x} is not an element of H")
    S = Subgroup(ed.G, tuple(k for k in ed.K.elements if all(vanishes(ed, x, k, mode) for x in X)))
    try:
        S.check()
    except NotAGroup as exc:
        raise InternalCheckFailed(f"{mode} centralizer is a subgroup", str(exc)) from None
    return S


def _vanishing(ed: ExteriorData, h: int, k: int, kind: Kind) -> bool:
    if kind == "comm":
        rows = ed.G.rows
        return rows[h][k] == rows[k][h]
    return vanishes(ed, h, k, kind)


def pair_count_degree(ed: ExteriorData, kind: Kind) -> Fraction:
    H, K = ed.H.elements, ed.K.elements
    hits = sum(1 for h in H for k in K if _vanishing(ed, h, k, kind))
    return Fraction(hits, len(H) * len(K))


def class_sum_degree(ed: ExteriorData, kind: Kind) -> Fraction:
    """Sum of ``|C*_K(h_i)| / |C_K(h_i)|`` over class representatives, over ``|H|``."""
    parts = conjugacy_classes(ed.G, ed.H, ed.K)
    if kind == "comm":
        return Fraction(parts.count, ed.H.order)
    total = Fraction(0)
    for h in parts.reps:
        total += Fraction(star_centralizer(ed, [h], kind).order,
                          centralizer(ed.G, ed.K, [h]).order)
    return total / ed.H.order


def degree(ed: ExteriorData, kind: Kind) -> Fraction:
    direct = pair_count_degree(ed, kind)
    by_class = class_sum_degree(ed, kind)
    if direct != by_class:
        raise InternalCheckFailed(f"{kind} degree: pair count and class sum agree",
                                  f"{direct} != {by_class}")
    return direct


@dataclass(frozen=True)
class DegreeBundle:
    d_comm: Fraction
    d_tensor: Fraction
    d_exterior: Fraction
    J_order: int
    M_order: int
    cent_order: int
    cent_tensor_order: int
    cent_exterior_order: int
    k_classes: int
    # the same centralizers with the roles of H and K exchanged (subsets of H)
    cent_in_h_order: int = 0
    cent_tensor_in_h_order: int = 0


def degree_bundle(ed: ExteriorData) -> DegreeBundle:
    G, H, K = ed.G, ed.H, ed.K
    C = centralizer(G, K, H.elements)
    Ct = star_centralizer(ed, H.elements, "tensor")
    Cw = star_centralizer(ed, H.elements, "exterior")
    if not (Ct <= Cw <= C):
        raise InternalCheckFailed("C_tensor <= C_wedge <= C_K(H)")
    return DegreeBundle(
        d_comm=degree(ed, "comm"),
        d_tensor=degree(ed, "tensor"),
        d_exterior=degree(ed, "exterior"),
        J_order=ed.J.order,
        M_order=ed.M.order,
        cent_order=C.order,
        cent_tensor_order=Ct.order,
        cent_exterior_order=Cw.order,
        k_classes=conjugacy_classes(G, H, K).count,
        cent_in_h_order=centralizer(G, H, K.elements).order,
        cent_tensor_in_h_order=sum(
            1 for h in H.elements if all(vanishes(ed, h, k, "tensor") for k in K.elements)),
    )


@dataclass(frozen=True)
class EmbeddingRow:
    rep: int
    index: int
    verdict: str  # "pass", "fail" or "not asserted"


@dataclass(frozen=True)
class LemmaReport:
    rows: tuple[EmbeddingRow, ...]
    J_order: int
    asserted: bool

    @property
    def passed(self) -> bool:
        return all(r.verdict != "fail" for r in self.rows)

    def summary(self) -> str:
        if not self.asserted:
            return f"not asserted ({len(self.rows)} reps)"
        worst = max((r.index for r in self.rows), default=1)
        status = "pass" if self.passed else "fail"
        return f"{status} max index {worst} | |J|={self.J_order}"


def lemma_embedding_report(ed: ExteriorData) -> LemmaReport:
    """Index of the tensor centralizer in the centralizer, per class representative.

    The bound (index divides and is at most ``|J|``) is only asserted when
    ``H K = G``; otherwise the rows carry ``"not asserted"``.
    """
    G, H, K = ed.G, ed.H, ed.K
    asserted = len(product_set(G, H, K)) == G.order
    j = ed.J.order
    rows = []
    for h in conjugacy_classes(G, H, K).reps:
        c = centralizer(G, K, [h]).order
        ct = star_centralizer(ed, [h], "tensor").order
        index = c // ct
        if not asserted:
            verdict = "not asserted"
        else:
            verdict = "pass" if (c % ct == 0 and j % index == 0 and index <= j) else "fail"
        rows.append(EmbeddingRow(h, index, verdict))
    return LemmaReport(tuple(rows), j, asserted)

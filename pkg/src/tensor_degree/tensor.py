"""Nonabelian tensor and exterior products of normal subgroups.

``H (x) K`` is enumerated from the full-symbol presentation: one generator
``t[h,k]`` per pair, subject to

    t[h1 h2, k]  = t[h1 h2 h1^-1, h1 k h1^-1] . t[h1, k]
    t[h, k1 k2]  = t[h, k1] . t[k1 h k1^-1, k1 k2 k1^-1]

where ``G`` acts on ``H`` and ``K`` by left conjugation.  With this
convention ``t[h,k] -> h k h^-1 k^-1`` is a homomorphism onto ``[H, K]``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .errors import ElementOutOfRange, IncompatibleActions, InternalCheckFailed, NotNormal
from .fp_enum import (DEFAULT_MAX_COSETS, EnumeratedGroup, Presentation, kernel,
                      quotient_group, todd_coxeter)
from .group_core import (FiniteGroup, Subgroup, is_normal, relative_commutator,
                         subgroup_closure)

Mode = Literal["tensor", "exterior"]
Action = Callable[[int, int], int]


def check_compatibility(G: FiniteGroup, H: Subgroup, K: Subgroup,
                        act_on_h: Action | None = None,
                        act_on_k: Action | None = None) -> bool:
    """Test the compatibility identities for mutual actions of ``H`` and ``K``.

    ``act_on_h(k, h)`` is the action of ``k`` on ``h`` and ``act_on_k(h, k)``
    the action of ``h`` on ``k``; both default to left conjugation in ``G``.
    Each group acts on itself by conjugation.  The identities checked are

        act_on_h(act_on_k(h1, k1), h2) == ^h1( act_on_h(k1, ^(h1^-1) h2) )
        act_on_k(act_on_h(k1, h1), k2) == ^k1( act_on_k(h1, ^(k1^-1) k2) )
    """
    conj = G.lconj
    inv = G.inv
    act_on_h = act_on_h or conj
    act_on_k = act_on_k or conj
    for h1 in H.elements:
        for k1 in K.elements:
            kh = act_on_k(h1, k1)
            for h2 in H.elements:
                if act_on_h(kh, h2) != conj(h1, act_on_h(k1, conj(inv[h1], h2))):
                    return False
    for k1 in K.elements:
        for h1 in H.elements:
            hk = act_on_h(k1, h1)
            for k2 in K.elements:
                if act_on_k(hk, k2) != conj(k1, act_on_k(h1, conj(inv[k1], k2))):
                    return False
    return True


class SymbolMap:
    """Numbering of the symbols ``t[h,k]`` as generators ``1..|H||K|``."""

    def __init__(self, H: Subgroup, K: Subgroup):
        self.H, self.K = H, K
        self._hpos = {h: i for i, h in enumerate(H.elements)}
        self._kpos = {k: i for i, k in enumerate(K.elements)}
        self.nk = len(K.elements)

    def __len__(self) -> int:
        return len(self._hpos) * self.nk

    def __call__(self, h: int, k: int) -> int:
        try:
            return self._hpos[h] * self.nk + self._kpos[k] + 1
        except KeyError:
            raise ElementOutOfRange(f"({h}, {k}) is not in H x K") from None

    def pair(self, gen: int) -> tuple[int, int]:
        i, j = divmod(gen - 1, self.nk)
        return self.H.elements[i], self.K.elements[j]


def tensor_presentation(G: FiniteGroup, H: Subgroup, K: Subgroup,
                        identity_relators: bool = True) -> tuple[Presentation, SymbolMap]:
    for S, name in ((H, "H"), (K, "K")):
        if not is_normal(G, S):
            raise NotNormal(f"{name} is not normal in {G.label or 'G'}")
    if not check_compatibility(G, H, K):
        raise IncompatibleActions("conjugation actions of H and K are not compatible")
    sym = SymbolMap(H, K)
    rows, conj = G.rows, G.lconj
    rels = []
    for h1 in H.elements:
        for h2 in H.elements:
            h12 = rows[h1][h2]
            ch2 = conj(h1, h2)
            for k in K.elements:
                rels.append((sym(ch2, conj(h1, k)), sym(h1, k), -sym(h12, k)))
    for k1 in K.elements:
        for k2 in K.elements:
            k12 = rows[k1][k2]
            ck2 = conj(k1, k2)
            for h in H.elements:
                rels.append((sym(h, k1), sym(conj(k1, h), ck2), -sym(h, k12)))
    if identity_relators:
        rels += [(sym(0, k),) for k in K.elements]
        rels += [(sym(h, 0),) for h in H.elements]
    return Presentation(len(sym), tuple(rels)), sym


def _check(cond: bool, name: str, detail: str = "") -> None:
    if not cond:
        raise InternalCheckFailed(name, detail)


def _is_hom(src: FiniteGroup, dst: FiniteGroup, f: np.ndarray) -> bool:
    return bool(np.array_equal(f[src.table], dst.table[f[:, None], f[None, :]]))


@dataclass(frozen=True, eq=False)
class TensorData:
    G: FiniteGroup
    H: Subgroup
    K: Subgroup
    presentation: Presentation
    symbol_of: SymbolMap
    eg: EnumeratedGroup
    kappa: np.ndarray
    J: Subgroup
    commutator_HK: Subgroup

    @property
    def group(self) -> FiniteGroup:
        return self.eg.group

    def element(self, h: int, k: int) -> int:
        """The element of ``H (x) K`` named by ``t[h,k]``."""
        return self.eg.genmap[self.symbol_of(h, k) - 1]


def tensor_square(G: FiniteGroup, H: Subgroup, K: Subgroup,
                  max_cosets: int = DEFAULT_MAX_COSETS) -> TensorData:
    """Enumerate ``H (x) K`` and extract ``kappa`` and its kernel ``J(G,H,K)``."""
    pres, sym = tensor_presentation(G, H, K)
    eg = todd_coxeter(pres, max_cosets, label=f"{H.order}x{K.order} tensor in {G.label}")
    T = eg.group
    images = [G.commutator(*sym.pair(g)) for g in range(1, len(sym) + 1)]

    # kappa along a breadth-first spanning tree of the Cayley graph
    kappa = np.full(T.order, -1, dtype=np.int64)
    kappa[0] = 0
    gens = sorted({(eg.genmap[i], images[i]) for i in range(len(images)) if eg.genmap[i] != 0})
    queue = deque([0])
    Trows, Grows = T.rows, G.rows
    while queue:
        x = queue.popleft()
        for g, img in gens:
            y = Trows[x][g]
            if kappa[y] < 0:
                kappa[y] = Grows[kappa[x]][img]
                queue.append(y)
    _check(bool((kappa >= 0).all()), "generator images span the tensor group")
    kappa.setflags(write=False)

    _check(all(kappa[eg.genmap[i]] == images[i] for i in range(len(images))),
           "kappa(t[h,k]) = [h,k]")
    _check(_is_hom(T, G, kappa), "kappa is a homomorphism")
    comm = relative_commutator(G, H, K)
    _check(set(kappa.tolist()) == set(comm.elements), "kappa maps onto [H,K]")
    J = kernel(T, kappa)
    Jidx = np.asarray(J.elements)
    _check(bool(np.array_equal(T.table[Jidx, :], T.table[:, Jidx].T)), "J is central")
    _check(T.order == J.order * comm.order, "|H (x) K| = |J| |[H,K]|")
    return TensorData(G, H, K, pres, sym, eg, kappa, J, comm)


@dataclass(frozen=True, eq=False)
class ExteriorData:
    base: TensorData
    nabla: Subgroup
    wedge_group: FiniteGroup
    projection: np.ndarray
    kappa_prime: np.ndarray
    M: Subgroup

    @property
    def G(self) -> FiniteGroup:
        return self.base.G

    @property
    def H(self) -> Subgroup:
        return self.base.H

    @property
    def K(self) -> Subgroup:
        return self.base.K

    @property
    def J(self) -> Subgroup:
        return self.base.J


def exterior_data(td: TensorData) -> ExteriorData:
    """Quotient ``H (x) K`` by the diagonal symbols of ``H & K``."""
    T = td.group
    both = td.H.intersect(td.K)
    nabla = subgroup_closure(T, (td.element(x, x) for x in both.elements))
    _check(nabla <= td.J, "nabla is contained in J")
    wedge, projection = quotient_group(T, nabla, label=f"{td.H.order}^{td.K.order} wedge in {td.G.label}")
    kp = np.full(wedge.order, -1, dtype=np.int64)
    kp[projection] = td.kappa
    _check(bool(np.array_equal(kp[projection], td.kappa)), "kappa' is well defined")
    _check(_is_hom(wedge, td.G, kp), "kappa' is a homomorphism")
    _check(set(kp.tolist()) == set(td.commutator_HK.elements), "kappa' maps onto [H,K]")
    M = kernel(wedge, kp)
    _check(wedge.order == M.order * td.commutator_HK.order, "|H ^ K| = |M| |[H,K]|")
    projection.setflags(write=False)
    kp.setflags(write=False)
    return ExteriorData(td, nabla, wedge, projection, kp, M)


def vanishes(ed: ExteriorData, h: int, k: int, mode: Mode = "tensor") -> bool:
    """Whether ``h (x) k`` (or ``h ^ k``) is the identity."""
    x = ed.base.element(h, k)
    if mode == "tensor":
        return x == 0
    if mode == "exterior":
        return int(ed.projection[x]) == 0
    raise ValueError(f"unknown mode {mode!r}")


def build(G: FiniteGroup, H: Subgroup, K: Subgroup,
          max_cosets: int = DEFAULT_MAX_COSETS) -> ExteriorData:
    return exterior_data(tensor_square(G, H, K, max_cosets))

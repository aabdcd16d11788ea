"""Census over a catalog of small groups: every normal pair, every inequality.

Each case runs the full pipeline (tensor product, exterior product, degrees,
embedding report) and records a verdict for each inequality together with the
exact fractions it compared, so every row can be re-checked by hand.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Literal, Sequence

from .catalog import catalog_group, read_group_file
from .degrees import DegreeBundle, LemmaReport, degree_bundle, lemma_embedding_report
from .errors import CosetLimitExceeded
from .fp_enum import DEFAULT_MAX_COSETS
from .group_core import (FiniteGroup, Subgroup, conjugacy_classes, is_normal, product_set,
                         smallest_prime_divisor, subgroup_closure)
from .tensor import build

log = logging.getLogger(__name__)

Policy = Literal["diagonal", "hk", "all"]

DEFAULT_CATALOG = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "C2xC2", "C2xC2xC2", "C4xC2", "C3xC3",
    "S3", "D4", "D5", "D6", "Q8", "A4", "Dic3",
)

CSV_HEADER = (
    "group", "|G|", "H", "K", "hk=G", "|J|", "|M|", "k_K(H)", "|C_K(H)|", "|Ctensor|",
    "|Cwedge|", "d", "d_tensor", "d_wedge", "thm1a", "thm1b", "thm2", "corollary", "lemma",
    "status",
)


@dataclass(frozen=True)
class CensusConfig:
    groups: tuple[str, ...] = DEFAULT_CATALOG
    group_files: tuple[str, ...] = ()
    max_order: int = 32
    pairs: Policy = "hk"
    max_cosets: int = DEFAULT_MAX_COSETS
    output: str | None = None
    format: Literal["csv", "json"] = "csv"
    jobs: int = 1


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, ordered by (order, elements).

    Each is a union of conjugacy classes, so it is the join of the normal
    closures of the classes it contains; joins are taken until nothing new
    appears.
    """
    classes = conjugacy_classes(G, G.whole, G.whole).classes
    found = {subgroup_closure(G, c).elements for c in classes}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(found):
                j = subgroup_closure(G, set(a) | set(b)).elements
                if j not in found and j not in new:
                    new.add(j)
        found |= new
        frontier = new
    return [Subgroup(G, e) for e in sorted(found, key=lambda e: (len(e), e))]


def enumerate_normal_pairs(G: FiniteGroup, policy: Policy = "hk") -> list[tuple[Subgroup, Subgroup]]:
    if policy == "diagonal":
        return [(G.whole, G.whole)]
    normals = normal_subgroups(G)
    pairs = [(H, K) for H in normals for K in normals]
    if policy == "hk":
        return [(H, K) for H, K in pairs if len(product_set(G, H, K)) == G.order]
    if policy == "all":
        return pairs
    raise ValueError(f"unknown pair policy {policy!r}")


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one comparison.

    ``values`` are compared left to right with ``relations`` between them.
    Unasserted verdicts still record whether the comparison held.
    """

    values: tuple[Fraction, ...] = ()
    relations: tuple[str, ...] = ()
    asserted: bool = True
    skipped: bool = False

    @property
    def holds(self) -> bool:
        for (a, b), rel in zip(zip(self.values, self.values[1:]), self.relations):
            if rel == "<=" and not a <= b:
                return False
            if rel == "=" and a != b:
                return False
        return True

    @property
    def equality(self) -> bool:
        return len(set(self.values)) == 1

    @property
    def status(self) -> str:
        if self.skipped:
            return "skipped"
        if self.asserted:
            return "pass" if self.holds else "FAIL"
        return "unasserted:holds" if self.holds else "unasserted:violated"

    @property
    def failed(self) -> bool:
        return self.asserted and not self.skipped and not self.holds

    def expression(self) -> str:
        parts = [_fmt(self.values[0])] if self.values else []
        for rel, v in zip(self.relations, self.values[1:]):
            parts += [rel, _fmt(v)]
        return "".join(parts)

    def __str__(self) -> str:
        if self.skipped:
            return "skipped"
        return f"{self.status} {self.expression()}"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "relations": list(self.relations),
            "values": [{"num": v.numerator, "den": v.denominator} for v in self.values],
        }


def check_degree_bounds(b: DegreeBundle, h_order: int, p: int | None,
                   asserted: bool) -> tuple[Verdict, Verdict]:
    """Lower bound (a) and upper bound (b) relating the tensor and commutativity degrees."""
    j = b.J_order
    lhs_a = b.d_comm / j + Fraction(b.cent_tensor_order, h_order) * (1 - Fraction(1, j))
    a = Verdict((lhs_a, b.d_tensor), ("<=",), asserted)
    if p is None:
        return a, Verdict(asserted=asserted, skipped=True)
    rhs_b = b.d_comm - (1 - Fraction(1, p)) * Fraction(b.cent_order - b.cent_tensor_order, h_order)
    return a, Verdict((b.d_tensor, rhs_b), ("<=",), asserted)


def check_degree_bounds_swapped(b: DegreeBundle, h_order: int, p: int | None) -> tuple[Verdict, Verdict]:
    """The same bounds with ``C_H(K)`` and the tensor centralizer of ``K`` in ``H``.

    These are the counts the class-sum argument actually uses; recorded
    for every case but never asserted.
    """
    j = b.J_order
    lhs_a = b.d_comm / j + Fraction(b.cent_tensor_in_h_order, h_order) * (1 - Fraction(1, j))
    a = Verdict((lhs_a, b.d_tensor), ("<=",), asserted=False)
    if p is None:
        return a, Verdict(asserted=False, skipped=True)
    gap = Fraction(b.cent_in_h_order - b.cent_tensor_in_h_order, h_order)
    return a, Verdict((b.d_tensor, b.d_comm - (1 - Fraction(1, p)) * gap), ("<=",), asserted=False)


def check_comparison(b: DegreeBundle) -> Verdict:
    """``d_tensor <= d_wedge <= d``, with equality throughout when ``J`` is trivial."""
    rel = ("=", "=") if b.J_order == 1 else ("<=", "<=")
    return Verdict((b.d_tensor, b.d_exterior, b.d_comm), rel)


def check_corollary(b: DegreeBundle, hk_covers_g: bool) -> Verdict:
    lower = b.d_comm / b.J_order
    if b.J_order == 1:
        return Verdict((lower, b.d_tensor, b.d_comm), ("=", "="), hk_covers_g)
    return Verdict((lower, b.d_tensor, b.d_comm), ("<=", "<="), hk_covers_g)


@dataclass(frozen=True)
class CaseReport:
    group: str
    group_order: int
    H_gens: tuple[int, ...]
    K_gens: tuple[int, ...]
    hk_covers_g: bool
    p: int | None
    bundle: DegreeBundle | None = None
    thm1a: Verdict | None = None
    thm1b: Verdict | None = None
    thm2: Verdict | None = None
    corollary: Verdict | None = None
    lemma: LemmaReport | None = None
    thm1a_swapped: Verdict | None = None
    thm1b_swapped: Verdict | None = None
    skipped: str | None = None

    @property
    def verdicts(self) -> list[Verdict]:
        return [v for v in (self.thm1a, self.thm1b, self.thm2, self.corollary) if v is not None]

    @property
    def failed(self) -> bool:
        return any(v.failed for v in self.verdicts) or (self.lemma is not None and not self.lemma.passed)

    @property
    def status(self) -> str:
        if self.skipped:
            return f"skipped: {self.skipped}"
        return "FAIL" if self.failed else "ok"

    @property
    def trivial_J(self) -> bool:
        return self.bundle is not None and self.bundle.J_order == 1


def _gens(S: Subgroup) -> str:
    return "<" + ",".join(str(g) for g in S.generators()) + ">"


def analyze_case(G: FiniteGroup, H: Subgroup, K: Subgroup,
                 max_cosets: int = DEFAULT_MAX_COSETS) -> CaseReport:
    if not (is_normal(G, H) and is_normal(G, K)):
        raise ValueError("H and K must be normal in G")
    hk = len(product_set(G, H, K)) == G.order
    p = smallest_prime_divisor(G.order)
    head = dict(group=G.label, group_order=G.order, H_gens=H.generators(),
                K_gens=K.generators(), hk_covers_g=hk, p=p)
    try:
        ed = build(G, H, K, max_cosets)
    except CosetLimitExceeded:
        log.warning("%s: skipping pair %s, %s (coset limit %d)", G.label, _gens(H), _gens(K), max_cosets)
        return CaseReport(**head, skipped="size")
    b = degree_bundle(ed)
    a1, b1 = check_degree_bounds(b, H.order, p, asserted=hk)
    a2, b2 = check_degree_bounds_swapped(b, H.order, p)
    return CaseReport(**head, bundle=b, thm1a=a1, thm1b=b1, thm2=check_comparison(b),
                      corollary=check_corollary(b, hk), lemma=lemma_embedding_report(ed),
                      thm1a_swapped=a2, thm1b_swapped=b2)


def _run_one(task) -> CaseReport:
    G, H, K, max_cosets = task
    return analyze_case(G, H, K, max_cosets)


def load_groups(config: CensusConfig) -> list[FiniteGroup]:
    groups = [catalog_group(expr) for expr in config.groups]
    groups += [read_group_file(path) for path in config.group_files]
    kept = [G for G in groups if G.order <= config.max_order]
    for G in groups:
        if G.order > config.max_order:
            log.info("%s: order %d above --max-order %d, not run", G.label, G.order, config.max_order)
    return kept


def census_reports(config: CensusConfig) -> list[CaseReport]:
    tasks = []
    for G in load_groups(config):
        for H, K in enumerate_normal_pairs(G, config.pairs):
            tasks.append((G, H, K, config.max_cosets))
    if config.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            return list(pool.map(_run_one, tasks, chunksize=1))
    return [_run_one(t) for t in tasks]


def _row(r: CaseReport) -> list[str]:
    head = [r.group, str(r.group_order), "<" + ",".join(map(str, r.H_gens)) + ">",
            "<" + ",".join(map(str, r.K_gens)) + ">", "yes" if r.hk_covers_g else "no"]
    b = r.bundle
    if b is None:
        return head + [""] * 14 + [r.status]
    return head + [
        str(b.J_order), str(b.M_order), str(b.k_classes), str(b.cent_order),
        str(b.cent_tensor_order), str(b.cent_exterior_order),
        _fmt(b.d_comm), _fmt(b.d_tensor), _fmt(b.d_exterior),
        str(r.thm1a), str(r.thm1b), str(r.thm2), str(r.corollary), r.lemma.summary(),
        r.status,
    ]


def _json_case(r: CaseReport) -> dict:
    out = {
        "group": r.group, "order": r.group_order, "H": list(r.H_gens), "K": list(r.K_gens),
        "hk_covers_g": r.hk_covers_g, "p": r.p, "status": r.status,
    }
    b = r.bundle
    if b is not None:
        frac = lambda q: {"num": q.numerator, "den": q.denominator}  # noqa: E731
        out.update({
            "J_order": b.J_order, "M_order": b.M_order, "k_classes": b.k_classes,
            "cent_order": b.cent_order, "cent_tensor_order": b.cent_tensor_order,
            "cent_exterior_order": b.cent_exterior_order,
            "cent_in_h_order": b.cent_in_h_order,
            "cent_tensor_in_h_order": b.cent_tensor_in_h_order,
            "d": frac(b.d_comm), "d_tensor": frac(b.d_tensor), "d_wedge": frac(b.d_exterior),
            "thm1a": r.thm1a.to_json(), "thm1b": r.thm1b.to_json(), "thm2": r.thm2.to_json(),
            "corollary": r.corollary.to_json(),
            "thm1a_swapped": r.thm1a_swapped.to_json(),
            "thm1b_swapped": r.thm1b_swapped.to_json(),
            "lemma": {
                "asserted": r.lemma.asserted,
                "passed": r.lemma.passed,
                "rows": [{"rep": e.rep, "index": e.index, "verdict": e.verdict} for e in r.lemma.rows],
            },
        })
    return out


def summarize(reports: Sequence[CaseReport]) -> dict:
    done = [r for r in reports if r.bundle is not None]
    return {
        "rows": len(reports),
        "failed": sum(r.failed for r in reports),
        "skipped": len(reports) - len(done),
        "hk_rows": sum(r.hk_covers_g for r in done),
        "trivial_J_rows": sum(r.trivial_J for r in done),
        "unasserted_violations": sum(
            1 for r in done for v in r.verdicts if not v.asserted and not v.skipped and not v.holds),
        "swapped_thm1_violations": sum(
            1 for r in done for v in (r.thm1a_swapped, r.thm1b_swapped) if not v.skipped and not v.holds),
    }


def render(reports: Sequence[CaseReport], fmt: str) -> str:
    if fmt == "json":
        doc = {"cases": [_json_case(r) for r in reports], "summary": summarize(reports)}
        return json.dumps(doc, indent=1) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow(_row(r))
    return buf.getvalue()


def run_census(config: CensusConfig) -> int:
    """Run the sweep, write the report, return the exit status (1 on any failure)."""
    reports = census_reports(config)
    text = render(reports, config.format)
    if config.output in (None, "-"):
        sys.stdout.write(text)
    else:
        path = Path(config.output)
        try:
            path.write_text(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc
    s = summarize(reports)
    print(
        f"{s['rows']} cases, {s['failed']} failed, {s['skipped']} skipped (size), "
        f"{s['hk_rows']} with HK=G, J trivial in {s['trivial_J_rows']} "
        f"(equality d_tensor=d_wedge=d checked there), "
        f"{s['unasserted_violations']} unasserted violations, "
        f"{s['swapped_thm1_violations']} violations of the degree bounds with H and K centralizer roles swapped",
        file=sys.stderr,
    )
    return 1 if s["failed"] else 0

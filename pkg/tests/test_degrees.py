from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import group, square
from oracles import abelian_degrees, class_count
from tensor_degree.catalog import cyclic_factors
from tensor_degree.degrees import (class_sum_degree, degree, degree_bundle,
                                   lemma_embedding_report, pair_count_degree, star_centralizer)
from tensor_degree.errors import ElementOutOfRange
from tensor_degree.group_core import subgroup_closure
from tensor_degree.tensor import build

CASES = ["C1", "C2", "C4", "C2xC2", "C4xC2", "C3xC3", "S3", "D4", "Q8", "A4", "D5", "D6", "Dic3"]

# (group, d, d_tensor, d_wedge)
EXAMPLES = [
    ("C1", 1, 1, 1),
    ("C2", 1, Fraction(3, 4), 1),
    ("C2xC2", 1, Fraction(7, 16), Fraction(5, 8)),
    ("S3", Fraction(1, 2), Fraction(5, 12), Fraction(1, 2)),
    ("Q8", Fraction(5, 8), None, Fraction(5, 8)),
]


@pytest.mark.parametrize("name, d, dt, dw", EXAMPLES)
def test_degree_examples(name, d, dt, dw):
    ed = square(name)
    assert degree(ed, "comm") == d
    assert degree(ed, "exterior") == dw
    if dt is not None:
        assert degree(ed, "tensor") == dt


@pytest.mark.parametrize("name", CASES)
@pytest.mark.parametrize("kind", ["comm", "tensor", "exterior"])
def test_two_methods_agree(name, kind):
    ed = square(name)
    assert pair_count_degree(ed, kind) == class_sum_degree(ed, kind)


@pytest.mark.parametrize("name", CASES)
def test_commutativity_degree_is_class_count(name):
    G = group(name)
    assert degree(square(name), "comm") == Fraction(class_count(G.rows, G.order), G.order)


@pytest.mark.parametrize("name", ["C2", "C4", "C6", "C2xC2", "C4xC2", "C3xC3", "C2xC2xC2"])
def test_abelian_degrees_match_form_counts(name):
    dt, dw = abelian_degrees(cyclic_factors(name))
    ed = square(name)
    assert degree(ed, "tensor") == dt
    assert degree(ed, "exterior") == dw


def test_star_centralizer_examples():
    ed = square("C2")
    assert star_centralizer(ed, [1]).elements == (0,)
    assert star_centralizer(ed, [1], "exterior").order == 2
    assert star_centralizer(ed, []).order == 2
    with pytest.raises(ElementOutOfRange):
        star_centralizer(ed, [5])


@pytest.mark.parametrize("name", CASES)
def test_centralizer_chain(name):
    b = degree_bundle(square(name))
    assert b.cent_tensor_order <= b.cent_exterior_order <= b.cent_order
    assert b.cent_order % b.cent_exterior_order == 0
    assert b.d_tensor <= b.d_exterior <= b.d_comm


@pytest.mark.parametrize("name", CASES)
def test_tensor_degree_one_iff_tensor_center_is_everything(name):
    b = degree_bundle(square(name))
    assert (b.d_tensor == 1) == (b.cent_tensor_order == group(name).order)


@pytest.mark.parametrize("name", CASES)
def test_trivial_multiplier_gives_equal_exterior_degree(name):
    b = degree_bundle(square(name))
    if b.M_order == 1:
        assert b.d_exterior == b.d_comm


def test_embedding_report_z2():
    rep = lemma_embedding_report(square("C2"))
    assert rep.asserted and rep.passed
    assert max(r.index for r in rep.rows) == 2
    assert rep.summary() == "pass max index 2 | |J|=2"


def test_embedding_report_trivial_group():
    rep = lemma_embedding_report(square("C1"))
    assert rep.passed and [r.index for r in rep.rows] == [1]


def test_embedding_report_not_asserted_when_hk_smaller():
    S3 = group("S3")
    A3 = subgroup_closure(S3, [g for g in range(6) if S3.element_order(g) == 3])
    rep = lemma_embedding_report(build(S3, A3, A3))
    assert not rep.asserted and rep.passed
    assert all(r.verdict == "not asserted" for r in rep.rows)
    assert rep.summary().startswith("not asserted")


def test_relative_cyclic_case():
    # H = <a^2> in C4, K = C4: Z2 (x) Z4 = Z2, a single nonzero value on (a^2, odd)
    C4 = group("C4")
    ed = build(C4, subgroup_closure(C4, [2]), C4.whole)
    b = degree_bundle(ed)
    assert b.d_comm == 1
    assert b.d_tensor == Fraction(3, 4)
    assert b.J_order == 2
    assert b.cent_tensor_order == 2      # {0, 2} inside K
    assert b.cent_tensor_in_h_order == 1  # only the identity inside H


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["S3", "D4", "Q8", "A4", "C4xC2", "D6"]), st.data())
def test_star_centralizer_of_union_is_intersection(name, data):
    ed = square(name)
    elems = st.sets(st.integers(0, ed.G.order - 1), max_size=3)
    X, Y = data.draw(elems), data.draw(elems)
    for mode in ("tensor", "exterior"):
        both = star_centralizer(ed, X | Y, mode)
        assert both == star_centralizer(ed, X, mode).intersect(star_centralizer(ed, Y, mode))

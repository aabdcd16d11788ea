import pytest

from conftest import group
from oracles import class_count
from tensor_degree.catalog import catalog_group, cyclic_factors, read_group_file
from tensor_degree.errors import NotAGroup, ParseError, UnknownGroup

# (expr, order, number of conjugacy classes)
KNOWN = [
    ("C1", 1, 1), ("C7", 7, 7), ("C2xC2", 4, 4), ("C2xC2xC2", 8, 8), ("C4xC2", 8, 8),
    ("S3", 6, 3), ("S4", 24, 5), ("A4", 12, 4), ("D4", 8, 5), ("D5", 10, 4), ("D6", 12, 6),
    ("Q8", 8, 5), ("Q16", 16, 7), ("Dic3", 12, 6), ("S3xC2", 12, 6),
]


@pytest.mark.parametrize("expr, order, k", KNOWN)
def test_orders_and_class_counts(expr, order, k):
    G = catalog_group(expr)
    assert G.order == order
    assert class_count(G.rows, G.order) == k
    assert G.label == expr


def test_abelian_flags():
    assert group("C2xC2").is_abelian()
    assert not group("Q8").is_abelian()


def test_element_order_profiles():
    assert group("Q8").order_profile() == [1, 2, 4, 4, 4, 4, 4, 4]
    assert group("D4").order_profile() == [1, 2, 2, 2, 2, 2, 4, 4]
    assert group("C2xC2").order_profile() == [1, 2, 2, 2]


def test_documented_orderings():
    D4 = group("D4")
    # r^i s^e at index i + 4e: s r s = r^-1
    assert D4.mul(D4.mul(4, 1), 4) == 3
    C4xC2 = group("C4xC2")
    assert C4xC2.mul(1, 2) == 3        # (0,1)(1,0) = (1,1)
    assert C4xC2.mul(2, 2) == 4        # (1,0)^2 = (2,0)
    S3 = group("S3")
    assert S3.element_order(1) == 2    # (0,2,1) swaps 1 and 2


@pytest.mark.parametrize("expr", ["", "Z5", "C0", "Q6", "S9", "C2x", "xC2", "E8"])
def test_unknown(expr):
    with pytest.raises(UnknownGroup):
        catalog_group(expr)


def test_cyclic_factors():
    assert cyclic_factors("C4xC2") == (4, 2)
    assert cyclic_factors("C12") == (12,)
    assert cyclic_factors("S3") is None


def _write(tmp_path, text):
    p = tmp_path / "g.txt"
    p.write_text(text)
    return p


def test_group_file_z2(tmp_path):
    G = read_group_file(_write(tmp_path, "2\n0 1\n1 0\n"))
    assert G.order == 2 and G.label == "g"


def test_group_file_identity_not_zero(tmp_path):
    with pytest.raises(ParseError, match="identity") as err:
        read_group_file(_write(tmp_path, "2\n1 0\n0 1\n"))
    assert err.value.line == 2


@pytest.mark.parametrize("text, line", [
    ("x\n", 1),
    ("2\n0 1\n", 1),
    ("2\n0 1\n1 a\n", 3),
    ("2\n0 1\n1 0 1\n", 3),
    ("2\n0 1\n1 5\n", 3),
])
def test_group_file_malformed(tmp_path, text, line):
    with pytest.raises(ParseError) as err:
        read_group_file(_write(tmp_path, text))
    assert err.value.line == line


def test_group_file_not_a_group(tmp_path):
    rows = ["0 1 2 3 4", "1 0 3 4 2", "2 4 0 1 3", "3 2 4 0 1", "4 3 1 2 0"]
    with pytest.raises(NotAGroup):
        read_group_file(_write(tmp_path, "5\n" + "\n".join(rows) + "\n"))


def test_group_file_missing(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        read_group_file(tmp_path / "nope.txt")

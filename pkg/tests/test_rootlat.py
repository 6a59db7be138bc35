from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ewmtool.rootlat import (
    Weight,
    build_root_system,
    dominance_leq,
    is_dominant_integral,
    pair,
    positive_roots,
    weyl_dimension,
)

# Bourbaki Cartan matrices for the ranks exercised by the corpus.
BOURBAKI = {
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "C4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -2], [0, 0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]],
    "G2": [[2, -3], [-1, 2]],
}

POSITIVE_ROOT_COUNTS = {
    "A1": 1, "A5": 15, "B4": 16, "C4": 16, "D4": 12, "D5": 20,
    "E6": 36, "E7": 63, "F4": 24, "G2": 6,
}


@pytest.mark.parametrize("spec,matrix", sorted(BOURBAKI.items()))
def test_cartan_matrices_match_bourbaki(spec, matrix):
    rs = build_root_system(spec)
    assert [[int(x) for x in row] for row in rs.cartan] == matrix


def test_rank_one_cartan():
    assert build_root_system([("A", 1)]).cartan == ((F(2),),)


def test_g2_cartan_entries_and_lengths():
    g2 = build_root_system("G2")
    assert pair(g2, g2.simple_root(2), 1) == -3
    assert pair(g2, g2.simple_root(1), 2) == -1
    # a1 short, a2 long for the normalized invariant form
    a1, a2 = g2.simple_root(1), g2.simple_root(2)
    assert g2.form(a1, a1) * 3 == g2.form(a2, a2)


def test_product_block_diagonal():
    rs = build_root_system([("C", 2), ("C", 1)])
    assert rs.rank == 3
    assert [[int(x) for x in r] for r in rs.cartan] == [[2, -2, 0], [-1, 2, 0], [0, 0, 2]]
    assert rs.root_names() == ["a1", "a2", "a1'"]


@pytest.mark.parametrize("spec,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(spec, count):
    assert len(positive_roots(build_root_system(spec))) == count


@pytest.mark.parametrize("bad", ["D2", "E5", "F3", "G4", "A0", "H3"])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build_root_system(bad)


def test_pair_fundamental_is_kronecker():
    for spec in ("A3", "B3", "G2", "C2xC1"):
        rs = build_root_system(spec)
        for i in range(1, rs.rank + 1):
            for j in range(1, rs.rank + 1):
                assert pair(rs, rs.fund_weight(i), j) == (1 if i == j else 0)


def test_pair_examples():
    a2 = build_root_system("A2")
    assert pair(a2, a2.fund_weight(1), 1) == 1
    both = Weight((F(1), F(1)), "root")
    assert pair(a2, both, 1) == 1
    with pytest.raises(IndexError):
        pair(a2, both, 3)


def test_dominance_examples():
    a1 = build_root_system("A1")
    w = a1.fund_weight(1)
    assert dominance_leq(a1, w, Weight((F(3),), "fund"))
    assert not dominance_leq(a1, w, Weight((F(2),), "fund"))
    g2 = build_root_system("G2")
    assert dominance_leq(g2, g2.fund_weight(1), Weight((F(3), F(0)), "fund"))
    assert g2.to_root(Weight((F(2), F(0)), "fund")) == (F(4), F(2))


def test_weyl_dimension_examples():
    a1 = build_root_system("A1")
    assert weyl_dimension(a1, Weight((F(2),), "fund")) == 3
    g2 = build_root_system("G2")
    assert weyl_dimension(g2, g2.fund_weight(1)) == 7
    a2 = build_root_system("A2")
    assert weyl_dimension(a2, Weight((F(1), F(1)), "fund")) == 8
    with pytest.raises(ValueError):
        weyl_dimension(a2, Weight((F(-1), F(0)), "fund"))
    with pytest.raises(ValueError):
        weyl_dimension(a2, Weight((F(1, 2), F(0)), "fund"))


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from(["A2", "B3", "G2", "C2xC1", "D4"]),
    st.data(),
)
def test_basis_roundtrip_exact(spec, data):
    rs = build_root_system(spec)
    coords = data.draw(
        st.tuples(*[st.fractions(max_denominator=12) for _ in range(rs.rank)])
    )
    w = Weight(coords, "fund")
    back = rs.to_fund(Weight(rs.to_root(w), "root"))
    assert back == coords
    w2 = Weight(coords, "root")
    assert rs.to_root(Weight(rs.to_fund(w2), "fund")) == coords


def test_dominant_integral_flag():
    b2 = build_root_system("B2")
    assert is_dominant_integral(b2, b2.fund_weight(2))
    assert not is_dominant_integral(b2, Weight((F(1, 2), F(0)), "fund"))

#!/usr/bin/env python3
"""
Tests for the root system layer: Cartan data, positive roots and pairings.
"""

import itertools

import numpy as np
import pytest

import testkit
from src.errors import InvalidRootError, SimpleIndexError, UnsupportedTypeError, WeightShapeError
from src.rootsys import (
    CLASSICAL_COUNTS,
    CartanType,
    Root,
    Weight,
    build_root_system,
    pairing,
    parse_cartan_type,
    reflection_closure,
    rho,
    root_as_weight,
    simple_root_weight,
)

ALL_TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]


def test_parse_cartan_type():
    assert parse_cartan_type("A2") == CartanType("A", 2)
    assert parse_cartan_type(" g2 ") == CartanType("G", 2)
    assert parse_cartan_type(("B", 3)) == CartanType("B", 3)
    assert str(CartanType("e", 8)) == "E8"
    for bad in ["D3", "E5", "E9", "F3", "G3", "B1", "A0", "X2", "A"]:
        with pytest.raises(UnsupportedTypeError):
            parse_cartan_type(bad)


def test_rank_one_base_case():
    rs = build_root_system("A1")
    assert rs.cartan_matrix.tolist() == [[2]]
    assert rs.positive_roots == (Root((1,)),)
    assert rs.symmetrizers == (1,)


def test_cartan_matrices_follow_bourbaki():
    assert build_root_system("A2").cartan_matrix.tolist() == [[2, -1], [-1, 2]]
    assert build_root_system("B2").cartan_matrix.tolist() == [[2, -1], [-2, 2]]
    assert build_root_system("C2").cartan_matrix.tolist() == [[2, -2], [-1, 2]]
    assert build_root_system("G2").cartan_matrix.tolist() == [[2, -3], [-1, 2]]
    f4 = build_root_system("F4").cartan_matrix
    assert f4[2, 1] == -2 and f4[1, 2] == -1
    d4 = build_root_system("D4").cartan_matrix
    assert d4[1, 2] == d4[1, 3] == -1 and d4[2, 3] == 0
    e6 = build_root_system("E6").cartan_matrix
    assert e6[1, 3] == -1 and e6[0, 2] == -1 and e6[0, 1] == 0


def test_cartan_matrix_is_read_only():
    a = build_root_system("A3").cartan_matrix
    with pytest.raises(ValueError):
        a[0, 0] = 5


def test_symmetrizers_make_form_symmetric():
    expected = {"B2": (2, 1), "C2": (1, 2), "G2": (1, 3), "F4": (2, 2, 1, 1), "A3": (1, 1, 1)}
    for name, d in expected.items():
        assert build_root_system(name).symmetrizers == d, name
    for name in ALL_TYPES:
        form = build_root_system(name).bilinear_form
        assert np.array_equal(form, form.T), name


def test_positive_root_counts():
    for name in ALL_TYPES:
        rs = build_root_system(name)
        t = rs.cartan_type
        assert rs.num_positive_roots == CLASSICAL_COUNTS[t.series](t.rank), name
        assert all(beta.is_positive for beta in rs.positive_roots)


def test_a2_and_g2_roots():
    assert [b.simple_coords for b in build_root_system("A2").positive_roots] == [(1, 0), (0, 1), (1, 1)]
    g2 = build_root_system("G2")
    assert {b.simple_coords for b in g2.positive_roots} == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert g2.highest_root() == Root((3, 2))


def test_roots_sorted_by_height():
    rs = build_root_system("E7")
    heights = [beta.height for beta in rs.positive_roots]
    assert heights == sorted(heights)
    assert rs.highest_root().height == 17


def test_build_is_cached():
    assert build_root_system("F4") is build_root_system(CartanType("F", 4))
    assert build_root_system("A2") == build_root_system("a2")
    assert hash(build_root_system("A2")) == hash(build_root_system("A2"))


def test_rho_and_simple_roots():
    assert rho(build_root_system("A1")) == Weight((1,))
    assert rho(build_root_system("A2")) == Weight((1, 1))
    assert rho(build_root_system("B3")) == Weight((1, 1, 1))
    assert simple_root_weight(build_root_system("A1"), 1) == Weight((2,))
    assert simple_root_weight(build_root_system("A2"), 1) == Weight((2, -1))
    assert simple_root_weight(build_root_system("G2"), 2) == Weight((-3, 2))


def test_root_as_weight_matches_simple_columns():
    rs = build_root_system("B3")
    for i in range(1, 4):
        assert root_as_weight(rs, rs.simple_root(i)) == simple_root_weight(rs, i)
    a2 = build_root_system("A2")
    assert root_as_weight(a2, Root((1, 1))) == Weight((1, 1))


def test_pairing_with_simple_coroots_reads_coordinates():
    for name in ["A3", "B3", "C3", "G2", "F4"]:
        rs = build_root_system(name)
        lam = Weight(tuple(range(2, 2 + rs.rank)))
        for i in range(1, rs.rank + 1):
            assert pairing(rs, lam, rs.simple_root(i)) == lam[i - 1]


def test_pairing_rho_with_every_coroot_is_positive():
    for name in ALL_TYPES:
        rs = build_root_system(name)
        assert all(pairing(rs, rho(rs), beta) >= 1 for beta in rs.positive_roots), name


def test_reflection_closure_adds_nothing_to_positive_roots():
    for name in ["A2", "A3", "B2", "B3", "C3", "G2", "F4", "E6"]:
        rs = build_root_system(name)
        assert reflection_closure(rs.cartan_matrix, rs.positive_roots) == list(rs.positive_roots), name


def test_pairing_is_integral_on_a_box():
    for name in ["A2", "B2", "G2"]:
        rs = build_root_system(name)
        for coords in itertools.product(range(-5, 6), repeat=rs.rank):
            lam = Weight(coords)
            for beta in rs.positive_roots:
                value = pairing(rs, lam, beta)
                assert isinstance(value, int)
                assert value * rs.norm(beta) == 2 * rs.inner(lam, beta), (name, lam, beta)


def test_pairing_b2_short_and_long():
    rs = build_root_system("B2")
    assert pairing(rs, rho(rs), Root((1, 1))) == 3
    assert pairing(rs, rho(rs), Root((1, 2))) == 2
    assert pairing(rs, rho(rs), Root((-1, -2))) == -2


def test_pairing_rejects_non_roots():
    rs = build_root_system("A2")
    with pytest.raises(InvalidRootError):
        pairing(rs, rho(rs), Root((0, 0)))
    with pytest.raises(InvalidRootError):
        pairing(rs, rho(rs), Root((2, 1)))


def test_index_and_shape_errors():
    rs = build_root_system("A2")
    for bad in [0, 3, -1]:
        with pytest.raises(SimpleIndexError):
            rs.simple_root(bad)
    with pytest.raises(WeightShapeError):
        rs.make_weight([1, 2, 3])
    assert rs.make_weight([1, -2]) == Weight((1, -2))
    assert rs.zero() == Weight((0, 0))


def test_weight_arithmetic():
    a, b = Weight((1, -2)), Weight((3, 4))
    assert a + b == Weight((4, 2))
    assert b - a == Weight((2, 6))
    assert -a == Weight((-1, 2))
    assert a.scale(3) == Weight((3, -6))
    assert str(a) == "(1,-2)"
    assert not a.is_dominant() and b.is_dominant()
    assert str(Root((1, 0))) == "[1,0]"
    with pytest.raises(WeightShapeError):
        a + Weight((1, 2, 3))
    with pytest.raises(WeightShapeError):
        a - Weight((1,))
    with pytest.raises(WeightShapeError):
        pairing(build_root_system("A2"), Weight((1, 2, 3)), Root((1, 0)))


def main():
    testkit.main(globals())


if __name__ == "__main__":
    main()

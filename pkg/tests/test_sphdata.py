from fractions import Fraction as F

import pytest

from ewmtool.rootlat import Weight, build_root_system
from ewmtool.sphdata import Color, SphericalDatum, cartan_pairing, colors_moved_by, validate


def test_all_bundled_data_validate(corpus):
    for case in corpus.values():
        if case.datum is not None:
            assert validate(case.datum) == [], case.id


def test_sec8_moving_rule_examples(sec8_datum, corpus):
    assert colors_moved_by(sec8_datum, 1) == {"D1+", "D1-"}
    n4 = corpus["sec8_spin10_n4"].datum
    assert colors_moved_by(n4, 3) == set()
    g2 = corpus["sph5S_g2_sl3"].datum
    assert colors_moved_by(g2, 2) == {"D2"}


def test_sec8_pairing_examples(sec8_datum):
    assert cartan_pairing(sec8_datum, "D2", 0) == -1
    assert cartan_pairing(sec8_datum, "D4", 2) == 1
    with pytest.raises(KeyError):
        cartan_pairing(sec8_datum, "Dx", 0)
    with pytest.raises(IndexError):
        cartan_pairing(sec8_datum, "D2", 5)


def test_g2_pairing_example(corpus):
    d = corpus["sph5S_g2_sl3"].datum
    # second spherical root is a1 + a2
    assert d.sigma_root_coords()[1] == (F(1), F(1))
    assert cartan_pairing(d, "D1-", 1) == -1


def test_deleting_a_paired_color_is_reported(sec8_datum):
    broken = SphericalDatum(
        ambient=sec8_datum.ambient,
        sp=sec8_datum.sp,
        sigma=sec8_datum.sigma,
        colors=tuple(c for c in sec8_datum.colors if c.id != "D1-"),
        simply_connected=False,
    )
    issues = validate(broken)
    assert any("a1" in v and "moves 1" in v for v in issues)


def test_nonprimitive_sigma_is_reported():
    a2 = build_root_system("A2")
    d = SphericalDatum(
        ambient=a2,
        sp=frozenset(),
        sigma=(Weight((2, 2), "root"),),
        colors=(
            Color("D1", {1}, (F(1),)),
            Color("D2", {2}, (F(1),)),
        ),
        xi_basis=(Weight((1, 1), "root"),),
    )
    issues = validate(d)
    assert any("primitive" in v for v in issues)


def test_sp_root_moving_color_is_reported():
    a2 = build_root_system("A2")
    d = SphericalDatum(
        ambient=a2,
        sp=frozenset({2}),
        sigma=(Weight((1, 1), "root"),),
        colors=(Color("D1", {1}, (F(1),)), Color("D2", {2}, (F(1),))),
    )
    issues = validate(d)
    assert any("S^p" in v for v in issues)


def test_rho_consistency_checked():
    a2 = build_root_system("A2")
    good = SphericalDatum(
        ambient=a2,
        sp=frozenset(),
        sigma=(Weight((1, 1), "root"),),
        colors=(
            Color("D1", {1}, (F(1),), rho=(F(1),)),
            Color("D2", {2}, (F(1),), rho=(F(2),)),
        ),
    )
    issues = validate(good)
    assert any("rho disagrees" in v and "D2" in v for v in issues)
    assert not any("D1" in v for v in issues)


def test_wonderful_flags(corpus):
    won = corpus["sph5S_g2_sl3"].datum
    assert won.wonderful and len(won.sigma) == won.xi_rank()
    full_lattice = corpus["sym1cS_sl4"].datum
    assert not full_lattice.wonderful
    assert full_lattice.xi_rank() == 3


def test_wonderful_determinant_violation():
    a2 = build_root_system("A2")
    d = SphericalDatum(
        ambient=a2,
        sp=frozenset(),
        sigma=(Weight((1, 1), "root"),),
        colors=(Color("D1", {1}, (F(1),)), Color("D2", {2}, (F(1),))),
        xi_basis=(Weight((F(1, 2), F(1, 2)), "root"),),
        wonderful=True,
    )
    issues = validate(d)
    assert any("determinant" in v for v in issues)


def test_adjusted_group_doubled_root_refused():
    a1 = build_root_system("A1")
    d = SphericalDatum(
        ambient=a1,
        sp=frozenset(),
        sigma=(Weight((2,), "root"),),
        colors=(Color("D1", {1}, (F(1),)),),
        simply_connected=False,
    )
    issues = validate(d)
    assert any("2*a1" in v for v in issues)

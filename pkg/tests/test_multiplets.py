from fractions import Fraction as F

import pytest

from multipletkit.errors import MultipletkitError
from multipletkit.multiplets import (
    affine_gkrs_sides,
    affine_multiplet,
    finite_multiplet,
    verify_affine_gkrs,
    verify_finite_gkrs,
)
from multipletkit.rootsystem import RootSystem, parse_subalgebra, weyl_dimension
from multipletkit.weyl import AffineWeight


def pair(g, h):
    rs = RootSystem(g)
    return rs, parse_subalgebra(rs, h)


def test_f4_over_b4_dimensions():
    rs, sub = pair("F4", "B4")
    rep = verify_finite_gkrs(rs, sub, (0, 0, 0, 0))
    assert rep.verified
    assert [e.sign for e in rep.entries] == [1, -1, 1]
    assert rep.dims == [84, 128, 44]
    assert rep.dims[1] == rep.dims[0] + rep.dims[2]


def test_a1_over_torus():
    rs, t = pair("A1", "t")
    entries = finite_multiplet(rs, t, (2,))
    assert [(e.sign, e.mu) for e in entries] == [(1, (F(3),)), (-1, (F(-3),))]


def test_equal_dimension_sides():
    # signed sum of dims matches dim V * (dim S+ - dim S-) = 0 unless h = g
    rs, sub = pair("B2", "A1+A1")
    for lam in [(0, 0), (1, 0), (0, 1), (1, 1)]:
        rep = verify_finite_gkrs(rs, sub, lam)
        assert rep.verified
        assert sum(e.sign * weyl_dimension(sub, e.mu) for e in rep.entries) == 0


def test_h_equal_g_is_trivial():
    rs, full = pair("A2", "A2")
    entries = finite_multiplet(rs, full, (1, 1))
    assert [(e.sign, e.mu) for e in entries] == [(1, (F(1), F(1)))]


def test_rejects_non_dominant():
    rs, t = pair("A1", "t")
    with pytest.raises(MultipletkitError):
        finite_multiplet(rs, t, (-1,))


def test_affine_entries_and_json():
    rs, t = pair("A1", "t")
    rep = verify_affine_gkrs(rs, t, AffineWeight.make(0, (0,), 0), 3)
    assert rep.verified and rep.max_energy == 3
    assert {(int(e.mu.m), int(e.mu.lam[0])) for e in rep.entries} == {(0, -1), (0, 1), (1, -3), (1, 3), (3, -5), (3, 5)}
    js = rep.to_json()
    assert js["coset_set"].startswith("infinite")
    assert js["entries"][0]["series_ref"].startswith("U(")


def test_affine_a2_over_a1u1():
    rs, sub = pair("A2", "A1+u1")
    assert verify_affine_gkrs(rs, sub, AffineWeight.make(0, (0, 0), 0), 3).verified


def test_affine_needs_simple_semisimple_part():
    rs, sub = pair("B2", "A1+A1")
    with pytest.raises(MultipletkitError, match="non-simple"):
        affine_multiplet(rs, sub, AffineWeight.make(0, (0, 0), 0), 2)


def test_affine_cutoff_too_small():
    rs, t = pair("A1", "t")
    lam = AffineWeight.make(0, (-1,), 2)
    assert affine_multiplet(rs, t, lam, 0)
    with pytest.raises(MultipletkitError, match="cutoff"):
        affine_gkrs_sides(rs, t, AffineWeight.make(5, (0,), 0), 1)

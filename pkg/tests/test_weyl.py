from fractions import Fraction as F

import pytest

from multipletkit import config
from multipletkit.errors import CapExceeded, MultipletkitError, NonRegularWeight
from multipletkit.rootsystem import RootSystem, parse_subalgebra
from multipletkit.weyl import (
    AffineWeight,
    affine_norm2,
    affine_orbit,
    affine_rho,
    coset_reps,
    finite_weyl_elements,
    in_fundamental_alcove,
    in_fundamental_alcove_by_roots,
    make_antidominant,
    orbit_csv_rows,
)


@pytest.mark.parametrize("label,order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B4", 384), ("F4", 1152)])
def test_weyl_group_orders(label, order):
    els = finite_weyl_elements(RootSystem(label))
    assert len(els) == order
    assert sum(e.sign for e in els) == 0


def test_weyl_group_cap():
    with config.override(weyl_group=100):
        with pytest.raises(CapExceeded, match="cap exceeded"):
            finite_weyl_elements(RootSystem("B4"))


def test_coset_counts():
    b2 = RootSystem("B2")
    assert len(coset_reps(b2, parse_subalgebra(b2, "A1+A1"))) == 2
    f4 = RootSystem("F4")
    assert len(coset_reps(f4, parse_subalgebra(f4, "B4"))) == 3
    a2 = RootSystem("A2")
    assert len(coset_reps(a2, parse_subalgebra(a2, "t"))) == 6


def test_a1_orbit_is_a_parabola():
    rs = RootSystem("A1")
    pts = affine_orbit(rs, -affine_rho(rs), 10)
    got = {(int(x.m), int(x.lam[0])) for _, x in pts}
    want = {((l * l - 1) // 8, l) for l in range(-9, 10, 2)}
    assert got == want
    assert all(x.h == 2 for _, x in pts)
    rows = orbit_csv_rows(pts)
    assert rows[0] == ["0", "-1", "2", "1"]


def test_orbit_preserves_norm():
    rs = RootSystem("G2")
    x0 = -affine_rho(rs)
    pts = affine_orbit(rs, x0, 4)
    assert len(pts) > 1
    assert {affine_norm2(rs, x) for _, x in pts} == {affine_norm2(rs, x0)}


def test_make_antidominant_examples():
    rs = RootSystem("A1")
    x = AffineWeight.make(1, (3,), 2)
    c, y, sign = make_antidominant(rs, x)
    assert y == AffineWeight.make(0, (-1,), 2)
    assert c.act(rs, x) == y and sign == c.sign == 1
    c, y, sign = make_antidominant(rs, AffineWeight.make(0, (1,), 2))
    assert y == AffineWeight.make(0, (-1,), 2) and sign == -1
    with pytest.raises(NonRegularWeight):
        make_antidominant(rs, AffineWeight.make(0, (2,), 2))
    with pytest.raises(MultipletkitError):
        make_antidominant(rs, AffineWeight.make(0, (1,), 0))


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_alcove_tests_agree(label):
    rs = RootSystem(label)
    for a in range(-4, 2):
        for b in range(-4, 2):
            x = AffineWeight.make(0, (a, b), 3)
            for strict in (False, True):
                assert in_fundamental_alcove(rs, x, strict) == in_fundamental_alcove_by_roots(rs, x, strict)


def test_affine_rho_level():
    assert affine_rho(RootSystem("A2")).h == -3
    t = parse_subalgebra(RootSystem("A2"), "t")
    assert affine_rho(t) == AffineWeight.make(0, (0, 0), 0)
    assert affine_rho(parse_subalgebra(RootSystem("A2"), "A1+u1")).h == F(-2)

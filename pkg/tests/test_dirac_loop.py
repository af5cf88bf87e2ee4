from fractions import Fraction as F

import pytest

from multipletkit import config
from multipletkit.dirac_loop import (
    affine_dirac_trivial,
    anticommutator_check,
    build_fock,
    energy_operator,
    gamma_square_check,
    loop_casimir_check,
    measured_level,
)
from multipletkit.errors import CapExceeded
from multipletkit.rootsystem import RootSystem, parse_subalgebra


def pair(g, h):
    rs = RootSystem(g)
    return rs, parse_subalgebra(rs, h)


def test_fock_dimensions():
    rs, t = pair("A1", "t")
    assert build_fock(rs, t, 1).dim == 6
    assert build_fock(rs, t, 4).energy_counts() == {0: 2, 1: 4, 2: 6, 3: 12, 4: 18}


def test_energy_operator_is_diagonal():
    fock = build_fock(*pair("A1", "t"), 3)
    E = energy_operator(fock)
    assert E.is_diagonal()
    assert E.diagonal() == [F(e) for e in fock.energies]


def test_clifford_relations_inside_truncation():
    ok, count = anticommutator_check(build_fock(*pair("A1", "t"), 3))
    assert ok and count > 0


def test_level_from_cocycle():
    rs = RootSystem("A1")
    fock = build_fock(rs, None, 2)
    assert measured_level(fock, fock.lie.cartan_index[0]) == 2
    assert measured_level(fock, fock.lie.cartan_index[0], 2) == 2
    fock_t = build_fock(rs, parse_subalgebra(rs, "t"), 2)
    assert fock_t.level == 2


def test_loop_casimir_su2():
    rep = loop_casimir_check(RootSystem("A1"), 2)
    assert rep.passed
    assert (rep.slope, rep.constant) == (F(4), F(3, 4))


def test_gamma_square_su2():
    # {gamma, gamma} = -c (E + dim g / 24) with c = 2, dim g = 3
    assert gamma_square_check(RootSystem("A1"), 2) == (F(-2), F(-1, 4))


def test_su2_torus_kernel():
    D, rep = affine_dirac_trivial(*pair("A1", "t"), 6)
    assert rep.D_is_zero and rep.raw_kernel_dim == rep.dim == 114
    got = {(int(mu.m), int(mu.lam[0])) for mu in list(rep.kernel_plus) + list(rep.kernel_minus)}
    assert got == {(0, -1), (0, 1), (1, -3), (1, 3), (3, -5), (3, 5), (6, -7), (6, 7)}
    assert rep.passed


@pytest.mark.parametrize("N,kernel", [(1, 12), (2, 24)])
def test_su3_torus_kernel(N, kernel):
    D, rep = affine_dirac_trivial(*pair("A2", "t"), N)
    assert not rep.D_is_zero
    assert rep.passed
    assert sum(rep.kernel_plus.values()) + sum(rep.kernel_minus.values()) == kernel
    rs = RootSystem("A2")
    # D^2 = -|rho|^2 + |mu|^2 - 2 m h with h = 3 on the block of lowest weight (m, mu, 3)
    for mu, _, v, in_kernel in rep.blocks:
        assert v == -rs.norm2(rs.rho) + rs.norm2(mu.lam) - 6 * mu.m
        assert in_kernel == (v == 0)
    assert any(not k for *_, k in rep.blocks)


def test_fock_cap():
    with config.override(fock_states=10):
        with pytest.raises(CapExceeded):
            build_fock(*pair("A1", "t"), 4)

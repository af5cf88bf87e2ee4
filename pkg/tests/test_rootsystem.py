from fractions import Fraction as F

import pytest

from multipletkit.characters import weight_multiplicities
from multipletkit.errors import MultipletkitError
from multipletkit.rootsystem import (
    RootSystem,
    casimir_eigenvalue,
    dual_coxeter,
    find_subsystem,
    parse_subalgebra,
    weyl_dimension,
)


def closure_roots(rs):
    """All roots by reflecting simple roots with Cartan integers only."""
    seen = {tuple(a) for a in rs.simple_roots}
    stack = list(seen)
    while stack:
        v = stack.pop()
        for i in range(rs.rank):
            w = tuple(v[j] - v[i] * rs.cartan[i][j] for j in range(rs.rank))
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


@pytest.mark.parametrize("label,npos", [("A1", 1), ("A2", 3), ("B2", 4), ("C3", 9), ("G2", 6), ("B4", 16), ("D4", 12), ("F4", 24), ("E6", 36)])
def test_positive_root_counts(label, npos):
    rs = RootSystem(label)
    assert len(rs.positive_roots) == npos
    assert set(rs.roots) == closure_roots(rs)


def test_b4_root_lengths():
    rs = RootSystem("B4")
    lengths = [rs.norm2(a) for a in rs.roots]
    assert lengths.count(F(2)) == 24
    assert lengths.count(F(1)) == 8


@pytest.mark.parametrize("label,c", [("A1", 2), ("A2", 3), ("B2", 3), ("G2", 4), ("B4", 7), ("F4", 9), ("E8", 30)])
def test_dual_coxeter_matches_adjoint_casimir(label, c):
    rs = RootSystem(label)
    assert rs.norm2(rs.highest_root) == 2
    assert dual_coxeter(rs) == c
    assert casimir_eigenvalue(rs, rs.highest_root) == c


@pytest.mark.parametrize("label,lam,dim", [("A2", (1, 1), 8), ("B2", (1, 0), 5), ("G2", (1, 0), 7), ("F4", (0, 0, 0, 1), 26), ("B4", (0, 0, 0, 1), 16)])
def test_weyl_dimension_and_freudenthal(label, lam, dim):
    rs = RootSystem(label)
    assert weyl_dimension(rs, lam) == dim
    assert weight_multiplicities(rs, lam).total() == dim


def test_subsystems():
    a2 = RootSystem("A2")
    assert len(find_subsystem(a2, "A1+u1").positive_roots) == 1
    b2 = RootSystem("B2")
    assert len(find_subsystem(b2, "A1+A1").positive_roots) == 2
    assert parse_subalgebra(b2, "t").positive_roots == []
    assert parse_subalgebra(b2, "B2").positive_roots == b2.positive_roots
    f4 = RootSystem("F4")
    assert len(find_subsystem(f4, "B4").positive_roots) == 16


def test_bad_labels():
    with pytest.raises(MultipletkitError):
        RootSystem("Q3")
    with pytest.raises(MultipletkitError):
        find_subsystem(RootSystem("A2"), "A1+u1^2")
    with pytest.raises(MultipletkitError):
        find_subsystem(RootSystem("A2"), "B2")

from fractions import Fraction as F

from multipletkit.clifford import (
    chevalley_module,
    clifford_generator,
    finite_spin_module,
    gamma_operator,
    rho_identity,
    superalgebra_checks,
)
from multipletkit.linalg import SparseMatrix
from multipletkit.reps import lie_algebra
from multipletkit.rootsystem import RootSystem, parse_subalgebra


def test_clifford_relations_a2():
    lie = lie_algebra(RootSystem("A2"))
    mod = chevalley_module(lie)
    assert mod.dim == 256
    for a in range(lie.dim):
        for b in range(lie.dim):
            ca = clifford_generator(mod, {a: F(1)})
            cb = clifford_generator(mod, {b: F(1)})
            assert ca.supercommutator(cb) == SparseMatrix.identity(mod.dim, 2 * lie.form_entry(a, b))


def test_superalgebra_su2():
    rep = superalgebra_checks(lie_algebra(RootSystem("A1")))
    assert rep["dim"] == 8
    assert all(v for v in rep.values() if isinstance(v, bool))
    assert rep["gamma_square"] == F(-1, 4) == rep["expected"]


def test_superalgebra_b2_spin_of_p():
    rs = RootSystem("B2")
    lie = lie_algebra(rs)
    mod = finite_spin_module(lie, parse_subalgebra(rs, "t"))
    assert mod.dim == 2 ** len(rs.positive_roots)
    g = gamma_operator(lie, mod)
    assert g.parity == 1


def test_rho_identity():
    for label in ("A1", "A2", "G2"):
        lhs, rhs = rho_identity(lie_algebra(RootSystem(label)))
        assert lhs == rhs


def test_finite_spin_weights_a2_torus():
    rs = RootSystem("A2")
    mod = finite_spin_module(lie_algebra(rs), parse_subalgebra(rs, "t"))
    ws = sorted(mod.weights)
    assert len(ws) == 8
    assert min(ws, key=rs.norm2) is not None
    assert tuple(-x for x in rs.rho) in ws and rs.rho in ws

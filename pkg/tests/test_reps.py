import pytest

from multipletkit import config
from multipletkit.errors import CapExceeded
from multipletkit.linalg import SparseMatrix
from multipletkit.reps import adjoint_module, build_irrep, lie_algebra
from multipletkit.rootsystem import RootSystem, casimir_eigenvalue, weyl_dimension
from multipletkit.characters import weight_multiplicities


@pytest.mark.parametrize("label,lam", [("A1", (3,)), ("A2", (1, 1)), ("A2", (2, 0)), ("B2", (0, 1)), ("B2", (1, 1)), ("G2", (1, 0)), ("C3", (0, 0, 1)), ("B3", (0, 0, 1))])
def test_irreps(label, lam):
    rs = RootSystem(label)
    rep = build_irrep(rs, lam)
    assert rep.dim == weyl_dimension(rs, lam)
    assert rep.check_relations()
    assert rep.character() == dict(weight_multiplicities(rs, lam).items())
    cas = lie_algebra(rs).casimir(rep)
    assert cas == SparseMatrix.identity(rep.dim, casimir_eigenvalue(rs, lam))


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A3"])
def test_chevalley_basis(label):
    lie = lie_algebra(RootSystem(label))
    assert lie.dim == RootSystem(label).dim
    assert lie.jacobi_holds()
    assert lie.form_is_invariant()


def test_form_normalization():
    lie = lie_algebra(RootSystem("A1"))
    e, f = lie.simple_e[0], lie.simple_f[0]
    h = lie.cartan_index[0]
    # negative of the basic inner product: B(h, h) = -2 for a long coroot
    assert lie.form_entry(h, h) == -2
    assert lie.form_entry(e, f) == -1


def test_adjoint_module_matches_adjoint_weights():
    rs = RootSystem("B2")
    rep = adjoint_module(rs)
    assert rep.dim == 10 and rep.check_relations()


def test_irrep_cap():
    with config.override(irrep_dim=5):
        with pytest.raises(CapExceeded):
            build_irrep(RootSystem("A2"), (1, 1))


def test_sl2_triple():
    lie = lie_algebra(RootSystem("G2"))
    for beta in RootSystem("G2").positive_roots:
        e, f, h = lie.sl2_triple(beta)
        assert lie.bracket(e, f) == h
        assert lie.bracket(h, e) == {k: 2 * v for k, v in e.items()}

from fractions import Fraction as F

import pytest

from multipletkit.dirac_finite import (
    assemble_dirac_finite,
    check_square_finite,
    finite_dirac_report,
    grading_anticommutes,
    h_equivariant,
)
from multipletkit.rootsystem import RootSystem, parse_subalgebra


def pair(g, h):
    rs = RootSystem(g)
    return rs, parse_subalgebra(rs, h)


@pytest.mark.parametrize("g,h,lam", [("A1", "t", (1,)), ("A2", "A1+u1", (1, 0)), ("A2", "A1+u1", (0, 1)), ("B2", "A1+A1", (1, 0)), ("B2", "t", (0, 1)), ("G2", "A1+A1", (0, 0))])
def test_kernel_is_multiplet(g, h, lam):
    rep = finite_dirac_report(*pair(g, h), lam)
    assert rep["passed"], rep
    assert rep["grading_anticommutes"] and rep["h_equivariant"]


def test_su2_blocks_and_square():
    asm = assemble_dirac_finite(*pair("A1", "t"), (1,))
    assert asm.dim == 4
    assert grading_anticommutes(asm) and h_equivariant(asm)
    sq = check_square_finite(asm)
    vals = {mu[0]: v for mu, _, v in sq.blocks}
    assert vals == {F(2): F(0), F(0): F(-2), F(-2): F(0)}


def test_h_equals_g():
    rep = finite_dirac_report(*pair("A1", "A1"), (0,))
    assert rep["passed"] and rep["dim"] == 1
    assert rep["kernel"] == [{"mu": ["0"], "side": "+", "dim": 1}]


def test_report_json_types():
    rep = finite_dirac_report(*pair("A2", "t"), (1, 0))
    assert rep["dim"] == 24 and rep["blocks"] == 12 and rep["kernel_dim"] == 6
    assert rep["square_checks"] == "pass"
    assert all(isinstance(x, str) for r in rep["kernel"] for x in r["mu"])

"""The cubic Dirac operator of an equal-rank pair h in g on V_lambda (x) S_p.

D = sum_i c(X_i*) r(X_i) - 1/12 sum_{i,j} c(X_i*) c(X_j*) c([X_i, X_j]_p)

over a basis of p with the B-dual basis.  D commutes with h, so it is block
diagonal by weight; kernels and squares are computed block by block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .characters import FiniteCharacter, weight_multiplicities
from .clifford import SpinModule, cubic_sum, finite_spin_module, ads_operator
from .errors import MultipletkitError, VerificationError
from .linalg import SparseMatrix, Vector, nullspace
from .multiplets import finite_gkrs_sides, finite_multiplet
from .reps import LieAlgebra, RepMatrices, build_irrep, highest_weight_vectors, lie_algebra
from .rootsystem import RootData, RootSystem, Weight, w_add, w_str, weight, weyl_dimension


@dataclass
class DiracAssembly:
    rs_g: RootSystem
    sub: RootData
    lam: Weight
    lie: LieAlgebra
    rep: RepMatrices
    spin: SpinModule
    D: SparseMatrix
    grading: SparseMatrix
    weights: List[Weight]
    h_cartan: List[SparseMatrix]
    h_raising: List[SparseMatrix]
    h_generators: List[SparseMatrix]

    @property
    def dim(self) -> int:
        return self.D.shape[0]

    def blocks(self) -> Dict[Weight, List[int]]:
        out: Dict[Weight, List[int]] = {}
        for k, w in enumerate(self.weights):
            out.setdefault(w, []).append(k)
        return out

    def side_of(self, k: int) -> int:
        return 1 if self.grading[k, k] > 0 else -1


def _kron_left(a: SparseMatrix, n: int) -> SparseMatrix:
    return a.kron(SparseMatrix.identity(n))


def _kron_right(n: int, b: SparseMatrix) -> SparseMatrix:
    return SparseMatrix.identity(n).kron(b)


def assemble_dirac_finite(rs_g: RootSystem, sub: RootData, lam) -> DiracAssembly:
    lam = weight(lam)
    if sub.rank != rs_g.rank:
        raise MultipletkitError("rank mismatch")
    lie = lie_algebra(rs_g)
    rep = build_irrep(rs_g, lam)
    spin = finite_spin_module(lie, sub)
    mats = lie.realize(rep)
    p = spin.labels
    dual = lie.dual_basis(p)
    nv, ns = rep.dim, spin.dim
    D = SparseMatrix((nv * ns, nv * ns))
    for a in p:
        D = D + mats[a].kron(spin.c_vec(dual[a]))
    D = D + _kron_right(nv, cubic_sum(lie, spin).scale(Fraction(-1, 12)))
    # finite S+ carries the top weight rho_p, i.e. degree |Delta_p^+|
    grading = _kron_right(nv, spin.grading(len(spin.slots)))
    sw = spin.weights
    weights = [w_add(x, y) for x in rep.weights for y in sw]

    def rho_prime(z: Vector) -> SparseMatrix:
        m = _kron_left(lie.realize_vector(mats, z), ns)
        return m + _kron_right(nv, ads_operator(lie, spin, z).matrix)

    cartan = [rho_prime({c: Fraction(1)}) for c in lie.cartan_index]
    raising = [rho_prime({lie.index(b): Fraction(1)}) for b in sub.simple_roots]
    lowering = [rho_prime({lie.index(tuple(-x for x in b)): Fraction(1)}) for b in sub.simple_roots]
    asm = DiracAssembly(rs_g, sub, lam, lie, rep, spin, D, grading, weights, cartan, raising, cartan + raising + lowering)
    for k, m in enumerate(cartan):
        if not m.is_diagonal() or any(m[j, j] != weights[j][k] for j in range(asm.dim)):
            raise VerificationError("Cartan action is not diagonal on the weight basis")
    if not all(m.commutator(D).is_zero() for m in asm.h_generators):
        raise VerificationError("D is not h-equivariant")
    return asm


def grading_anticommutes(asm: DiracAssembly) -> bool:
    return asm.grading.anticommutator(asm.D).is_zero()


def h_equivariant(asm: DiracAssembly) -> bool:
    return all(m.commutator(asm.D).is_zero() for m in asm.h_generators)


def expected_square(asm: DiracAssembly, mu: Weight) -> Fraction:
    g, h = asm.rs_g, asm.sub
    return -g.norm2(w_add(asm.lam, g.rho)) + h.norm2(w_add(mu, h.rho))


@dataclass
class SquareReport:
    blocks: List[Tuple[Weight, int, Fraction]] = field(default_factory=list)
    passed: bool = True
    witness: Optional[tuple] = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "blocks": [{"mu": [str(x) for x in mu], "multiplicity": m, "D2": str(v)} for mu, m, v in self.blocks],
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


def check_square_finite(asm: DiracAssembly) -> SquareReport:
    """D^2 on the highest-weight vectors of each U_mu-isotypic piece.

    D^2 commutes with h, so a scalar value on the highest-weight vectors is
    the value on the whole isotypic component.
    """
    d2 = asm.D @ asm.D
    hw = highest_weight_vectors(asm.weights, asm.h_raising)
    total = 0
    rep = SquareReport()
    for mu, vecs in sorted(hw.items(), reverse=True):
        total += len(vecs) * weyl_dimension(asm.sub, mu)
        want = expected_square(asm, mu)
        rep.blocks.append((mu, len(vecs), want))
        for v in vecs:
            img = d2.apply(v)
            if img != {k: want * x for k, x in v.items() if want}:
                rep.passed = False
                rep.witness = (w_str(mu), want)
                break
    if total != asm.dim:
        rep.passed = False
        rep.witness = ("dimension", total, asm.dim)
    if not rep.passed:
        raise VerificationError("D^2 is not the expected scalar on an isotypic block", rep.witness)
    return rep


@dataclass
class KernelReport:
    plus: Dict[Weight, int]
    minus: Dict[Weight, int]
    kernel_dim: int
    matches_multiplet: bool
    index_matches: bool

    def to_json(self) -> dict:
        rows = []
        for side, data in (("+", self.plus), ("-", self.minus)):
            for mu, m in sorted(data.items(), reverse=True):
                rows.append({"mu": [str(x) for x in mu], "side": side, "dim": m})
        return {
            "kernel": rows,
            "kernel_dim": self.kernel_dim,
            "matches_multiplet": self.matches_multiplet,
            "index_matches": self.index_matches,
        }


def _block_kernel(asm: DiracAssembly, idx: List[int]) -> List[Vector]:
    sub = asm.D.restrict(idx, idx)
    return [{idx[c]: v for c, v in z.items()} for z in nullspace(sub)]


def kernel_multiplet_finite(asm: DiracAssembly) -> KernelReport:
    kernel_dim = 0
    for w, idx in asm.blocks().items():
        kernel_dim += len(_block_kernel(asm, idx))
    sides = {}
    for s in (1, -1):
        cols = [k for k in range(asm.dim) if asm.side_of(k) == s]
        hw = highest_weight_vectors(asm.weights, asm.h_raising, extra=[asm.D], columns=cols)
        sides[s] = {mu: len(v) for mu, v in hw.items()}
    plus, minus = sides[1], sides[-1]
    entries = finite_multiplet(asm.rs_g, asm.sub, asm.lam)
    want_plus = {e.mu: 1 for e in entries if e.sign == 1}
    want_minus = {e.mu: 1 for e in entries if e.sign == -1}
    counted = sum(m * weyl_dimension(asm.sub, mu) for d in (plus, minus) for mu, m in d.items())
    matches = plus == want_plus and minus == want_minus and counted == kernel_dim
    index = FiniteCharacter()
    for d, s in ((plus, 1), (minus, -1)):
        for mu, m in d.items():
            index = index + weight_multiplicities(asm.sub, mu).scale(s * m)
    lhs, _ = finite_gkrs_sides(asm.rs_g, asm.sub, asm.lam)
    return KernelReport(plus, minus, kernel_dim, matches, index == lhs)


def finite_dirac_report(rs_g: RootSystem, sub: RootData, lam) -> dict:
    asm = assemble_dirac_finite(rs_g, sub, lam)
    sq = check_square_finite(asm)
    ker = kernel_multiplet_finite(asm)
    out = {
        "pair": [rs_g.type_label, getattr(sub, "label", "")],
        "lambda": [str(x) for x in asm.lam],
        "dim": asm.dim,
        "blocks": len(asm.blocks()),
        "grading_anticommutes": grading_anticommutes(asm),
        "h_equivariant": h_equivariant(asm),
        "square_checks": "pass" if sq.passed else "fail",
        "square": sq.to_json(),
    }
    out.update(ker.to_json())
    out["passed"] = bool(sq.passed and ker.matches_multiplet and ker.index_matches and out["grading_anticommutes"])
    return out

"""Clifford generators as exact fermionic matrices.

A ``SpinModule`` is an exterior algebra on a list of creation slots, restricted
to a chosen set of basis states (bitmasks).  Each vector ``label`` of the
quadratic space acts by

    c(label) = eps(slot) + sum_j phi_j iota(j)

so both a polarized space (creators pure eps, annihilators pure iota) and the
Chevalley identification of Cl(g) with the exterior algebra Lambda(g) are the
same engine with different rules.  Relations use {c(u), c(v)} = 2 B(u, v).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import config
from .errors import MultipletkitError
from .linalg import SparseMatrix, Vector
from .reps import LieAlgebra
from .rootsystem import RootData, Weight, w_add, w_scale, w_sub

Label = Hashable
Rule = Tuple[Optional[int], Dict[int, Fraction]]


def _below(mask: int, bit: int) -> int:
    return bin(mask & ((1 << bit) - 1)).count("1")


@dataclass(frozen=True)
class SpinOperator:
    matrix: SparseMatrix
    parity: int  # 0 even, 1 odd

    def __matmul__(self, o: "SpinOperator") -> "SpinOperator":
        return SpinOperator(self.matrix @ o.matrix, (self.parity + o.parity) % 2)

    def __add__(self, o: "SpinOperator") -> "SpinOperator":
        if self.parity != o.parity and not (self.matrix.is_zero() or o.matrix.is_zero()):
            raise MultipletkitError("adding operators of different parity")
        return SpinOperator(self.matrix + o.matrix, self.parity if not self.matrix.is_zero() else o.parity)

    def scale(self, c) -> "SpinOperator":
        return SpinOperator(self.matrix.scale(c), self.parity)

    def supercommutator(self, o: "SpinOperator") -> SparseMatrix:
        if self.parity and o.parity:
            return self.matrix.anticommutator(o.matrix)
        return self.matrix.commutator(o.matrix)


class SpinModule:
    """Exterior algebra on ``slots`` restricted to ``states``."""

    def __init__(
        self,
        slots: Sequence[Label],
        rules: Mapping[Label, Rule],
        states: Optional[Sequence[int]] = None,
        slot_weights: Optional[Sequence[Weight]] = None,
        base_weight: Optional[Weight] = None,
    ):
        self.slots = list(slots)
        self.slot_pos = {s: k for k, s in enumerate(self.slots)}
        self.rules = dict(rules)
        if states is None:
            config.check("spin module states", 2 ** len(self.slots), "fock_states")
            states = range(2 ** len(self.slots))
        else:
            config.check("spin module states", len(states), "fock_states")
        self.states = list(states)
        self.index = {s: k for k, s in enumerate(self.states)}
        self.slot_weights = slot_weights
        self.base_weight = base_weight
        self._cache: Dict[Label, SparseMatrix] = {}
        self._eps: Dict[int, SparseMatrix] = {}
        self._iota: Dict[int, SparseMatrix] = {}

    @property
    def dim(self) -> int:
        return len(self.states)

    @property
    def labels(self) -> List[Label]:
        return list(self.rules)

    def degree(self, k: int) -> int:
        return bin(self.states[k]).count("1")

    def state_weight(self, k: int) -> Weight:
        w = self.base_weight
        m = self.states[k]
        for b in range(len(self.slots)):
            if m >> b & 1:
                w = w_add(w, self.slot_weights[b])
        return w

    @property
    def weights(self) -> List[Weight]:
        return [self.state_weight(k) for k in range(self.dim)]

    def eps(self, bit: int) -> SparseMatrix:
        if bit not in self._eps:
            ent = []
            for k, s in enumerate(self.states):
                if not s >> bit & 1:
                    t = self.index.get(s | 1 << bit)
                    if t is not None:
                        ent.append((t, k, -1 if _below(s, bit) % 2 else 1))
            self._eps[bit] = SparseMatrix.from_entries((self.dim, self.dim), ent)
        return self._eps[bit]

    def iota(self, bit: int) -> SparseMatrix:
        if bit not in self._iota:
            ent = []
            for k, s in enumerate(self.states):
                if s >> bit & 1:
                    t = self.index.get(s ^ 1 << bit)
                    if t is not None:
                        ent.append((t, k, -1 if _below(s, bit) % 2 else 1))
            self._iota[bit] = SparseMatrix.from_entries((self.dim, self.dim), ent)
        return self._iota[bit]

    def c(self, label: Label) -> SparseMatrix:
        if label not in self._cache:
            if label not in self.rules:
                raise MultipletkitError(f"{label!r} is not a vector of this space")
            slot, phi = self.rules[label]
            m = self.eps(slot) if slot is not None else SparseMatrix((self.dim, self.dim))
            for b, v in phi.items():
                m = m + self.iota(b).scale(v)
            self._cache[label] = m
        return self._cache[label]

    def c_vec(self, v: Mapping[Label, Fraction]) -> SparseMatrix:
        m = SparseMatrix((self.dim, self.dim))
        for a, x in v.items():
            if x:
                m = m + self.c(a).scale(x)
        return m

    def kind(self, label: Label) -> str:
        slot, phi = self.rules[label]
        if slot is not None and not phi:
            return "create"
        if slot is None:
            return "annihilate"
        return "mixed"

    def grading(self, even_degree: int = 0) -> SparseMatrix:
        """+1 on states whose degree has the parity of ``even_degree``."""
        return SparseMatrix(
            (self.dim, self.dim),
            {k: {k: 1 if (self.degree(k) - even_degree) % 2 == 0 else -1} for k in range(self.dim)},
        )


@dataclass(frozen=True)
class PolarizedSpace:
    """Quadratic space split into isotropic creation and annihilation halves."""

    form: Callable[[Label, Label], Fraction]
    creators: Tuple[Label, ...]
    annihilators: Tuple[Label, ...]

    @property
    def dim(self) -> int:
        return len(self.creators) + len(self.annihilators)

    def check(self) -> bool:
        for group in (self.creators, self.annihilators):
            for a in group:
                for b in group:
                    if self.form(a, b):
                        return False
        return len(self.creators) == len(self.annihilators)

    def module(self, slot_weights=None, base_weight=None) -> SpinModule:
        if not self.check():
            raise MultipletkitError("polarization halves are not isotropic and dual")
        rules: Dict[Label, Rule] = {}
        for k, a in enumerate(self.creators):
            rules[a] = (k, {})
        for b in self.annihilators:
            rules[b] = (None, {k: 2 * self.form(b, a) for k, a in enumerate(self.creators) if self.form(b, a)})
        return SpinModule(self.creators, rules, slot_weights=slot_weights, base_weight=base_weight)


def p_space(lie: LieAlgebra, sub: RootData) -> PolarizedSpace:
    """p = orthogonal complement of h, polarized by the positive p-roots."""
    idx = lie.complement_indices(sub)
    rs = lie.rs
    creators = tuple(k for k in idx if rs.is_positive_root(lie.weights[k]))
    annihilators = tuple(lie.index(tuple(-x for x in lie.weights[k])) for k in creators)
    return PolarizedSpace(lie.form_entry, creators, annihilators)


def finite_spin_module(lie: LieAlgebra, sub: RootData) -> SpinModule:
    sp = p_space(lie, sub)
    slot_w = [lie.weights[a] for a in sp.creators]
    base = lie.rs.zero
    for w in slot_w:
        base = w_sub(base, w_scale(w, Fraction(1, 2)))
    return sp.module(slot_w, base)


def chevalley_module(lie: LieAlgebra) -> SpinModule:
    """Cl(g) acting on Lambda(g): c(X) = eps(X) + iota(B(X, .))."""
    n = lie.dim
    rules = {a: (a, {b: lie.form_entry(a, b) for b in range(n) if lie.form_entry(a, b)}) for a in range(n)}
    return SpinModule(list(range(n)), rules, slot_weights=list(lie.weights), base_weight=lie.rs.zero)


def clifford_generator(module: SpinModule, v: Mapping[Label, Fraction]) -> SpinOperator:
    return SpinOperator(module.c_vec(v), 1)


def _project(v: Vector, space: Iterable[int]) -> Vector:
    keep = set(space)
    return {k: x for k, x in v.items() if k in keep}


def ads_operator(lie: LieAlgebra, module: SpinModule, z: Mapping[int, Fraction]) -> SpinOperator:
    """-1/4 sum_i c(X_i*) c([Z, X_i]) over a basis of the module's space, bracket projected to it."""
    for k in z:
        if not isinstance(k, int) or not 0 <= k < lie.dim:
            raise MultipletkitError(f"{k!r} is not a basis element of {lie.rs.type_label}")
    space = module.labels
    dual = lie.dual_basis(space)
    acc = SparseMatrix((module.dim, module.dim))
    for a in space:
        br = _project(lie.bracket(z, {a: Fraction(1)}), space)
        if br:
            acc = acc + module.c_vec(dual[a]) @ module.c_vec(br)
    return SpinOperator(acc.scale(Fraction(-1, 4)), 0)


def cubic_sum(lie: LieAlgebra, module: SpinModule) -> SparseMatrix:
    """sum_{i,j} c(X_i*) c(X_j*) c([X_i, X_j]) with the bracket projected to the space."""
    space = module.labels
    dual = lie.dual_basis(space)
    cd = {a: module.c_vec(dual[a]) for a in space}
    acc = SparseMatrix((module.dim, module.dim))
    for a in space:
        for b in space:
            br = _project(lie.bracket({a: 1}, {b: 1}), space)
            if br:
                acc = acc + cd[a] @ cd[b] @ module.c_vec(br)
    return acc


def gamma_operator(lie: LieAlgebra, module: SpinModule) -> SpinOperator:
    return SpinOperator(cubic_sum(lie, module).scale(Fraction(-1, 24)), 1)


def adjoint_casimir_trace(lie: LieAlgebra) -> Fraction:
    """tr over g of the adjoint Casimir, computed from structure constants."""
    dual = lie.dual_basis(range(lie.dim))
    tr = Fraction(0)
    for a in range(lie.dim):
        for b in range(lie.dim):
            # coefficient of X_b in ad(X_a*) ad(X_a) X_b
            inner = lie.bracket({a: 1}, {b: 1})
            tr += lie.bracket(dual[a], inner).get(b, Fraction(0))
    return tr * Fraction(-1, 2)


def superalgebra_checks(lie: LieAlgebra, module: Optional[SpinModule] = None) -> Dict[str, object]:
    """The six relations between Clifford generators, the spin lift and the cubic element on Cl(g)."""
    module = module or chevalley_module(lie)
    n = lie.dim
    one = SparseMatrix.identity(module.dim)
    gens = [SpinOperator(module.c(a), 1) for a in range(n)]
    ads = [ads_operator(lie, module, {a: Fraction(1)}) for a in range(n)]
    gamma = gamma_operator(lie, module)
    out: Dict[str, object] = {}
    out["[ads X, Y] = [X, Y]"] = all(
        ads[a].supercommutator(gens[b]) == module.c_vec(lie.bracket({a: 1}, {b: 1})) for a in range(n) for b in range(n)
    )
    out["{X, Y} = 2<X, Y>"] = all(
        gens[a].supercommutator(gens[b]) == one.scale(2 * lie.form_entry(a, b)) for a in range(n) for b in range(n)
    )

    def ads_of(v: Vector) -> SparseMatrix:
        m = SparseMatrix((module.dim, module.dim))
        for k, x in v.items():
            m = m + ads[k].matrix.scale(x)
        return m

    out["[ads X, ads Y] = ads [X, Y]"] = all(
        ads[a].supercommutator(ads[b]) == ads_of(lie.bracket({a: 1}, {b: 1})) for a in range(n) for b in range(n)
    )
    out["[ads X, gamma] = 0"] = all(ads[a].supercommutator(gamma).is_zero() for a in range(n))
    out["{gamma, X} = ads X"] = all(gamma.supercommutator(gens[a]) == ads[a].matrix for a in range(n))
    gg = gamma.supercommutator(gamma)
    expected = -adjoint_casimir_trace(lie) / 24
    out["{gamma, gamma} = -tr(Delta_ad)/24"] = gg.scalar_value() == expected
    out["gamma_square"] = gg.scalar_value()
    out["expected"] = expected
    out["dim"] = module.dim
    return out


def rho_identity(lie: LieAlgebra) -> Tuple[Fraction, Fraction]:
    """(tr Delta_ad / 12, |rho|^2); equal for every simple g."""
    return adjoint_casimir_trace(lie) / 12, lie.rs.norm2(lie.rs.rho)

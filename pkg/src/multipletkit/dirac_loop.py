"""Energy-truncated Fock realization of the loop spin module.

Basis vectors of the loop space are pairs ``(a, n)``: the Chevalley basis
element ``a`` of the space (p, or all of g) times z^n.  The pairing is
B(X z^n, Y z^m) = B(X, Y) delta_{n+m,0}.  Creation operators are the modes
with n > 0 together with the zero modes of positive p-roots; for the full
algebra the zero modes use the Chevalley identification instead.  States
carry energy sum(n) over occupied modes, so the vacuum has energy 0.

Quadratic and cubic elements are normal ordered on nonzero modes only:
nonzero creators move left, nonzero annihilators move right, zero modes keep
their order.  The dropped contractions cancel slice by slice, and every
operator built here is an exact compression to energy <= N.

Factors of i are absorbed: ``energy_operator`` is -i ads(d/dtheta), and the
cocycle is reported as the real number s in [ads(H z), ads(H z^-1)] = s Id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import config
from .characters import affine_spin_character, weyl_kac_character
from .clifford import SpinModule
from .errors import MultipletkitError, VerificationError
from .linalg import SparseMatrix, Vector, nullspace
from .multiplets import affine_multiplet
from .reps import highest_weight_vectors, lie_algebra
from .rootsystem import RootData, RootSystem, dual_coxeter, w_scale, w_sub
from .weyl import AffineWeight, affine_norm2, affine_rho

Mode = Tuple[int, int]


class LoopFock:
    """Spin module of L(space) truncated at energy N.

    ``sub`` selects p = complement of h; ``sub=None`` gives the spin module of
    L(g) itself with Chevalley zero modes Lambda(g).
    """

    def __init__(self, rs_g: RootSystem, sub: Optional[RootData], N: int):
        if N < 0:
            raise MultipletkitError("cutoff must be non-negative")
        self.rs = rs_g
        self.sub = sub
        self.N = int(N)
        self.lie = lie = lie_algebra(rs_g)
        self.full = sub is None
        self.space = list(range(lie.dim)) if self.full else lie.complement_indices(sub)
        self.dual = lie.dual_basis(self.space)
        if self.full:
            zero_slots = list(self.space)
            self.level = Fraction(dual_coxeter(rs_g))
        else:
            if sub.rank != rs_g.rank:
                raise MultipletkitError("rank mismatch")
            zero_slots = [a for a in self.space if rs_g.is_positive_root(lie.weights[a])]
            self.level = Fraction(dual_coxeter(rs_g)) + affine_rho(sub).h
        slots: List[Mode] = [(a, 0) for a in zero_slots]
        energies = [0] * len(slots)
        for k in range(1, self.N + 1):
            for a in self.space:
                slots.append((a, k))
                energies.append(k)
        self.slot_energy = energies
        pos = {s: i for i, s in enumerate(slots)}
        rules = {}
        B = lie.form_entry
        for a in self.space:
            for n in range(-self.N, self.N + 1):
                if n > 0:
                    rules[(a, n)] = (pos[(a, n)], {})
                elif n < 0:
                    rules[(a, n)] = (None, {pos[(b, -n)]: 2 * B(a, b) for b in self.space if B(a, b)})
                elif self.full:
                    rules[(a, 0)] = (pos[(a, 0)], {pos[(b, 0)]: B(a, b) for b in self.space if B(a, b)})
                elif (a, 0) in pos:
                    rules[(a, 0)] = (pos[(a, 0)], {})
                else:
                    rules[(a, 0)] = (None, {pos[(b, 0)]: 2 * B(a, b) for b in zero_slots if B(a, b)})
        states = self._enumerate(len(zero_slots), energies)
        slot_w = [lie.weights[a] for a, _ in slots]
        base = rs_g.zero
        if not self.full:
            for a in zero_slots:
                base = w_sub(base, w_scale(lie.weights[a], Fraction(1, 2)))
        self.module = SpinModule(slots, rules, states=states, slot_weights=slot_w, base_weight=base)
        self.energies = [sum(energies[b] for b in range(len(slots)) if s >> b & 1) for s in states]
        self.weights = self.module.weights
        self._c: Dict[Mode, SparseMatrix] = {}

    def _enumerate(self, nzero: int, energies: Sequence[int]) -> List[int]:
        modes = list(range(nzero, len(energies)))
        out: List[Tuple[int, int]] = []

        def rec(i: int, mask: int, e: int):
            if i == len(modes):
                for z in range(2 ** nzero):
                    out.append((e, mask | z))
                return
            rec(i + 1, mask, e)
            b = modes[i]
            if e + energies[b] <= self.N:
                rec(i + 1, mask | 1 << b, e + energies[b])

        rec(0, 0, 0)
        config.check("Fock states", len(out), "fock_states")
        out.sort()
        return [m for _, m in out]

    @property
    def dim(self) -> int:
        return self.module.dim

    def affine_weight(self, k: int) -> AffineWeight:
        return AffineWeight(Fraction(self.energies[k]), self.weights[k], self.level)

    def energy_counts(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for e in self.energies:
            out[e] = out.get(e, 0) + 1
        return out

    def parity(self, k: int) -> int:
        """+1 on the half containing the vacuum."""
        return 1 if self.module.degree(k) % 2 == 0 else -1

    def c(self, mode: Mode) -> SparseMatrix:
        return self.module.c(mode)

    def in_range(self, n: int) -> bool:
        return -self.N <= n <= self.N

    def nprod(self, modes: Sequence[Mode]) -> SparseMatrix:
        """Product of c(mode) normal ordered on nonzero modes."""
        keyed = [(0 if n > 0 else 1 if n == 0 else 2, i, (a, n)) for i, (a, n) in enumerate(modes)]
        srt = sorted(keyed, key=lambda t: (t[0], t[1]))
        perm = [t[1] for t in srt]
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        m = self.c(srt[0][2])
        for t in srt[1:]:
            m = m @ self.c(t[2])
        return m.scale(-1) if inv % 2 else m

    def band(self, margin: int) -> List[int]:
        return [k for k, e in enumerate(self.energies) if e <= self.N - margin]

    def projected_bracket(self, a: int, b: int) -> Vector:
        keep = set(self.space)
        return {t: v for t, v in self.lie.bracket({a: 1}, {b: 1}).items() if t in keep}


def build_fock(rs_g: RootSystem, sub: Optional[RootData], N: int) -> LoopFock:
    return LoopFock(rs_g, sub, N)


def energy_operator(fock: LoopFock) -> SparseMatrix:
    return SparseMatrix((fock.dim, fock.dim), {k: {k: e} for k, e in enumerate(fock.energies) if e})


def loop_ads(fock: LoopFock, zeta: Dict[Mode, Fraction]) -> SparseMatrix:
    """-1/4 sum over loop basis xi of c(xi*) c([zeta, xi]), normal ordered."""
    lie = fock.lie
    acc = SparseMatrix((fock.dim, fock.dim))
    for (x, k), coef in zeta.items():
        if not 0 <= x < lie.dim:
            raise MultipletkitError(f"{x} is not a basis element of {fock.rs.type_label}")
        for a in fock.space:
            br = {t: v for t, v in lie.bracket({x: 1}, {a: 1}).items() if t in set(fock.space)}
            if not br:
                continue
            for n in range(-fock.N, fock.N + 1):
                if not fock.in_range(n + k):
                    continue
                for d, dv in fock.dual[a].items():
                    for t, tv in br.items():
                        acc = acc + fock.nprod([(d, -n), (t, n + k)]).scale(coef * dv * tv)
    return acc.scale(Fraction(-1, 4))


def loop_cubic(fock: LoopFock) -> SparseMatrix:
    """sum over loop basis pairs of c(xi*) c(eta*) c([xi, eta]), normal ordered."""
    acc = SparseMatrix((fock.dim, fock.dim))
    N = fock.N
    for a in fock.space:
        for b in fock.space:
            br = fock.projected_bracket(a, b)
            if not br:
                continue
            for n in range(-N, N + 1):
                for m in range(-N, N + 1):
                    if not fock.in_range(n + m):
                        continue
                    for d, dv in fock.dual[a].items():
                        for e, ev in fock.dual[b].items():
                            for t, tv in br.items():
                                acc = acc + fock.nprod([(d, -n), (e, -m), (t, n + m)]).scale(dv * ev * tv)
    return acc


def loop_gamma(fock: LoopFock) -> SparseMatrix:
    return loop_cubic(fock).scale(Fraction(-1, 24))


def affine_dirac_trivial_operator(fock: LoopFock) -> SparseMatrix:
    """Dirac operator on the trivial representation: the cubic term alone."""
    return loop_cubic(fock).scale(Fraction(-1, 12))


def _restricted_equal(a: SparseMatrix, b: SparseMatrix, cols: Iterable[int]) -> bool:
    cols = list(cols)
    return a.restrict(range(a.shape[0]), cols) == b.restrict(range(b.shape[0]), cols)


def anticommutator_check(fock: LoopFock) -> Tuple[bool, int]:
    """{c(xi), c(eta)} = 2 B(xi, eta) on the band where both stay inside the truncation."""
    lie = fock.lie
    checked = 0
    lim = fock.N // 2
    one = SparseMatrix.identity(fock.dim)
    modes = [(a, n) for a in fock.space for n in range(-lim, lim + 1)]
    for (a, n), (b, m) in product(modes, modes):
        band = fock.band(max(abs(n), abs(m)))
        lhs = fock.c((a, n)).anticommutator(fock.c((b, m)))
        val = 2 * lie.form_entry(a, b) if n + m == 0 else Fraction(0)
        if not _restricted_equal(lhs, one.scale(val), band):
            return False, checked
        checked += 1
    return True, checked


def ads_bracket_check(fock: LoopFock, zeta: Mode) -> bool:
    """[ads zeta, c(eta)] = c([zeta, eta]) on the band, for every eta with |mode| <= N/2."""
    x, k = zeta
    A = loop_ads(fock, {zeta: Fraction(1)})
    lim = fock.N // 2
    for a in fock.space:
        for n in range(-lim, lim + 1):
            rhs = SparseMatrix((fock.dim, fock.dim))
            if fock.in_range(n + k):
                for t, v in fock.lie.bracket({x: 1}, {a: 1}).items():
                    if t in set(fock.space):
                        rhs = rhs + fock.c((t, n + k)).scale(v)
            band = fock.band(abs(k) + abs(n))
            if not _restricted_equal(A.commutator(fock.c((a, n))), rhs, band):
                return False
    return True


def h_modes(fock: LoopFock) -> List[int]:
    return fock.lie.subalgebra_indices(fock.sub)


def equivariance_check(fock: LoopFock, D: SparseMatrix) -> Tuple[bool, int]:
    """[ads(X z^k), D] = 0 for X in h and |k| <= N on the band of width |k|."""
    count = 0
    for x in h_modes(fock):
        for k in range(-fock.N, fock.N + 1):
            A = loop_ads(fock, {(x, k): Fraction(1)})
            if not _restricted_equal(A.commutator(D), SparseMatrix(D.shape), fock.band(abs(k))):
                return False, count
            count += 1
    return True, count


def lowering_operators(fock: LoopFock) -> List[SparseMatrix]:
    """Generators of the negative part of Lh: h z^-k (k >= 1) and zero-mode E_-beta."""
    lie = fock.lie
    ops = []
    for x in h_modes(fock):
        for k in range(1, fock.N + 1):
            ops.append(loop_ads(fock, {(x, -k): Fraction(1)}))
    for b in fock.sub.simple_roots:
        ops.append(loop_ads(fock, {(lie.index(tuple(-v for v in b)), 0): Fraction(1)}))
    return ops


def expected_square(fock: LoopFock, mu: AffineWeight) -> Fraction:
    """-|0 - rho_g|^2 + |mu - rho_h|^2 in the affine pairing."""
    rg = affine_rho(fock.rs)
    rh = affine_rho(fock.sub)
    return -affine_norm2(fock.rs, -rg) + affine_norm2(fock.rs, mu - rh)


@dataclass
class LoopDiracReport:
    N: int
    dim: int
    raw_kernel_dim: int
    D_is_zero: bool
    lowest: Dict[AffineWeight, int]
    kernel_plus: Dict[AffineWeight, int]
    kernel_minus: Dict[AffineWeight, int]
    blocks: List[Tuple[AffineWeight, int, Fraction, bool]] = field(default_factory=list)
    matches_multiplet: bool = False
    squares_ok: bool = False
    equivariant: bool = False
    index_matches: bool = False
    fock_weights: List[AffineWeight] = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return self.matches_multiplet and self.squares_ok and self.equivariant and self.index_matches

    def kernel_rows(self) -> List[dict]:
        rows = []
        for side, data in (("+", self.kernel_plus), ("-", self.kernel_minus)):
            for mu, m in sorted(data.items()):
                rows.append({"m": str(mu.m), "weight": [str(x) for x in mu.lam], "level": str(mu.h), "side": side, "dim": m})
        rows.sort(key=lambda r: (Fraction(r["m"]), [Fraction(x) for x in r["weight"]]))
        return rows

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "fock_dim": self.dim,
            "raw_kernel_dim": self.raw_kernel_dim,
            "D_is_zero": self.D_is_zero,
            "kernel": self.kernel_rows(),
            "blocks": [
                {"mu": mu.to_json(), "multiplicity": m, "D2": str(v), "kernel": k} for mu, m, v, k in self.blocks
            ],
            "matches_multiplet": self.matches_multiplet,
            "square_checks": "pass" if self.squares_ok else "fail",
            "equivariant": self.equivariant,
            "index_matches": self.index_matches,
            "passed": self.passed,
            "conventions": "energy = -i ads(d/dtheta), minimum 0; mode operators real; no 1/24 shift",
        }


def affine_dirac_trivial(rs_g: RootSystem, sub: RootData, N: int) -> Tuple[SparseMatrix, LoopDiracReport]:
    fock = build_fock(rs_g, sub, N)
    D = affine_dirac_trivial_operator(fock)
    if not all(fock.energies[i] == fock.energies[j] for i, j, _ in D.entries()):
        raise VerificationError("D does not preserve energy")
    raw = 0
    blocks: Dict[int, List[int]] = {}
    for k, e in enumerate(fock.energies):
        blocks.setdefault(e, []).append(k)
    for idx in blocks.values():
        raw += len(nullspace(D.restrict(idx, idx)))
    lower = lowering_operators(fock)
    aff = [fock.affine_weight(k) for k in range(fock.dim)]
    lowest = highest_weight_vectors(aff, lower)
    d2 = D @ D
    rep_blocks = []
    squares_ok = True
    for mu, vecs in sorted(lowest.items()):
        want = expected_square(fock, mu)
        ok = all(d2.apply(v) == {i: want * x for i, x in v.items() if want} for v in vecs)
        squares_ok &= ok
        rep_blocks.append((mu, len(vecs), want, want == 0))
    sides = {}
    for s in (1, -1):
        cols = [k for k in range(fock.dim) if fock.parity(k) == s]
        hw = highest_weight_vectors(aff, lower, extra=[D], columns=cols)
        sides[s] = {mu: len(v) for mu, v in hw.items()}
    zero = AffineWeight.make(0, rs_g.zero, 0)
    entries = affine_multiplet(rs_g, sub, zero, N)
    want_plus = {e.mu: 1 for e in entries if e.sign == 1}
    want_minus = {e.mu: 1 for e in entries if e.sign == -1}
    equiv, _ = equivariance_check(fock, D)
    # index: signed kernel isotypic pieces against the spin character difference
    plus, minus = affine_spin_character(rs_g, sub, N)
    index = None
    for d, s in ((sides[1], 1), (sides[-1], -1)):
        for mu, m in d.items():
            t = weyl_kac_character(sub, mu, N).scale(s * m)
            index = t if index is None else index + t
    index_ok = index is not None and index.first_difference(plus - minus, N) is None
    report = LoopDiracReport(
        N=int(N),
        dim=fock.dim,
        raw_kernel_dim=raw,
        D_is_zero=D.is_zero(),
        lowest={mu: len(v) for mu, v in lowest.items()},
        kernel_plus=sides[1],
        kernel_minus=sides[-1],
        blocks=rep_blocks,
        matches_multiplet=sides[1] == want_plus and sides[-1] == want_minus,
        squares_ok=squares_ok,
        equivariant=equiv,
        index_matches=index_ok,
        fock_weights=aff,
    )
    return D, report


def cocycle_value(fock: LoopFock, x: int, k: int = 1) -> Optional[Fraction]:
    """s with [ads(X z^k), ads(X z^-k)] = s Id on the band, X in h; None if not scalar."""
    A = loop_ads(fock, {(x, k): Fraction(1)})
    Bm = loop_ads(fock, {(x, -k): Fraction(1)})
    band = fock.band(k)
    comm = A.commutator(Bm).restrict(band, band)
    return comm.scalar_value()


def measured_level(fock: LoopFock, x: int, k: int = 1) -> Optional[Fraction]:
    """Central charge read off the cocycle: s = k * level * B(X, X)."""
    s = cocycle_value(fock, x, k)
    if s is None:
        return None
    return s / (k * fock.lie.form_entry(x, x))


@dataclass
class CasimirReport:
    N: int
    slope: Optional[Fraction]
    constant: Optional[Fraction]
    expected_slope: Fraction
    expected_constant: Fraction
    band: int

    @property
    def passed(self) -> bool:
        return self.slope == self.expected_slope and self.constant == self.expected_constant

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "slope": None if self.slope is None else str(self.slope),
            "constant": None if self.constant is None else str(self.constant),
            "expected_slope": str(self.expected_slope),
            "expected_constant": str(self.expected_constant),
            "band_states": self.band,
            "passed": self.passed,
        }


def _affine_fit(fock: LoopFock, M: SparseMatrix, cols: List[int]) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """(a, b) with M = a E + b on ``cols``, or (None, None)."""
    sub = M.restrict(range(M.shape[0]), cols)
    vals: Dict[int, Fraction] = {}
    for c, k in enumerate(cols):
        col = {i: v for i, v in ((i, sub[i, c]) for i in range(M.shape[0])) if v}
        if set(col) - {k}:
            return None, None
        v = col.get(k, Fraction(0))
        e = fock.energies[k]
        if vals.setdefault(e, v) != v:
            return None, None
    es = sorted(vals)
    if len(es) == 1:
        return Fraction(0), vals[es[0]]
    a = (vals[es[1]] - vals[es[0]]) / (es[1] - es[0])
    b = vals[es[0]] - a * es[0]
    if any(vals[e] != a * e + b for e in es):
        return None, None
    return a, b


def loop_casimir_check(rs_g: RootSystem, N: int) -> CasimirReport:
    """Casimir of Lg on its own spin module: Delta^g - sum_{n>0} r(X_i* z^n) r(X_i z^-n)."""
    fock = build_fock(rs_g, None, N)
    lie = fock.lie
    dual = fock.dual
    n = fock.dim
    ads = {}

    def r(v: Dict[int, Fraction], k: int) -> SparseMatrix:
        acc = SparseMatrix((n, n))
        for a, c in v.items():
            if (a, k) not in ads:
                ads[(a, k)] = loop_ads(fock, {(a, k): Fraction(1)})
            acc = acc + ads[(a, k)].scale(c)
        return acc

    cas = SparseMatrix((n, n))
    for a in range(lie.dim):
        cas = cas + r(dual[a], 0) @ r({a: Fraction(1)}, 0)
    cas = cas.scale(Fraction(-1, 2))
    for k in range(1, N + 1):
        for a in range(lie.dim):
            cas = cas - r(dual[a], k) @ r({a: Fraction(1)}, -k)
    cols = list(range(n))
    slope, const = _affine_fit(fock, cas, cols)
    c = Fraction(dual_coxeter(rs_g))
    lam = AffineWeight(Fraction(0), tuple(-x for x in rs_g.rho), c)
    rho = affine_rho(rs_g)
    expected_const = (affine_norm2(rs_g, lam - rho) - affine_norm2(rs_g, rho)) / 2
    return CasimirReport(int(N), slope, const, c + c, expected_const, len(cols))


def gamma_square_check(rs_g: RootSystem, N: int) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """{gamma, gamma} on the spin module of Lg as (a, b) in a E + b."""
    fock = build_fock(rs_g, None, N)
    g = loop_gamma(fock)
    gg = g @ g + g @ g
    return _affine_fit(fock, gg, list(range(fock.dim)))

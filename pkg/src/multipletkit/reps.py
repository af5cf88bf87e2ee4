"""Explicit representation matrices and the Chevalley basis of g.

Modules are built from the Cartan matrix alone.  ``highest_weight_module``
runs the lowering algorithm: a vector below the top is zero in the irreducible
quotient exactly when every raising operator kills it, so new vectors are
accepted or expressed through their images under the e_i.  ``build_irrep``
instead tensors fundamental modules together and cuts out the cyclic module
of the top vector; the two routes serve as oracles for one another.

Basis matrices of g (``LieAlgebra``) are realized inside any module by
iterated brackets of the e_i and f_i, so every module sees the same elements.
The invariant form ``B`` is the negative of the basic inner product, which is
the complex-bilinear extension of the positive form on the compact real form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import config
from .errors import MultipletkitError, VerificationError
from .linalg import SparseMatrix, Vector, independent_subset, nullspace, solve, span_basis, vec_add, vec_scale
from .rootsystem import (
    RootData,
    RootSystem,
    Weight,
    casimir_eigenvalue,
    w_add,
    w_str,
    w_sub,
    weight,
    weyl_dimension,
)


@dataclass
class RepMatrices:
    """Chevalley generator matrices on a weight basis."""

    rs: RootSystem
    lam: Weight
    e: List[SparseMatrix]
    f: List[SparseMatrix]
    weights: List[Weight]

    @property
    def dim(self) -> int:
        return len(self.weights)

    @cached_property
    def h(self) -> List[SparseMatrix]:
        n = self.dim
        return [
            SparseMatrix((n, n), {k: {k: w[i]} for k, w in enumerate(self.weights)})
            for i in range(self.rs.rank)
        ]

    def character(self) -> Dict[Weight, int]:
        out: Dict[Weight, int] = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out

    def check_relations(self) -> bool:
        """[e_i, f_j] = delta_ij h_i and e_i, f_i shift weights by the simple roots."""
        r = self.rs.rank
        for i in range(r):
            for j in range(r):
                c = self.e[i].commutator(self.f[j])
                if c != (self.h[i] if i == j else SparseMatrix(c.shape)):
                    return False
        for i in range(r):
            a = self.rs.simple_roots[i]
            for tgt, src, _ in self.e[i].entries():
                if self.weights[tgt] != w_add(self.weights[src], a):
                    return False
            for tgt, src, _ in self.f[i].entries():
                if self.weights[tgt] != w_sub(self.weights[src], a):
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "algebra": self.rs.type_label,
            "lambda": [str(x) for x in self.lam],
            "dim": self.dim,
            "weights": [[str(x) for x in w] for w in self.weights],
            "e": [m.to_json() for m in self.e],
            "f": [m.to_json() for m in self.f],
        }


def _cap(rs: RootSystem, lam: Weight) -> int:
    d = weyl_dimension(rs, lam)
    config.check(f"irrep {rs.type_label}{w_str(lam)}", d, "irrep_dim")
    return d


def _matrix(n: int, action: Mapping[int, Vector]) -> SparseMatrix:
    return SparseMatrix.from_entries((n, n), ((t, s, v) for s, vec in action.items() for t, v in vec.items()))


def highest_weight_module(rs: RootSystem, lam: Weight) -> RepMatrices:
    lam = weight(lam)
    expected = _cap(rs, lam)
    r = rs.rank
    weights: List[Weight] = [lam]
    e_act: List[Dict[int, Vector]] = [{0: {}} for _ in range(r)]
    f_act: List[Dict[int, Vector]] = [{} for _ in range(r)]
    level = [0]
    while level:
        cands: Dict[Weight, List[Tuple[int, int, Vector]]] = {}
        for u in level:
            wu = weights[u]
            for j in range(r):
                img: Vector = {}
                for i in range(r):
                    part: Vector = {}
                    for s, c in e_act[i][u].items():
                        part = vec_add(part, f_act[j][s], c)
                    if i == j and wu[i]:
                        part = vec_add(part, {u: wu[i]})
                    for k, v in part.items():
                        img[k * r + i] = v
                cands.setdefault(w_sub(wu, rs.simple_roots[j]), []).append((u, j, img))
        nxt = []
        ambient = r * (len(weights) + 1)
        for w in sorted(cands, key=lambda x: tuple(-c for c in x)):
            group = cands[w]
            keep = independent_subset([c[2] for c in group], ambient)
            new_idx = []
            for k in keep:
                u, j, img = group[k]
                idx = len(weights)
                weights.append(w)
                for i in range(r):
                    e_act[i][idx] = {key // r: v for key, v in img.items() if key % r == i}
                new_idx.append(idx)
            cols = [group[k][2] for k in keep]
            for u, j, img in group:
                x = solve(cols, img, ambient) if img else [Fraction(0)] * len(cols)
                if x is None:
                    raise VerificationError("lowering algorithm produced an inconsistent vector")
                f_act[j][u] = {new_idx[k]: c for k, c in enumerate(x) if c}
            nxt.extend(new_idx)
        for j in range(r):
            for u in level:
                f_act[j].setdefault(u, {})
        level = nxt
    n = len(weights)
    if n != expected:
        raise VerificationError(f"built {n} vectors, Weyl dimension is {expected}")
    rep = RepMatrices(rs, lam, [_matrix(n, e_act[i]) for i in range(r)], [_matrix(n, f_act[i]) for i in range(r)], weights)
    return rep


def trivial_module(rs: RootSystem) -> RepMatrices:
    z = SparseMatrix((1, 1))
    return RepMatrices(rs, rs.zero, [z] * rs.rank, [z] * rs.rank, [rs.zero])


def tensor(a: RepMatrices, b: RepMatrices) -> RepMatrices:
    ia, ib = SparseMatrix.identity(a.dim), SparseMatrix.identity(b.dim)
    weights = [w_add(x, y) for x in a.weights for y in b.weights]
    e = [a.e[i].kron(ib) + ia.kron(b.e[i]) for i in range(a.rs.rank)]
    f = [a.f[i].kron(ib) + ia.kron(b.f[i]) for i in range(a.rs.rank)]
    return RepMatrices(a.rs, w_add(a.lam, b.lam), e, f, weights)


def _coords(basis: List[Vector], pivots: List[int], x: Vector) -> Vector:
    out = {k: x[p] for k, p in enumerate(pivots) if x.get(p)}
    check: Vector = {}
    for k, c in out.items():
        check = vec_add(check, basis[k], c)
    if check != x:
        raise VerificationError("vector left the cyclic module")
    return out


def cyclic_submodule(rep: RepMatrices, top: Vector, lam: Weight) -> RepMatrices:
    """Submodule generated by a highest-weight vector of weight ``lam``."""
    rs = rep.rs
    r = rs.rank
    for i in range(r):
        if rep.e[i].apply(top):
            raise MultipletkitError("seed vector is not a highest-weight vector")
    spaces: Dict[Weight, List[Vector]] = {lam: [top]}
    order = [lam]
    level = [lam]
    while level:
        nxt: Dict[Weight, List[Vector]] = {}
        for w in level:
            for v in spaces[w]:
                for j in range(r):
                    img = rep.f[j].apply(v)
                    if img:
                        nxt.setdefault(w_sub(w, rs.simple_roots[j]), []).append(img)
        level = []
        for w in sorted(nxt, key=lambda x: tuple(-c for c in x)):
            spaces[w] = span_basis(nxt[w], rep.dim)
            order.append(w)
            level.append(w)
    basis: List[Vector] = []
    offset: Dict[Weight, int] = {}
    pivots: Dict[Weight, List[int]] = {}
    weights: List[Weight] = []
    for w in order:
        offset[w] = len(basis)
        vecs = spaces[w]
        pivots[w] = [min(v) for v in vecs] if w != lam else [max(top, key=lambda k: abs(top[k]))]
        basis.extend(vecs)
        weights.extend([w] * len(vecs))
    # the seed is kept as given rather than reduced, so it gets its own pivot
    n = len(basis)

    def express(x: Vector, w: Weight) -> Vector:
        if not x:
            return {}
        if w not in spaces:
            raise VerificationError("vector left the cyclic module")
        if w == lam:
            p = pivots[w][0]
            c = x.get(p, Fraction(0)) / top[p]
            if vec_scale(top, c) != x:
                raise VerificationError("vector left the cyclic module")
            return {offset[w]: c} if c else {}
        loc = _coords(spaces[w], pivots[w], x)
        return {offset[w] + k: c for k, c in loc.items()}

    e_act = [dict() for _ in range(r)]
    f_act = [dict() for _ in range(r)]
    for k, (v, w) in enumerate(zip(basis, weights)):
        for i in range(r):
            a = rs.simple_roots[i]
            e_act[i][k] = express(rep.e[i].apply(v), w_add(w, a))
            f_act[i][k] = express(rep.f[i].apply(v), w_sub(w, a))
    return RepMatrices(rs, lam, [_matrix(n, e_act[i]) for i in range(r)], [_matrix(n, f_act[i]) for i in range(r)], weights)


def _top_index(rep: RepMatrices) -> int:
    return next(k for k, w in enumerate(rep.weights) if w == rep.lam)


def build_irrep(rs: RootSystem, lam: Weight, check: bool = True) -> RepMatrices:
    """V_lambda as the top cyclic piece of a tensor product of fundamental modules."""
    lam = weight(lam)
    expected = _cap(rs, lam)
    if not any(lam):
        return trivial_module(rs)
    seeds: Dict[int, RepMatrices] = {}
    cur: Optional[RepMatrices] = None
    for i, k in enumerate(lam):
        for _ in range(int(k)):
            if i not in seeds:
                om = tuple(Fraction(int(j == i)) for j in range(rs.rank))
                seeds[i] = highest_weight_module(rs, om)
            if cur is None:
                cur = seeds[i]
                continue
            prod = tensor(cur, seeds[i])
            top = {_top_index(cur) * seeds[i].dim + _top_index(seeds[i]): Fraction(1)}
            cur = cyclic_submodule(prod, top, prod.lam)
    assert cur is not None and cur.lam == lam
    if cur.dim != expected:
        raise VerificationError(f"cyclic module has dimension {cur.dim}, expected {expected}")
    if check:
        lie = lie_algebra(rs)
        cas = lie.casimir(cur)
        if cas.scalar_value() != casimir_eigenvalue(rs, lam):
            raise VerificationError("Casimir is not the expected scalar", (w_str(lam), cas.scalar_value()))
    return cur


def adjoint_module(rs: RootSystem) -> RepMatrices:
    """The adjoint action on the Chevalley basis, from structure constants."""
    lie = lie_algebra(rs)
    n = lie.dim
    e, f = [], []
    for i in range(rs.rank):
        for src, out in ((lie.simple_e[i], e), (lie.simple_f[i], f)):
            out.append(SparseMatrix.from_entries((n, n), ((t, s, v) for s in range(n) for t, v in lie.bracket({src: 1}, {s: 1}).items())))
    return RepMatrices(rs, rs.highest_root, e, f, list(lie.weights))


class LieAlgebra:
    """Chevalley basis of a simple g: positive root vectors, h_1..h_r, negative root vectors.

    Root vectors are nested brackets of e_i (resp. f_i) along a fixed chain of
    simple roots; the chain is recorded so the same elements can be realized
    in any module.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        r = rs.rank
        pos = rs.positive_roots
        self.weights: List[Weight] = list(pos) + [rs.zero] * r + [tuple(-x for x in a) for a in pos]
        self.dim = len(self.weights)
        self.cartan_index = list(range(len(pos), len(pos) + r))
        self._root_pos = {a: k for k, a in enumerate(pos)}
        self.chain: List[Tuple[int, int]] = []  # (simple index, previous root index) or (i, -1)
        for a in pos:
            c = rs.simple_expansion(a)
            if sum(c) == 1:
                self.chain.append((c.index(1), -1))
                continue
            for i in range(r):
                prev = w_sub(a, rs.simple_roots[i])
                if prev in self._root_pos:
                    self.chain.append((i, self._root_pos[prev]))
                    break
        seed = min(
            (tuple(Fraction(int(j == i)) for j in range(r)) for i in range(r)),
            key=lambda om: weyl_dimension(rs, om),
        )
        self.seed = highest_weight_module(rs, seed)
        self._mats = self.realize(self.seed)
        self._structure()

    def index(self, root: Weight) -> int:
        root = tuple(root)
        if root in self._root_pos:
            return self._root_pos[root]
        neg = tuple(-x for x in root)
        if neg in self._root_pos:
            return len(self.rs.positive_roots) + self.rs.rank + self._root_pos[neg]
        raise MultipletkitError(f"{w_str(root)} is not a root of {self.rs.type_label}")

    @property
    def simple_e(self) -> List[int]:
        return [self.index(a) for a in self.rs.simple_roots]

    @property
    def simple_f(self) -> List[int]:
        return [self.index(tuple(-x for x in a)) for a in self.rs.simple_roots]

    def realize(self, rep: RepMatrices) -> List[SparseMatrix]:
        """Matrices of every basis element in ``rep``."""
        npos = len(self.rs.positive_roots)
        ups: List[SparseMatrix] = []
        downs: List[SparseMatrix] = []
        for i, prev in self.chain:
            if prev < 0:
                ups.append(rep.e[i])
                downs.append(rep.f[i])
            else:
                ups.append(rep.e[i].commutator(ups[prev]))
                downs.append(rep.f[i].commutator(downs[prev]))
        assert len(ups) == npos
        return ups + list(rep.h) + downs

    def _structure(self) -> None:
        mats = self._mats
        n = self.dim
        r = self.rs.rank
        probe = []
        for m in mats:
            if m.is_zero():
                raise VerificationError("seed module is not faithful")
            i, j, v = next(m.entries())
            probe.append((i, j, v))
        self._bracket: Dict[Tuple[int, int], Vector] = {}
        cart = [{k: mats[c][k, k] for k in range(mats[c].shape[0]) if mats[c][k, k]} for c in self.cartan_index]
        for a in range(n):
            for b in range(a + 1, n):
                m = mats[a].commutator(mats[b])
                if m.is_zero():
                    continue
                w = w_add(self.weights[a], self.weights[b])
                if not any(w):
                    x = solve(cart, {k: m[k, k] for k in range(m.shape[0]) if m[k, k]}, m.shape[0])
                    if x is None or not m.is_diagonal():
                        raise VerificationError("bracket of opposite root vectors left the Cartan subalgebra")
                    vec = {self.cartan_index[i]: c for i, c in enumerate(x) if c}
                else:
                    t = self.index(w)
                    i, j, v = probe[t]
                    c = m[i, j] / v
                    if m != mats[t].scale(c):
                        raise VerificationError("bracket is not proportional to a root vector")
                    vec = {t: c}
                self._bracket[(a, b)] = vec
                self._bracket[(b, a)] = vec_scale(vec, -1)
        # invariant form: -(basic inner product), fixed on h by the coroot Gram
        rs = self.rs
        sr = rs.simple_roots
        hh = [[-4 * rs.pair(a, b) / (rs.norm2(a) * rs.norm2(b)) for b in sr] for a in sr]
        self._form: Dict[Tuple[int, int], Fraction] = {}
        for i in range(r):
            for j in range(r):
                if hh[i][j]:
                    self._form[(self.cartan_index[i], self.cartan_index[j])] = Fraction(hh[i][j])
        npos = len(rs.positive_roots)
        for k, a in enumerate(rs.positive_roots):
            up, down = k, npos + r + k
            hvec = self._bracket[(up, down)]
            # B([x,y],h) = B(x,[y,h]) = a(h) B(x,y) for h = h_j with a(h_j) != 0
            j = next(j for j in range(r) if a[j])
            lhs = sum((c * self._form.get((t, self.cartan_index[j]), 0) for t, c in hvec.items()), Fraction(0))
            val = lhs / a[j]
            self._form[(up, down)] = val
            self._form[(down, up)] = val

    def bracket(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        for a, x in u.items():
            for b, y in v.items():
                t = self._bracket.get((a, b))
                if t:
                    out = vec_add(out, t, x * y)
        return out

    def form(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> Fraction:
        s = Fraction(0)
        for a, x in u.items():
            for b, y in v.items():
                t = self._form.get((a, b))
                if t:
                    s += x * y * t
        return s

    def form_entry(self, a: int, b: int) -> Fraction:
        return self._form.get((a, b), Fraction(0))

    def dual_basis(self, indices: Sequence[int]) -> Dict[int, Vector]:
        """X_a* inside span(indices) with B(X_a*, X_b) = delta_ab."""
        idx = list(indices)
        pos = {a: k for k, a in enumerate(idx)}
        out: Dict[int, Vector] = {}
        gram = [{pos[b]: self._form[(a, b)] for b in idx if (a, b) in self._form} for a in idx]
        for a in idx:
            target = {pos[a]: Fraction(1)}
            x = solve(gram, target, len(idx))
            if x is None:
                raise MultipletkitError("form is degenerate on the chosen subspace")
            out[a] = {idx[k]: c for k, c in enumerate(x) if c}
        return out

    def realize_vector(self, mats: Sequence[SparseMatrix], v: Mapping[int, Fraction]) -> SparseMatrix:
        out = None
        for a, c in v.items():
            t = mats[a].scale(c)
            out = t if out is None else out + t
        return out if out is not None else SparseMatrix(mats[0].shape)

    def casimir(self, rep: RepMatrices) -> SparseMatrix:
        """-1/2 sum r(X_a*) r(X_a); the positive-normalized quadratic Casimir."""
        mats = self.realize(rep)
        dual = self.dual_basis(range(self.dim))
        acc = SparseMatrix((rep.dim, rep.dim))
        for a in range(self.dim):
            acc = acc + self.realize_vector(mats, dual[a]) @ mats[a]
        return acc.scale(Fraction(-1, 2))

    def jacobi_holds(self) -> bool:
        n = self.dim
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    s = vec_add(
                        vec_add(self.bracket({a: 1}, self.bracket({b: 1}, {c: 1})), self.bracket({b: 1}, self.bracket({c: 1}, {a: 1}))),
                        self.bracket({c: 1}, self.bracket({a: 1}, {b: 1})),
                    )
                    if s:
                        return False
        return True

    def form_is_invariant(self) -> bool:
        n = self.dim
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.form(self.bracket({a: 1}, {b: 1}), {c: 1}) != -self.form({b: 1}, self.bracket({a: 1}, {c: 1})):
                        return False
        return True

    # subalgebra bookkeeping ---------------------------------------------
    def subalgebra_indices(self, sub: RootData) -> List[int]:
        return [k for k, w in enumerate(self.weights) if not any(w) or sub.contains_root(w)]

    def complement_indices(self, sub: RootData) -> List[int]:
        return [k for k, w in enumerate(self.weights) if any(w) and not sub.contains_root(w)]

    def coroot_vector(self, beta: Weight) -> Vector:
        """h_beta in the span of h_1..h_r, so that beta(h_beta) = 2."""
        rs = self.rs
        nb = rs.norm2(beta)
        c = rs.simple_expansion(beta)
        return {
            self.cartan_index[i]: c[i] * rs.norm2(rs.simple_roots[i]) / nb
            for i in range(rs.rank)
            if c[i]
        }

    def sl2_triple(self, beta: Weight) -> Tuple[Vector, Vector, Vector]:
        """(e, f, h) with [e, f] = h and beta(h) = 2."""
        up = self.index(beta)
        down = self.index(tuple(-x for x in beta))
        h = self.coroot_vector(beta)
        br = self.bracket({up: 1}, {down: 1})
        k = next(iter(h))
        scale = h[k] / br[k]
        if vec_scale(br, scale) != h:
            raise VerificationError("[E_beta, E_-beta] is not proportional to the coroot")
        return {up: Fraction(1)}, {down: scale}, h


_LIE_CACHE: Dict[str, LieAlgebra] = {}


def lie_algebra(rs: RootSystem) -> LieAlgebra:
    if rs.type_label not in _LIE_CACHE:
        _LIE_CACHE[rs.type_label] = LieAlgebra(rs)
    return _LIE_CACHE[rs.type_label]


def _weight_blocks(weights: Sequence[Weight]) -> Dict[Weight, List[int]]:
    out: Dict[Weight, List[int]] = {}
    for k, w in enumerate(weights):
        out.setdefault(tuple(w) if isinstance(w, list) else w, []).append(k)
    return out


def cartan_weights(cartan: Sequence[SparseMatrix]) -> Tuple[List[Weight], Optional[SparseMatrix]]:
    """Weights of a basis on which the Cartan operators are diagonal.

    If they are not diagonal, return weights of a new eigenbasis together with
    the change-of-basis matrix (columns are eigenvectors).
    """
    n = cartan[0].shape[0]
    if all(m.is_diagonal() for m in cartan):
        return [tuple(m[k, k] for m in cartan) for k in range(n)], None
    import sympy

    spaces: List[Tuple[Weight, List[Vector]]] = [((), [{k: Fraction(1)} for k in range(n)])]
    for m in cartan:
        nxt = []
        for w, vecs in spaces:
            # restrict m to span(vecs) and split by eigenvalue
            k = len(vecs)
            cols = [m.apply(v) for v in vecs]
            loc = []
            for c in cols:
                x = solve(vecs, c, n)
                if x is None:
                    raise MultipletkitError("Cartan operators do not commute")
                loc.append(x)
            mat = sympy.Matrix(k, k, lambda i, j: sympy.Rational(loc[j][i].numerator, loc[j][i].denominator))
            for ev in sorted(mat.eigenvals(), key=lambda z: sympy.Rational(z)):
                if not ev.is_rational:
                    raise MultipletkitError("Cartan eigenvalue is not rational")
                evf = Fraction(int(ev.p), int(ev.q))
                shifted = SparseMatrix.from_dense([[loc[j][i] - (evf if i == j else 0) for j in range(k)] for i in range(k)])
                ker = nullspace(shifted)
                new = []
                for z in ker:
                    v: Vector = {}
                    for j, c in z.items():
                        v = vec_add(v, vecs[j], c)
                    new.append(v)
                nxt.append((w + (evf,), new))
        spaces = nxt
    weights: List[Weight] = []
    entries = []
    col = 0
    for w, vecs in spaces:
        for v in vecs:
            weights.append(w)
            entries.extend((i, col, c) for i, c in v.items())
            col += 1
    if col != n:
        raise MultipletkitError("Cartan operators are not diagonalizable")
    return weights, SparseMatrix.from_entries((n, n), entries)


def highest_weight_vectors(
    weights: Sequence[Weight],
    raising: Sequence[SparseMatrix],
    extra: Sequence[SparseMatrix] = (),
    columns: Optional[Sequence[int]] = None,
) -> Dict[Weight, List[Vector]]:
    """Per weight, a basis of the joint kernel of ``raising`` (and ``extra``)."""
    allowed = set(range(len(weights))) if columns is None else set(columns)
    out: Dict[Weight, List[Vector]] = {}
    ops = list(raising) + list(extra)
    for w, idx in _weight_blocks(weights).items():
        idx = [k for k in idx if k in allowed]
        if not idx:
            continue
        rows: List[Dict[int, Fraction]] = []
        for m in ops:
            sub = m.restrict(range(m.shape[0]), idx)
            rows.extend(r for _, r in sorted(sub.rows.items()))
        if not rows:
            ker = [{c: Fraction(1)} for c in range(len(idx))]
        else:
            ker = nullspace(SparseMatrix((len(rows), len(idx)), dict(enumerate(rows))))
        if ker:
            out[w] = [{idx[c]: v for c, v in z.items()} for z in ker]
    return out


def isotypic_decompose(
    sub: RootData,
    cartan: Sequence[SparseMatrix],
    raising: Sequence[SparseMatrix],
) -> Dict[Weight, int]:
    """Multiplicity of each irreducible U_mu, read from highest-weight vectors.

    ``cartan`` are the operators of h_1..h_r of the ambient g (the common
    Cartan subalgebra); ``raising`` are the operators of the simple root
    vectors of ``sub``.
    """
    weights, change = cartan_weights(cartan)
    if change is not None:
        inv = _inverse_matrix(change)
        raising = [inv @ m @ change for m in raising]
    hw = highest_weight_vectors(weights, raising)
    out = {w: len(v) for w, v in hw.items()}
    total = sum(m * weyl_dimension(sub, w) for w, m in out.items())
    if total != len(weights):
        raise VerificationError(
            f"isotypic pieces account for {total} of {len(weights)} dimensions; the operators do not define an h-module"
        )
    return dict(sorted(out.items(), reverse=True))


def _inverse_matrix(m: SparseMatrix) -> SparseMatrix:
    n = m.shape[0]
    cols = [{i: v for i, v in ((i, m[i, j]) for i in range(n)) if v} for j in range(n)]
    out = []
    for i in range(n):
        x = solve(cols, {i: Fraction(1)}, n)
        if x is None:
            raise MultipletkitError("change of basis is singular")
        out.append(x)
    return SparseMatrix.from_entries((n, n), ((j, i, v) for i, x in enumerate(out) for j, v in enumerate(x) if v))


def sub_raising(lie: LieAlgebra, sub: RootData, mats: Sequence[SparseMatrix]) -> List[SparseMatrix]:
    return [mats[lie.index(b)] for b in sub.simple_roots]

"""Sparse matrices over the rationals.

Rows are stored as ``{row: {col: Fraction}}`` with zeros never stored, so
equality is structural.  Elimination is delegated to sympy's ``DomainMatrix``
over ``QQ``, which runs fraction-free sparse Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = Dict[int, Fraction]


def frac_str(x) -> str:
    """Render a rational as ``p`` or ``p/q``."""
    return str(Fraction(x))


def parse_frac(s) -> Fraction:
    return Fraction(s)


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class SparseMatrix:
    """Immutable-by-convention sparse rational matrix."""

    __slots__ = ("rows", "shape")

    def __init__(self, shape: Tuple[int, int], rows: Optional[Mapping[int, Mapping[int, Fraction]]] = None):
        self.shape = (int(shape[0]), int(shape[1]))
        clean: Dict[int, Dict[int, Fraction]] = {}
        if rows:
            for i, r in rows.items():
                rr = {j: Fraction(v) for j, v in r.items() if v != 0}
                if rr:
                    clean[i] = rr
        self.rows = clean

    # construction -------------------------------------------------------
    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None) -> "SparseMatrix":
        return cls((n, n if m is None else m))

    @classmethod
    def identity(cls, n: int, scale=1) -> "SparseMatrix":
        s = Fraction(scale)
        if s == 0:
            return cls((n, n))
        return cls((n, n), {i: {i: s} for i in range(n)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "SparseMatrix":
        n = len(data)
        m = len(data[0]) if n else 0
        return cls((n, m), {i: {j: v for j, v in enumerate(row)} for i, row in enumerate(data)})

    @classmethod
    def from_entries(cls, shape, entries: Iterable[Tuple[int, int, Fraction]]) -> "SparseMatrix":
        rows: Dict[int, Dict[int, Fraction]] = {}
        for i, j, v in entries:
            r = rows.setdefault(i, {})
            r[j] = r.get(j, 0) + Fraction(v)
        return cls(shape, rows)

    # access -------------------------------------------------------------
    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows.get(i, {}).get(j, Fraction(0))

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        for i in sorted(self.rows):
            r = self.rows[i]
            for j in sorted(r):
                yield i, j, r[j]

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.shape[1] for _ in range(self.shape[0])]
        for i, j, v in self.entries():
            out[i][j] = v
        return out

    def diagonal(self) -> List[Fraction]:
        return [self[i, i] for i in range(min(self.shape))]

    def is_diagonal(self) -> bool:
        return all(set(r) <= {i} for i, r in self.rows.items())

    def scalar_value(self) -> Optional[Fraction]:
        """Return c if the matrix equals c*Id, else None."""
        n = self.shape[0]
        if self.shape[0] != self.shape[1]:
            return None
        if not self.rows:
            return Fraction(0)
        if not self.is_diagonal() or len(self.rows) != n:
            return None
        vals = {r[i] for i, r in self.rows.items()}
        return vals.pop() if len(vals) == 1 else None

    # arithmetic ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(self.entries())))

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def _combine(self, other: "SparseMatrix", sign: int) -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                tgt[j] = tgt.get(j, 0) + sign * v
        return SparseMatrix(self.shape, rows)

    def scale(self, c) -> "SparseMatrix":
        c = Fraction(c)
        if c == 0:
            return SparseMatrix(self.shape)
        return SparseMatrix(self.shape, {i: {j: c * v for j, v in r.items()} for i, r in self.rows.items()})

    def __mul__(self, c) -> "SparseMatrix":
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        orow = other.rows
        out: Dict[int, Dict[int, Fraction]] = {}
        for i, r in self.rows.items():
            acc: Dict[int, Fraction] = {}
            for k, a in r.items():
                rk = orow.get(k)
                if not rk:
                    continue
                for j, b in rk.items():
                    acc[j] = acc.get(j, 0) + a * b
            out[i] = acc
        return SparseMatrix((self.shape[0], other.shape[1]), out)

    def apply(self, v: Mapping[int, Fraction]) -> Vector:
        """Matrix times column vector (both sparse)."""
        out: Vector = {}
        for i, r in self.rows.items():
            s = Fraction(0)
            for j, a in r.items():
                x = v.get(j)
                if x:
                    s += a * x
            if s:
                out[i] = s
        return out

    def transpose(self) -> "SparseMatrix":
        rows: Dict[int, Dict[int, Fraction]] = {}
        for i, r in self.rows.items():
            for j, v in r.items():
                rows.setdefault(j, {})[i] = v
        return SparseMatrix((self.shape[1], self.shape[0]), rows)

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self @ other - other @ self

    def anticommutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self @ other + other @ self

    def restrict(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        cpos = {c: k for k, c in enumerate(cols)}
        out: Dict[int, Dict[int, Fraction]] = {}
        for a, i in enumerate(rows):
            r = self.rows.get(i)
            if not r:
                continue
            out[a] = {cpos[j]: v for j, v in r.items() if j in cpos}
        return SparseMatrix((len(rows), len(cols)), out)

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        n2, m2 = other.shape
        rows: Dict[int, Dict[int, Fraction]] = {}
        for i, r in self.rows.items():
            for k, r2 in other.rows.items():
                tgt = rows.setdefault(i * n2 + k, {})
                for j, a in r.items():
                    for l, b in r2.items():
                        tgt[j * m2 + l] = a * b
        return SparseMatrix((self.shape[0] * n2, self.shape[1] * m2), rows)

    def to_triples(self) -> List[List]:
        return [[i, j, frac_str(v)] for i, j, v in self.entries()]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "entries": self.to_triples()}

    @classmethod
    def from_json(cls, data: Mapping) -> "SparseMatrix":
        return cls.from_entries(tuple(data["shape"]), ((i, j, Fraction(v)) for i, j, v in data["entries"]))

    def __repr__(self) -> str:
        return f"SparseMatrix(shape={self.shape}, nnz={self.nnz})"


def _domain(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> DomainMatrix:
    sdm = {i: {j: _to_qq(v) for j, v in r.items() if v} for i, r in enumerate(rows)}
    sdm = {i: r for i, r in sdm.items() if r}
    return DomainMatrix(sdm, (len(rows), ncols), QQ)


def nullspace(mat: SparseMatrix) -> List[Vector]:
    """Basis of the right kernel, as sparse vectors."""
    n, m = mat.shape
    if m == 0:
        return []
    if not mat.rows:
        return [{j: Fraction(1)} for j in range(m)]
    dm = _domain([mat.rows.get(i, {}) for i in range(n)], m)
    basis = dm.nullspace().to_sdm()
    out = []
    for _, row in sorted(basis.items()):
        out.append({j: _from_qq(v) for j, v in row.items() if v})
    return out


def rank(vectors: Sequence[Mapping[int, Fraction]], dim: int) -> int:
    if not vectors:
        return 0
    return _domain(vectors, dim).rank()


def independent_subset(vectors: Sequence[Mapping[int, Fraction]], dim: int) -> List[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    if not vectors:
        return []
    dm = _domain(vectors, dim).transpose()
    _, pivots = dm.rref()
    return list(pivots)


def solve(columns: Sequence[Mapping[int, Fraction]], target: Mapping[int, Fraction], dim: int) -> Optional[List[Fraction]]:
    """Coefficients x with sum x_k columns[k] == target, or None."""
    k = len(columns)
    rows: List[Dict[int, Fraction]] = [dict() for _ in range(dim)]
    for c, col in enumerate(columns):
        for i, v in col.items():
            rows[i][c] = v
    for i, v in target.items():
        rows[i][k] = v
    dm = _domain(rows, k + 1)
    red, pivots = dm.rref()
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    sdm = red.to_sdm()
    for r, p in enumerate(pivots):
        x[p] = _from_qq(sdm.get(r, {}).get(k, QQ(0)))
    return x


def span_basis(vectors: Sequence[Mapping[int, Fraction]], dim: int) -> List[Vector]:
    """Reduced row-echelon basis of the span."""
    if not vectors:
        return []
    red, pivots = _domain(vectors, dim).rref()
    sdm = red.to_sdm()
    return [{j: _from_qq(v) for j, v in sdm[r].items() if v} for r in range(len(pivots))]


def vec_add(a: Mapping[int, Fraction], b: Mapping[int, Fraction], cb=1) -> Vector:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + cb * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a: Mapping[int, Fraction], c) -> Vector:
    c = Fraction(c)
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}

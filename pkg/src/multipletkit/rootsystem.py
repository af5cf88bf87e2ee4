"""Root data for simple Lie algebras and their equal-rank reductive subalgebras.

Weights are tuples of ``Fraction`` in the fundamental-weight basis of the
ambient simple algebra.  The invariant form is the basic inner product, scaled
so that the highest root has squared length 2.  Subalgebras are described by
closed root subsystems living in the same coordinates, so that g and h weights
can be compared directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import sympy

from .errors import MultipletkitError

Weight = Tuple[Fraction, ...]
Matrix = Tuple[Tuple[Fraction, ...], ...]

_RANK_MIN = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


def weight(coords: Iterable) -> Weight:
    return tuple(Fraction(c) for c in coords)


def w_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def w_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def w_scale(a: Weight, c) -> Weight:
    c = Fraction(c)
    return tuple(c * x for x in a)


def w_neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def w_str(a: Weight) -> str:
    return "(" + ",".join(str(x) for x in a) + ")"


def mat_apply(m: Matrix, v: Weight) -> Weight:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)) for i in range(n)
    )


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_det(m: Matrix) -> Fraction:
    if not m:
        return Fraction(1)
    d = sympy.Matrix(m).det()
    return Fraction(int(d.p), int(d.q))


def cartan_matrix(family: str, rank: int) -> List[List[int]]:
    """Cartan matrix with ``A[i][j] = alpha_i(H_j)`` in Bourbaki numbering."""
    if family in _RANK_MIN:
        if rank < _RANK_MIN[family]:
            raise MultipletkitError(f"rank {rank} out of range for type {family}")
    elif (family, rank) not in _EXCEPTIONAL:
        if family in "EFG":
            raise MultipletkitError(f"rank {rank} out of range for type {family}")
        raise MultipletkitError(f"unknown type label {family!r}")
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif family == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif family == "G":
        link(0, 1, -1, -3)
    return a


def parse_type_label(label: str) -> Tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", label)
    if not m:
        raise MultipletkitError(f"unknown type label {label!r}")
    return m.group(1).upper(), int(m.group(2))


def _inverse(m: Sequence[Sequence]) -> List[List[Fraction]]:
    inv = sympy.Matrix(m).inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]


@dataclass(frozen=True)
class Coroot:
    """The coroot H_alpha of a root, as a functional on weights."""

    root: Weight
    norm_sq_H: Fraction
    gram: Matrix

    def __call__(self, lam: Weight) -> Fraction:
        return 2 * _pair(self.gram, lam, self.root) / _pair(self.gram, self.root, self.root)


def _pair(gram: Matrix, x: Weight, y: Weight) -> Fraction:
    s = Fraction(0)
    for i, xi in enumerate(x):
        if xi:
            row = gram[i]
            for j, yj in enumerate(y):
                if yj:
                    s += xi * row[j] * yj
    return s


class RootData:
    """Shared behaviour of a (possibly reductive) root system in ambient coordinates."""

    gram: Matrix
    positive_roots: List[Weight]
    simple_roots: List[Weight]

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def roots(self) -> List[Weight]:
        return list(self.positive_roots) + [w_neg(a) for a in self.positive_roots]

    @cached_property
    def rho(self) -> Weight:
        acc = tuple(Fraction(0) for _ in range(self.rank))
        for a in self.positive_roots:
            acc = w_add(acc, a)
        return w_scale(acc, Fraction(1, 2))

    @property
    def zero(self) -> Weight:
        return tuple(Fraction(0) for _ in range(self.rank))

    def pair(self, x: Weight, y: Weight) -> Fraction:
        return _pair(self.gram, x, y)

    def norm2(self, x: Weight) -> Fraction:
        return _pair(self.gram, x, x)

    def coroot(self, alpha: Weight) -> Coroot:
        return Coroot(tuple(alpha), 4 / self.norm2(alpha), self.gram)

    def coroot_value(self, lam: Weight, alpha: Weight) -> Fraction:
        return 2 * self.pair(lam, alpha) / self.norm2(alpha)

    def reflect(self, lam: Weight, alpha: Weight) -> Weight:
        return w_sub(lam, w_scale(alpha, self.coroot_value(lam, alpha)))

    def reflection_matrix(self, alpha: Weight) -> Matrix:
        n = self.rank
        cols = [self.reflect(tuple(Fraction(int(i == j)) for i in range(n)), alpha) for j in range(n)]
        return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

    def is_dominant(self, lam: Weight, strict: bool = False) -> bool:
        for a in self.simple_roots:
            v = self.coroot_value(lam, a)
            if v < 0 or (strict and v == 0):
                return False
        return True

    def is_integral(self, lam: Weight) -> bool:
        return all(self.coroot_value(lam, a).denominator == 1 for a in self.simple_roots)

    def dominant_conjugate(self, lam: Weight) -> Tuple[Weight, int]:
        """Dominant element of the Weyl orbit and the parity of the word used."""
        sign = 1
        lam = tuple(lam)
        while True:
            for a in self.simple_roots:
                if self.coroot_value(lam, a) < 0:
                    lam = self.reflect(lam, a)
                    sign = -sign
                    break
            else:
                return lam, sign

    def is_positive_root(self, alpha: Weight) -> bool:
        return tuple(alpha) in self._positive_set

    @cached_property
    def _positive_set(self):
        return set(self.positive_roots)

    @cached_property
    def highest_roots(self) -> List[Weight]:
        """Highest root of each simple component."""
        pos = self.positive_roots
        out = []
        for b in pos:
            if not any(self.is_positive_root(w_add(b, a)) for a in self.simple_roots):
                out.append(b)
        return out


class RootSystem(RootData):
    """Root system of a simple Lie algebra of the given type."""

    def __init__(self, type_label: str):
        family, rank = parse_type_label(type_label)
        self.family = family
        self.type_label = f"{family}{rank}"
        self.cartan = cartan_matrix(family, rank)
        a = self.cartan
        n = rank
        # symmetrize: A[i][j] d_j = A[j][i] d_i with d_i = |alpha_i|^2 / 2
        d: List[Optional[Fraction]] = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] and d[j] is None:
                    d[j] = d[i] * Fraction(a[j][i], a[i][j])
                    stack.append(j)
        ainv_t = [list(r) for r in zip(*_inverse(a))]
        gram = [[d[i] * ainv_t[i][j] for j in range(n)] for i in range(n)]
        self.simple_coeffs: List[Tuple[int, ...]] = []
        pos_coeffs = self._positive_coefficients()
        simple = [weight(a[i]) for i in range(n)]

        def to_weight(c):
            return tuple(sum((Fraction(c[i] * a[i][j]) for i in range(n)), Fraction(0)) for j in range(n))

        top = max(pos_coeffs, key=sum)
        theta = to_weight(top)
        scale = 2 / _pair(tuple(tuple(r) for r in gram), theta, theta)
        self.gram: Matrix = tuple(tuple(scale * x for x in r) for r in gram)
        pos_coeffs.sort(key=lambda c: (sum(c), c))
        self.positive_coeffs = pos_coeffs
        self.positive_roots = [to_weight(c) for c in pos_coeffs]
        self.simple_roots = simple
        self.highest_root = theta

    def _positive_coefficients(self) -> List[Tuple[int, ...]]:
        a = self.cartan
        n = len(a)
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for c in layer:
                lam_h = [sum(c[k] * a[k][i] for k in range(n)) for i in range(n)]
                for i in range(n):
                    p = 0
                    cur = list(c)
                    while True:
                        cur[i] -= 1
                        if tuple(cur) in found:
                            p += 1
                        else:
                            break
                    q = p - lam_h[i]
                    if q > 0:
                        up = list(c)
                        up[i] += 1
                        t = tuple(up)
                        if t not in found:
                            found.add(t)
                            nxt.append(t)
            layer = nxt
        return list(found)

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def simple_expansion(self, alpha: Weight) -> Tuple[Fraction, ...]:
        """Coefficients of a weight in the simple-root basis."""
        # alpha = sum c_i alpha_i, alpha_i = row i of the Cartan matrix
        ainv = self._cartan_inv
        n = self.rank
        return tuple(sum((alpha[j] * ainv[j][i] for j in range(n)), Fraction(0)) for i in range(n))

    @cached_property
    def _cartan_inv(self):
        return _inverse(self.cartan)

    def to_json(self) -> dict:
        return {
            "type_label": self.type_label,
            "cartan": self.cartan,
            "simple_roots": [[str(x) for x in a] for a in self.simple_roots],
            "positive_roots": [[str(x) for x in a] for a in self.positive_roots],
            "gram": [[str(x) for x in r] for r in self.gram],
            "rho": [str(x) for x in self.rho],
            "highest_root": [str(x) for x in self.highest_root],
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.type_label!r})"


def build_root_system(type_label: str) -> RootSystem:
    return RootSystem(type_label)


def dual_coxeter(rs: RootSystem) -> int:
    v = rs.pair(rs.rho, rs.highest_root) + 1
    assert v.denominator == 1
    return int(v)


def _require_dominant_integral(rs: RootData, lam: Weight) -> None:
    if not rs.is_integral(lam):
        raise MultipletkitError(f"weight {w_str(lam)} is not integral")
    if not rs.is_dominant(lam):
        raise MultipletkitError(f"weight {w_str(lam)} is not dominant")


def casimir_eigenvalue(rs: RootData, lam: Weight) -> Fraction:
    lam = weight(lam)
    _require_dominant_integral(rs, lam)
    return (rs.norm2(w_add(lam, rs.rho)) - rs.norm2(rs.rho)) / 2


def weyl_dimension(rs: RootData, lam: Weight) -> int:
    lam = weight(lam)
    _require_dominant_integral(rs, lam)
    lr = w_add(lam, rs.rho)
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= rs.pair(lr, a) / rs.pair(rs.rho, a)
    assert num.denominator == 1
    return int(num)


class Subsystem(RootData):
    """Equal-rank reductive subalgebra h of g given by a closed root subsystem.

    ``generators`` index into ``parent.roots``.  The subsystem is the closure
    of the generators and their negatives under addition inside the root
    system of g, i.e. the roots of the subalgebra they generate.
    """

    def __init__(self, parent: RootSystem, generators: Sequence[int] = (), label: Optional[str] = None):
        self.parent = parent
        self.gram = parent.gram
        roots = parent.roots
        for g in generators:
            if not 0 <= g < len(roots):
                raise MultipletkitError(f"root index {g} out of range for {parent.type_label}")
        gens = {roots[g] for g in generators} | {w_neg(roots[g]) for g in generators}
        all_roots = set(roots)
        closed = set(gens)
        frontier = list(closed)
        while frontier:
            new = []
            for a in frontier:
                for b in list(closed):
                    s = w_add(a, b)
                    if s in all_roots and s not in closed:
                        closed.add(s)
                        new.append(s)
            frontier = new
        self.generators = tuple(generators)
        self.positive_roots = [a for a in parent.positive_roots if a in closed]
        pos = set(self.positive_roots)
        self.simple_roots = [
            a for a in self.positive_roots if not any(w_sub(a, b) in pos for b in self.positive_roots)
        ]
        self.u1_count = parent.rank - len(self.simple_roots)
        self.label = label or self._describe()

    def _describe(self) -> str:
        if not self.positive_roots:
            return "t"
        if len(self.positive_roots) == len(self.parent.positive_roots):
            return self.parent.type_label
        parts = [f"{len(self.simple_roots)} simple roots"]
        if self.u1_count:
            parts.append(f"u1^{self.u1_count}")
        return "+".join(parts)

    @property
    def is_full(self) -> bool:
        return len(self.positive_roots) == len(self.parent.positive_roots)

    @property
    def is_torus(self) -> bool:
        return not self.positive_roots

    def contains_root(self, alpha: Weight) -> bool:
        return tuple(alpha) in self._root_set

    @cached_property
    def _root_set(self):
        return set(self.roots)

    @cached_property
    def components(self) -> List[List[Weight]]:
        """Simple roots grouped into connected components."""
        simple = self.simple_roots
        seen = set()
        comps = []
        for i in range(len(simple)):
            if i in seen:
                continue
            comp, stack = [], [i]
            seen.add(i)
            while stack:
                k = stack.pop()
                comp.append(simple[k])
                for j in range(len(simple)):
                    if j not in seen and self.pair(simple[k], simple[j]) != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(comp)
        return comps

    def dual_coxeter(self) -> Fraction:
        """Level of the h spin module inside g; needs a simple (or empty) semisimple part."""
        if self.is_torus:
            return Fraction(0)
        if len(self.components) != 1:
            raise MultipletkitError("level of a non-simple semisimple part is a vector; not supported")
        theta = self.highest_roots[0]
        return self.pair(self.rho, theta) + self.norm2(theta) / 2

    def cartan_matrix(self) -> List[List[Fraction]]:
        s = self.simple_roots
        return [[self.coroot_value(a, b) for b in s] for a in s]

    def __repr__(self) -> str:
        return f"Subsystem({self.parent.type_label} > {self.label})"


def full_subsystem(rs: RootSystem) -> Subsystem:
    return Subsystem(rs, range(len(rs.positive_roots)), label=rs.type_label)


def torus(rs: RootSystem) -> Subsystem:
    return Subsystem(rs, (), label="t")


def _parse_h_label(label: str) -> Tuple[List[Tuple[str, int]], Optional[int]]:
    parts = [p.strip() for p in re.split(r"[+x⊕]", label) if p.strip()]
    simple: List[Tuple[str, int]] = []
    u1 = None
    for p in parts:
        m = re.fullmatch(r"u\(?1\)?(?:\^(\d+))?", p, re.IGNORECASE)
        if m:
            u1 = (u1 or 0) + int(m.group(1) or 1)
            continue
        simple.append(parse_type_label(p))
    return simple, u1


def find_subsystem(rs: RootSystem, label: str) -> Subsystem:
    """Locate an equal-rank closed subsystem of the requested type.

    ``label`` is ``t``, a type label, or a ``+``-separated sum such as
    ``A1+A1`` or ``A1+u1``.  Any ``u1`` count must equal the rank deficit.
    The search is a deterministic backtrack over roots of g.
    """
    if label.strip().lower() == "t":
        return torus(rs)
    simple, u1 = _parse_h_label(label)
    blocks = []
    for fam, r in simple:
        blocks.append(cartan_matrix(fam, r))
    k = sum(len(b) for b in blocks)
    if k > rs.rank:
        raise MultipletkitError(f"{label} has rank {k} > rank of {rs.type_label}")
    if u1 is not None and u1 != rs.rank - k:
        raise MultipletkitError(f"u1 count {u1} does not make {label} equal rank in {rs.type_label}")
    if k == 0:
        return torus(rs)
    target = [[0] * k for _ in range(k)]
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                target[off + i][off + j] = b[i][j]
        off += len(b)
    expected = sum(len(RootSystem(f"{f}{r}").positive_roots) for f, r in simple)
    roots = rs.roots
    index = {r: i for i, r in enumerate(roots)}
    chosen: List[Weight] = []

    def fits(b: Weight) -> bool:
        i = len(chosen)
        for j, a in enumerate(chosen):
            if rs.coroot_value(b, a) != target[i][j] or rs.coroot_value(a, b) != target[j][i]:
                return False
        return True

    def search() -> Optional[Subsystem]:
        if len(chosen) == k:
            sub = Subsystem(rs, [index[b] for b in chosen], label=label)
            if len(sub.positive_roots) == expected and len(sub.simple_roots) == k:
                return sub
            return None
        for b in roots:
            if b in chosen or not fits(b):
                continue
            chosen.append(b)
            found = search()
            if found is not None:
                return found
            chosen.pop()
        return None

    sub = search()
    if sub is None:
        raise MultipletkitError(f"no closed subsystem of type {label} in {rs.type_label}")
    return sub


def parse_subalgebra(rs: RootSystem, spec: str) -> Subsystem:
    """Parse ``t``, a type label, ``roots=i,j,...`` or ``roots=i,j;u1=k``."""
    s = spec.strip()
    if s.lower().startswith("roots"):
        fields = dict(part.split("=", 1) for part in s.split(";"))
        idx = [int(x) for x in fields["roots"].split(",") if x.strip()]
        sub = Subsystem(rs, idx)
        if "u1" in fields and int(fields["u1"]) != sub.u1_count:
            raise MultipletkitError(f"u1 count {fields['u1']} does not match rank deficit {sub.u1_count}")
        return sub
    if s.upper() == rs.type_label:
        return full_subsystem(rs)
    return find_subsystem(rs, s)


def subsystem_to_json(sub: Subsystem) -> dict:
    return {
        "label": sub.label,
        "root_indices": [sub.parent.roots.index(a) for a in sub.simple_roots],
        "u1": sub.u1_count,
    }

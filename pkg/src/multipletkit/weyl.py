"""Finite and affine Weyl groups acting on weights and level-h affine weights.

An affine weight is a triple (m, lambda, h): energy, finite weight, level.
The pairing is <l1,l2> - m1 h2 - m2 h1.  Affine roots are affine weights of
level 0; the positive ones are (0, alpha, 0) for alpha > 0 and every
(k, alpha, 0) with k > 0.  Elements of the affine Weyl group are stored in the
canonical form (w, tau): act by w on the finite part, then translate by the
coroot-lattice vector tau (written as a weight via the invariant form).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import config
from .errors import MultipletkitError, NonRegularWeight
from .rootsystem import (
    Matrix,
    RootData,
    RootSystem,
    Subsystem,
    Weight,
    dual_coxeter,
    mat_apply,
    mat_det,
    mat_identity,
    mat_mul,
    w_add,
    w_neg,
    w_scale,
    w_str,
    w_sub,
    weight,
)


@dataclass(frozen=True, order=True)
class AffineWeight:
    m: Fraction
    lam: Weight
    h: Fraction

    @classmethod
    def make(cls, m, lam, h) -> "AffineWeight":
        return cls(Fraction(m), weight(lam), Fraction(h))

    def __add__(self, o: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.m + o.m, w_add(self.lam, o.lam), self.h + o.h)

    def __sub__(self, o: "AffineWeight") -> "AffineWeight":
        return AffineWeight(self.m - o.m, w_sub(self.lam, o.lam), self.h - o.h)

    def __neg__(self) -> "AffineWeight":
        return AffineWeight(-self.m, w_neg(self.lam), -self.h)

    def scale(self, c) -> "AffineWeight":
        c = Fraction(c)
        return AffineWeight(c * self.m, w_scale(self.lam, c), c * self.h)

    def __str__(self) -> str:
        return f"({self.m},{','.join(str(x) for x in self.lam)},{self.h})"

    def to_json(self) -> dict:
        return {"m": str(self.m), "lambda": [str(x) for x in self.lam], "h": str(self.h)}


def affine_pair(rd: RootData, x: AffineWeight, y: AffineWeight) -> Fraction:
    return rd.pair(x.lam, y.lam) - x.m * y.h - y.m * x.h


def affine_norm2(rd: RootData, x: AffineWeight) -> Fraction:
    return affine_pair(rd, x, x)


def level_of(rd: RootData) -> Fraction:
    if isinstance(rd, RootSystem):
        return Fraction(dual_coxeter(rd))
    return rd.dual_coxeter()


def affine_rho(rd: RootData) -> AffineWeight:
    """(0, rho, -c): minus the lowest weight of the spin module, at level -c."""
    return AffineWeight(Fraction(0), rd.rho, -level_of(rd))


# ---------------------------------------------------------------- finite group


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    sign: int

    def __call__(self, lam: Weight) -> Weight:
        return mat_apply(self.matrix, lam)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(mat_mul(self.matrix, other.matrix), self.sign * other.sign)

    def to_json(self) -> dict:
        return {"finite_matrix": [[str(x) for x in r] for r in self.matrix], "sign": self.sign}


def _generic_vector(rd: RootData) -> Weight:
    # rho of the ambient simple algebra has trivial stabiliser in W_g
    return rd.parent.rho if isinstance(rd, Subsystem) else rd.rho


def finite_weyl_elements(rd: RootData) -> List[WeylElement]:
    """All elements of the Weyl group, sign = det, in a canonical order."""
    v0 = _generic_vector(rd)
    gens = [rd.reflection_matrix(a) for a in rd.simple_roots]
    ident = mat_identity(rd.rank)
    seen: Dict[Weight, Matrix] = {v0: ident}
    queue = deque([ident])
    cap = config.caps().weyl_group
    while queue:
        m = queue.popleft()
        for g in gens:
            new = mat_mul(g, m)
            key = mat_apply(new, v0)
            if key not in seen:
                seen[key] = new
                if len(seen) > cap:
                    config.check("Weyl group enumeration", len(seen), "weyl_group")
                queue.append(new)
    # breadth-first insertion order is by word length, which keeps output deterministic
    return [WeylElement(m, 1 if mat_det(m) > 0 else -1) for m in seen.values()]


# ---------------------------------------------------------------- affine group


@dataclass(frozen=True)
class AffineWeylElement:
    matrix: Matrix
    translation: Weight
    sign: int

    @classmethod
    def identity(cls, rank: int) -> "AffineWeylElement":
        return cls(mat_identity(rank), tuple(Fraction(0) for _ in range(rank)), 1)

    def act(self, rd: RootData, x: AffineWeight) -> AffineWeight:
        lam = mat_apply(self.matrix, x.lam)
        tau = self.translation
        m = x.m + rd.pair(lam, tau) + x.h * rd.norm2(tau) / 2
        return AffineWeight(m, w_add(lam, w_scale(tau, x.h)), x.h)

    def compose(self, other: "AffineWeylElement") -> "AffineWeylElement":
        """self after other."""
        return AffineWeylElement(
            mat_mul(self.matrix, other.matrix),
            w_add(self.translation, mat_apply(self.matrix, other.translation)),
            self.sign * other.sign,
        )

    def inverse(self) -> "AffineWeylElement":
        import sympy

        inv = sympy.Matrix(self.matrix).inv()
        m = tuple(tuple(Fraction(int(x.p), int(x.q)) for x in inv.row(i)) for i in range(inv.rows))
        return AffineWeylElement(m, w_neg(mat_apply(m, self.translation)), self.sign)

    def translation_coroot(self, rs: RootSystem) -> List[Fraction]:
        """Coefficients of the translation in the simple-coroot basis."""
        coeffs = rs.simple_expansion(self.translation)
        return [c * rs.norm2(a) / 2 for c, a in zip(coeffs, rs.simple_roots)]

    def to_json(self, rs: Optional[RootSystem] = None) -> dict:
        out = {
            "finite_matrix": [[str(x) for x in r] for r in self.matrix],
            "translation": [str(x) for x in self.translation],
            "sign": self.sign,
        }
        if rs is not None:
            out["translation_coroot"] = [str(x) for x in self.translation_coroot(rs)]
        return out


def _check_root(rd: RootData, alpha: Weight) -> Weight:
    alpha = weight(alpha)
    if alpha not in set(rd.roots):
        raise MultipletkitError(f"{w_str(alpha)} is not a root")
    return alpha


def reflection_element(rd: RootData, k, alpha: Weight) -> AffineWeylElement:
    """The element s_{k,alpha}, reflection in the affine root (k, alpha, 0)."""
    alpha = _check_root(rd, alpha)
    tau = w_scale(alpha, 2 * Fraction(k) / rd.norm2(alpha))
    return AffineWeylElement(rd.reflection_matrix(alpha), tau, -1)


def affine_reflect(rd: RootData, k, alpha: Weight, x: AffineWeight) -> AffineWeight:
    """Reflect x through the hyperplane of the affine root (k, alpha, 0)."""
    alpha = _check_root(rd, alpha)
    a = AffineWeight(Fraction(k), alpha, Fraction(0))
    c = 2 * affine_pair(rd, x, a) / rd.norm2(alpha)
    return x - a.scale(c)


def simple_affine_roots(rd: RootData) -> List[AffineWeight]:
    zero = Fraction(0)
    out = [AffineWeight(zero, a, zero) for a in rd.simple_roots]
    for theta in rd.highest_roots:
        out.append(AffineWeight(Fraction(1), w_neg(theta), zero))
    return out


def in_fundamental_alcove(rd: RootData, x: AffineWeight, strict: bool = False) -> bool:
    """-lambda dominant and <lambda, -theta> <= h for each component's highest root."""
    if x.h < 0:
        raise MultipletkitError("negative level")
    for a in rd.simple_roots:
        v = rd.pair(x.lam, a)
        if v > 0 or (strict and v == 0):
            return False
    for theta in rd.highest_roots:
        v = -rd.pair(x.lam, theta)
        if v > x.h or (strict and v == x.h):
            return False
    return True


def in_fundamental_alcove_by_roots(rd: RootData, x: AffineWeight, strict: bool = False) -> bool:
    """Same test, directly from x . a <= 0 over positive affine roots.

    Roots (k, alpha, 0) with k >= 2 give weaker inequalities than k = 1 when
    h >= 0, so energies 0 and 1 suffice.
    """
    if x.h < 0:
        raise MultipletkitError("negative level")
    zero = Fraction(0)
    cands = [AffineWeight(zero, a, zero) for a in rd.positive_roots]
    cands += [AffineWeight(Fraction(1), a, zero) for a in rd.roots]
    for a in cands:
        v = affine_pair(rd, x, a)
        if v > 0 or (strict and v == 0):
            return False
    return True


def make_antidominant(rd: RootData, x: AffineWeight) -> Tuple[AffineWeylElement, AffineWeight, int]:
    """Unique c with c(x) in the fundamental alcove, for regular x at positive level."""
    if x.h <= 0:
        raise MultipletkitError("make_antidominant needs positive level")
    simples = simple_affine_roots(rd)
    refl = [reflection_element(rd, a.m, a.lam) for a in simples]
    cur = x
    word = []
    while True:
        for k, a in enumerate(simples):
            if affine_pair(rd, cur, a) > 0:
                cur = refl[k].act(rd, cur)
                word.append(k)
                break
        else:
            break
    for a in simples:
        if affine_pair(rd, cur, a) == 0:
            raise NonRegularWeight(str(x), str(a))
    elem = AffineWeylElement.identity(rd.rank)
    for k in word:
        elem = refl[k].compose(elem)
    return elem, cur, elem.sign


def affine_orbit(
    rd: RootData, x0: AffineWeight, cutoff
) -> List[Tuple[AffineWeylElement, AffineWeight]]:
    """Orbit points of an anti-dominant weight with energy <= cutoff.

    Walks upward from x0: reflecting in a simple affine root a with x.a < 0
    adds a positive multiple of a, which never lowers the energy, and every
    orbit point is reached by such a walk.  So pruning at the cutoff is exact.
    """
    if x0.h <= 0:
        raise MultipletkitError("affine orbit enumeration needs positive level")
    if not in_fundamental_alcove(rd, x0):
        raise MultipletkitError(f"{x0} is not anti-dominant")
    cutoff = Fraction(cutoff)
    simples = [(a, reflection_element(rd, a.m, a.lam)) for a in simple_affine_roots(rd)]
    start = AffineWeylElement.identity(rd.rank)
    seen: Dict[AffineWeight, AffineWeylElement] = {x0: start}
    queue = deque([x0])
    while queue:
        x = queue.popleft()
        e = seen[x]
        for a, s in simples:
            if affine_pair(rd, x, a) < 0:
                y = s.act(rd, x)
                if y.m <= cutoff and y not in seen:
                    seen[y] = s.compose(e)
                    config.check("affine orbit enumeration", len(seen), "weyl_group")
                    queue.append(y)
    pts = sorted(seen.items(), key=lambda kv: (kv[0].m, kv[0].lam))
    return [(e, x) for x, e in pts]


def coset_reps(
    rs_g: RootSystem,
    sub: RootData,
    affine: bool = False,
    energy_cutoff=None,
    reference: Optional[AffineWeight] = None,
) -> list:
    """Coset representatives C (finite) or the truncated affine set.

    Finite mode returns ``WeylElement`` with c(rho_g) regular dominant for h.
    Affine mode returns ``(AffineWeylElement, image of reference)`` pairs with
    the image strictly inside the fundamental alcove of h and energy at most
    the cutoff.  The default reference is -rho_g, which is interior to the
    fundamental alcove of g.
    """
    if sub.rank != rs_g.rank:
        raise MultipletkitError("rank mismatch")
    gset = set(rs_g.roots)
    if any(a not in gset for a in sub.roots):
        raise MultipletkitError("h-roots are not a subset of g-roots")
    if not affine:
        out = [w for w in finite_weyl_elements(rs_g) if sub.is_dominant(w(rs_g.rho), strict=True)]
        return out
    if energy_cutoff is None:
        raise MultipletkitError("affine coset enumeration needs an energy cutoff")
    if reference is None:
        reference = -affine_rho(rs_g)
    if not in_fundamental_alcove(rs_g, reference, strict=True):
        raise MultipletkitError("reference weight must be interior to the fundamental alcove")
    return [(e, y) for e, y in affine_orbit(rs_g, reference, energy_cutoff) if in_fundamental_alcove(sub, y, strict=True)]


def orbit_csv_rows(pts: Sequence[Tuple[AffineWeylElement, AffineWeight]]) -> List[List[str]]:
    rows = []
    for e, x in pts:
        rows.append([str(x.m)] + [str(c) for c in x.lam] + [str(x.h), str(e.sign)])
    return rows

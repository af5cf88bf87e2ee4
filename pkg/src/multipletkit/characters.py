"""Exact characters: finite weight multisets and energy-graded series.

A ``CharacterSeries`` is a formal series in the energy z at a fixed level whose
coefficients are finite characters.  ``cutoff`` is the energy through which
every coefficient is known to be complete, and ``low`` is a lower bound for
the support; products use both to decide how far the result is complete.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from . import config
from .errors import MultipletkitError, VerificationError
from .rootsystem import (
    RootData,
    RootSystem,
    Weight,
    w_add,
    w_neg,
    w_scale,
    w_str,
    w_sub,
    weight,
    weyl_dimension,
)
from .weyl import AffineWeight, affine_orbit, affine_rho, in_fundamental_alcove, level_of


class FiniteCharacter:
    """Finite formal sum of weights with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, data: Optional[Mapping[Weight, int]] = None):
        self._c: Dict[Weight, int] = {}
        if data:
            for k, v in data.items():
                if v:
                    self._c[tuple(k)] = self._c.get(tuple(k), 0) + int(v)
            self._c = {k: v for k, v in self._c.items() if v}

    @classmethod
    def monomial(cls, w: Weight, mult: int = 1) -> "FiniteCharacter":
        return cls({tuple(w): mult})

    def items(self):
        return self._c.items()

    def weights(self):
        return self._c.keys()

    def __getitem__(self, w: Weight) -> int:
        return self._c.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteCharacter):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "FiniteCharacter") -> "FiniteCharacter":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return FiniteCharacter(out)

    def __sub__(self, other: "FiniteCharacter") -> "FiniteCharacter":
        return self + other.scale(-1)

    def __neg__(self) -> "FiniteCharacter":
        return self.scale(-1)

    def scale(self, c: int) -> "FiniteCharacter":
        return FiniteCharacter({k: c * v for k, v in self._c.items()})

    def __mul__(self, other: "FiniteCharacter") -> "FiniteCharacter":
        out: Dict[Weight, int] = defaultdict(int)
        for a, x in self._c.items():
            for b, y in other._c.items():
                out[w_add(a, b)] += x * y
        return FiniteCharacter(out)

    def shift(self, w: Weight) -> "FiniteCharacter":
        return FiniteCharacter({w_add(k, w): v for k, v in self._c.items()})

    def total(self) -> int:
        return sum(self._c.values())

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def is_weyl_invariant(self, rd: RootData) -> bool:
        return all(self[rd.reflect(w, a)] == v for w, v in self._c.items() for a in rd.simple_roots)

    def sorted_items(self) -> List[Tuple[Weight, int]]:
        return sorted(self._c.items())

    def to_json(self) -> List[dict]:
        return [{"coords": [str(x) for x in w], "mult": m} for w, m in self.sorted_items()]

    def __repr__(self) -> str:
        body = ", ".join(f"{w_str(w)}:{m}" for w, m in self.sorted_items())
        return f"FiniteCharacter({{{body}}})"


# ---------------------------------------------------------------- finite


def weight_multiplicities(rd: RootData, lam: Weight) -> FiniteCharacter:
    """Freudenthal recursion over the saturated weight set of V_lambda."""
    lam = weight(lam)
    dim = weyl_dimension(rd, lam)
    config.check(f"weight multiplicities of {w_str(lam)}", dim, "multiplicities")
    pos = rd.positive_roots
    rho = rd.rho
    simple = rd.simple_roots
    # saturated set generated by simple-root strings from the highest weight
    pts = {lam}
    stack = [lam]
    while stack:
        nu = stack.pop()
        for a in simple:
            n = rd.coroot_value(nu, a)
            for k in range(1, int(n) + 1):
                mu = w_sub(nu, w_scale(a, k))
                if mu not in pts:
                    pts.add(mu)
                    stack.append(mu)
    order = sorted(pts, key=lambda nu: -rd.pair(nu, rho) if pos else 0)
    top = rd.norm2(w_add(lam, rho))
    mult: Dict[Weight, int] = {lam: 1}
    for nu in order:
        if nu == lam:
            continue
        denom = top - rd.norm2(w_add(nu, rho))
        s = Fraction(0)
        for a in pos:
            k = 1
            while True:
                up = w_add(nu, w_scale(a, k))
                m = mult.get(up)
                if m is None:
                    if up not in pts:
                        break
                    m = 0
                s += m * rd.pair(up, a)
                k += 1
        val = 2 * s / denom
        if val.denominator != 1:
            raise VerificationError(f"non-integral multiplicity at {w_str(nu)}", nu)
        if val:
            mult[nu] = int(val)
    out = FiniteCharacter(mult)
    if out.total() != dim:
        raise VerificationError("Freudenthal total disagrees with the Weyl dimension", (out.total(), dim))
    return out


def p_positive_roots(rs_g: RootSystem, sub: RootData) -> List[Weight]:
    return [a for a in rs_g.positive_roots if a not in set(sub.roots)]


def finite_spin_character(rs_g: RootSystem, sub: RootData) -> Tuple[FiniteCharacter, FiniteCharacter]:
    """Half-spin characters of S_p, p = g minus h; rho_g - rho_h lies in S+.

    Each positive p-root contributes e^{a/2} + e^{-a/2}; the number of
    minus choices fixes the half.
    """
    half = [w_scale(a, Fraction(1, 2)) for a in p_positive_roots(rs_g, sub)]
    states = {(rs_g.zero, 0): 1}
    for h in half:
        nxt: Dict[Tuple[Weight, int], int] = defaultdict(int)
        for (w, par), c in states.items():
            nxt[(w_add(w, h), par)] += c
            nxt[(w_sub(w, h), par ^ 1)] += c
        states = nxt
    plus = FiniteCharacter({w: c for (w, par), c in states.items() if par == 0})
    minus = FiniteCharacter({w: c for (w, par), c in states.items() if par == 1})
    return plus, minus


def has_half_integral_weights(rs_g: RootSystem, ch: FiniteCharacter) -> bool:
    return any(not rs_g.is_integral(w) for w in ch.weights())


# ---------------------------------------------------------------- series


class CharacterSeries:
    def __init__(self, level, cutoff, coeffs: Optional[Mapping] = None, low=None):
        self.level = Fraction(level)
        self.cutoff = Fraction(cutoff)
        c: Dict[Fraction, FiniteCharacter] = {}
        for m, ch in (coeffs or {}).items():
            m = Fraction(m)
            if m <= self.cutoff and ch:
                c[m] = ch
        self.coeffs = dict(sorted(c.items()))
        if low is None:
            low = min(self.coeffs) if self.coeffs else self.cutoff
        self.low = Fraction(low)

    @classmethod
    def monomial(cls, mu: AffineWeight, cutoff, mult: int = 1) -> "CharacterSeries":
        return cls(mu.h, cutoff, {mu.m: FiniteCharacter.monomial(mu.lam, mult)}, low=mu.m)

    def coeff(self, m) -> FiniteCharacter:
        m = Fraction(m)
        if m > self.cutoff:
            raise MultipletkitError(f"energy {m} beyond cutoff {self.cutoff}")
        return self.coeffs.get(m, FiniteCharacter())

    def energies(self) -> List[Fraction]:
        return list(self.coeffs)

    def truncate(self, cutoff) -> "CharacterSeries":
        cutoff = min(Fraction(cutoff), self.cutoff)
        return CharacterSeries(self.level, cutoff, self.coeffs, low=self.low)

    def _check_level(self, other: "CharacterSeries") -> None:
        if self.level != other.level:
            raise MultipletkitError(f"level mismatch {self.level} vs {other.level}")

    def __add__(self, other: "CharacterSeries") -> "CharacterSeries":
        self._check_level(other)
        cut = min(self.cutoff, other.cutoff)
        out = dict(self.coeffs)
        for m, ch in other.coeffs.items():
            out[m] = out.get(m, FiniteCharacter()) + ch
        return CharacterSeries(self.level, cut, out, low=min(self.low, other.low))

    def __sub__(self, other: "CharacterSeries") -> "CharacterSeries":
        return self + other.scale(-1)

    def scale(self, c: int) -> "CharacterSeries":
        return CharacterSeries(self.level, self.cutoff, {m: ch.scale(c) for m, ch in self.coeffs.items()}, self.low)

    def __mul__(self, other: "CharacterSeries") -> "CharacterSeries":
        cut = min(self.cutoff + other.low, other.cutoff + self.low)
        out: Dict[Fraction, FiniteCharacter] = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                m = ma + mb
                if m <= cut:
                    out[m] = out.get(m, FiniteCharacter()) + ca * cb
        return CharacterSeries(self.level + other.level, cut, out, low=self.low + other.low)

    def shift(self, mu: AffineWeight) -> "CharacterSeries":
        return CharacterSeries(
            self.level + mu.h,
            self.cutoff + mu.m,
            {m + mu.m: ch.shift(mu.lam) for m, ch in self.coeffs.items()},
            low=self.low + mu.m,
        )

    def shifted_to_zero(self) -> "CharacterSeries":
        return self.shift(AffineWeight(-self.low, tuple(Fraction(0) for _ in self._rank()), Fraction(0)))

    def _rank(self):
        for ch in self.coeffs.values():
            for w in ch.weights():
                return w
        return ()

    def equal_through(self, other: "CharacterSeries", upto=None) -> bool:
        return self.first_difference(other, upto) is None

    def first_difference(self, other: "CharacterSeries", upto=None):
        """(m, weight, left, right) of the lowest differing coefficient, or None."""
        lim = min(self.cutoff, other.cutoff)
        if upto is not None:
            lim = min(lim, Fraction(upto))
        if self.level != other.level and (self.coeffs or other.coeffs):
            return ("level", self.level, other.level)
        for m in sorted(set(self.coeffs) | set(other.coeffs)):
            if m > lim:
                break
            a, b = self.coeffs.get(m, FiniteCharacter()), other.coeffs.get(m, FiniteCharacter())
            if a != b:
                d = a - b
                w = min(d.weights())
                return (m, w, a[w], b[w])
        return None

    def is_nonnegative(self) -> bool:
        return all(ch.is_nonnegative() for ch in self.coeffs.values())

    def to_json(self) -> dict:
        return {
            "level": str(self.level),
            "cutoff": str(self.cutoff),
            "rows": [{"m": str(m), "weights": ch.to_json()} for m, ch in self.coeffs.items()],
        }

    def __repr__(self) -> str:
        return f"CharacterSeries(level={self.level}, cutoff={self.cutoff}, energies={len(self.coeffs)})"


def _geometric(series: CharacterSeries, k: int, alpha: Weight, cut: Fraction) -> CharacterSeries:
    """Multiply by 1/(1 - z^k e^alpha), truncated at cut: q_m = f_m + e^alpha q_{m-k}."""
    if not series.coeffs:
        return series
    out: Dict[Fraction, FiniteCharacter] = {}
    residues = {e - (e.numerator // e.denominator) for e in series.coeffs}
    for r in sorted(residues):
        cur = min(e for e in series.coeffs if (e - r).denominator == 1)
        while cur <= cut:
            val = series.coeffs.get(cur, FiniteCharacter())
            prev = out.get(cur - k)
            if prev is not None:
                val = val + prev.shift(alpha)
            if val:
                out[cur] = val
            cur += 1
    return CharacterSeries(series.level, min(series.cutoff, cut), out, low=series.low)


def _sign_orbit_series(rd: RootData, x0: AffineWeight, cutoff) -> CharacterSeries:
    c: Dict[Fraction, Dict[Weight, int]] = defaultdict(lambda: defaultdict(int))
    for e, y in affine_orbit(rd, x0, cutoff):
        c[y.m][y.lam] += e.sign
    return CharacterSeries(x0.h, cutoff, {m: FiniteCharacter(d) for m, d in c.items()}, low=x0.m)


def _affine_real_roots(rd: RootData) -> List[Weight]:
    return list(rd.roots)


def _divide_one_minus(ch: FiniteCharacter, alpha: Weight, rd: RootData) -> FiniteCharacter:
    """Exact quotient ch / (1 - e^alpha) in the group ring; raises if not divisible."""
    n2 = rd.norm2(alpha)
    lines: Dict[Weight, Dict[Fraction, int]] = defaultdict(dict)
    for w, v in ch.items():
        t = rd.pair(w, alpha) / n2
        base = w_sub(w, w_scale(alpha, t))
        lines[base][t] = v
    out: Dict[Weight, int] = {}
    for base, pts in lines.items():
        ts = sorted(pts)
        t = ts[0]
        acc = 0
        while t <= ts[-1]:
            acc = pts.get(t, 0) + acc
            if acc:
                out[w_add(base, w_scale(alpha, t))] = acc
            t += 1
        if acc != 0:
            raise VerificationError(f"character not divisible by 1 - e^{w_str(alpha)}", base)
    return FiniteCharacter(out)


def denominator_inverse_times(rd: RootData, series: CharacterSeries, cutoff) -> CharacterSeries:
    """series / (e^{-rho} prod over positive affine roots (1 - e^a)), through cutoff."""
    cut = Fraction(cutoff)
    rank = rd.rank
    zero = rd.zero
    s = series.truncate(cut)
    kmax = int(cut - s.low) if s.coeffs else 0
    for k in range(1, kmax + 1):
        for a in _affine_real_roots(rd):
            s = _geometric(s, k, a, cut)
        for _ in range(rank):
            s = _geometric(s, k, zero, cut)
    rho_shift = rd.rho
    out = {}
    for m, ch in s.coeffs.items():
        for a in rd.positive_roots:
            ch = _divide_one_minus(ch, a, rd)
        out[m] = ch.shift(rho_shift)
    return CharacterSeries(series.level + affine_rho(rd).h, cut, out, low=series.low)


def weyl_kac_character(rd: RootData, lam: AffineWeight, N) -> CharacterSeries:
    """Character of the irreducible positive-energy module with lowest weight lam.

    Works for the loop algebra of g (``RootSystem``) and of an equal-rank h
    (``Subsystem`` with simple or empty semisimple part); the Cartan modes
    contribute imaginary roots of multiplicity rank g in both cases.
    """
    N = Fraction(N)
    if lam.h < 0:
        raise MultipletkitError("negative level")
    if lam.h == 0 and any(lam.lam):
        raise MultipletkitError("level 0 requires lambda = 0")
    if not in_fundamental_alcove(rd, lam):
        raise MultipletkitError(f"{lam} is not anti-dominant")
    if N < lam.m:
        raise MultipletkitError("cutoff below the minimum energy")
    shifted = lam - affine_rho(rd)
    num = _sign_orbit_series(rd, shifted, N)
    return denominator_inverse_times(rd, num, N)


def signed_denominator_series(rd: RootData, N) -> CharacterSeries:
    """Sum over the affine Weyl group of (-1)^w e^{-w(rho)}, through energy N."""
    return _sign_orbit_series(rd, -affine_rho(rd), N)


def lt_character(rank: int, mu: AffineWeight, N) -> CharacterSeries:
    """e^mu prod_{k>0} (1 - z^k)^{-rank}: the Fock module of the loop torus."""
    N = Fraction(N)
    zero = tuple(Fraction(0) for _ in range(rank))
    s = CharacterSeries.monomial(mu, N)
    kmax = int(N - mu.m)
    for k in range(1, kmax + 1):
        for _ in range(rank):
            s = _geometric(s, k, zero, N)
    return s


def spin_lt_character(rank: int, N, level=0) -> CharacterSeries:
    """prod_{k>0} (1 - z^k)^{rank}, through energy N."""
    N = Fraction(N)
    zero = tuple(Fraction(0) for _ in range(rank))
    s = CharacterSeries(level, N, {Fraction(0): FiniteCharacter.monomial(zero)}, low=0)
    for k in range(1, int(N) + 1):
        for _ in range(rank):
            factor = CharacterSeries(0, N, {0: FiniteCharacter.monomial(zero), k: FiniteCharacter.monomial(zero, -1)}, low=0)
            s = s * factor
    return s


def affine_spin_character(rs_g: RootSystem, sub: RootData, N) -> Tuple[CharacterSeries, CharacterSeries]:
    """Half-spin characters of the Fock module over the loop complement Lp.

    Lowest-weight convention: the vacuum -rho_p (all zero-mode minus choices)
    lies in S+, and every fermion flips the half.
    """
    N = Fraction(N)
    if N < 0:
        raise MultipletkitError("cutoff < 0")
    level = level_of(rs_g) - level_of(sub)
    pos = p_positive_roots(rs_g, sub)
    states: Dict[Tuple[Fraction, Weight, int], int] = {(Fraction(0), rs_g.zero, 0): 1}
    for a in pos:
        h = w_scale(a, Fraction(1, 2))
        nxt: Dict = defaultdict(int)
        for (m, w, par), c in states.items():
            nxt[(m, w_sub(w, h), par)] += c
            nxt[(m, w_add(w, h), par ^ 1)] += c
        states = nxt
    proots = pos + [w_neg(a) for a in pos]
    for k in range(1, int(N) + 1):
        for b in proots:
            nxt = defaultdict(int, states)
            for (m, w, par), c in states.items():
                if m + k <= N:
                    nxt[(m + k, w_add(w, b), par ^ 1)] += c
            states = nxt
    halves = []
    for want in (0, 1):
        c: Dict[Fraction, Dict[Weight, int]] = defaultdict(lambda: defaultdict(int))
        for (m, w, par), v in states.items():
            if par == want:
                c[m][w] += v
        halves.append(CharacterSeries(level, N, {m: FiniteCharacter(d) for m, d in c.items()}, low=0))
    return halves[0], halves[1]

"""Multiplets of equal-rank pairs h in g, finite and affine.

Finite entries use the highest-weight convention mu = c(lambda + rho_g) - rho_h;
affine entries use the lowest-weight convention mu = c(lambda - rho_g) + rho_h.
Both identities are checked by exact character arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .characters import (
    CharacterSeries,
    FiniteCharacter,
    affine_spin_character,
    finite_spin_character,
    weight_multiplicities,
    weyl_kac_character,
)
from .errors import MultipletkitError
from .rootsystem import (
    RootData,
    RootSystem,
    Weight,
    w_add,
    w_str,
    w_sub,
    weight,
    weyl_dimension,
)
from .weyl import (
    AffineWeight,
    AffineWeylElement,
    WeylElement,
    affine_norm2,
    affine_orbit,
    affine_rho,
    coset_reps,
    in_fundamental_alcove,
)


@dataclass(frozen=True)
class MultipletEntry:
    c: Union[WeylElement, AffineWeylElement]
    sign: int
    mu: Union[Weight, AffineWeight]

    def mu_json(self):
        if isinstance(self.mu, AffineWeight):
            return self.mu.to_json()
        return [str(x) for x in self.mu]


@dataclass
class MultipletReport:
    pair: Tuple[str, str]
    lam: Union[Weight, AffineWeight]
    entries: List[MultipletEntry]
    verified: Optional[bool] = None
    max_energy: Optional[Fraction] = None
    witness: Optional[tuple] = None
    dims: List[int] = field(default_factory=list)
    affine: bool = False

    def to_json(self) -> dict:
        rows = []
        for k, e in enumerate(self.entries):
            row = {"sign": e.sign, "mu": e.mu_json()}
            if self.affine:
                row["series_ref"] = f"U{e.mu}"
            else:
                row["dim"] = self.dims[k]
            rows.append(row)
        lam = self.lam.to_json() if isinstance(self.lam, AffineWeight) else [str(x) for x in self.lam]
        out = {
            "pair": list(self.pair),
            "lambda": lam,
            "entries": rows,
            "verified": self.verified,
            "max_energy": None if self.max_energy is None else str(self.max_energy),
            "coset_set": "infinite, truncated by energy" if self.affine else "finite",
        }
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
        return out


def _label(rd: RootData) -> str:
    return rd.type_label if isinstance(rd, RootSystem) else rd.label


def _equal_rank(rs_g: RootSystem, sub: RootData) -> None:
    if sub.rank != rs_g.rank:
        raise MultipletkitError("rank mismatch")


def finite_multiplet(rs_g: RootSystem, sub: RootData, lam: Weight) -> List[MultipletEntry]:
    _equal_rank(rs_g, sub)
    lam = weight(lam)
    if not rs_g.is_integral(lam) or not rs_g.is_dominant(lam):
        raise MultipletkitError(f"{w_str(lam)} is not dominant integral for {rs_g.type_label}")
    shifted = w_add(lam, rs_g.rho)
    out = []
    for c in coset_reps(rs_g, sub):
        mu = w_sub(c(shifted), sub.rho)
        assert sub.is_dominant(mu)
        out.append(MultipletEntry(c, c.sign, mu))
    assert len({e.mu for e in out}) == len(out)
    return out


def finite_gkrs_sides(rs_g: RootSystem, sub: RootData, lam: Weight) -> Tuple[FiniteCharacter, FiniteCharacter]:
    lam = weight(lam)
    plus, minus = finite_spin_character(rs_g, sub)
    lhs = weight_multiplicities(rs_g, lam) * (plus - minus)
    rhs = FiniteCharacter()
    for e in finite_multiplet(rs_g, sub, lam):
        rhs = rhs + weight_multiplicities(sub, e.mu).scale(e.sign)
    return lhs, rhs


def verify_finite_gkrs(rs_g: RootSystem, sub: RootData, lam: Weight) -> MultipletReport:
    lam = weight(lam)
    entries = finite_multiplet(rs_g, sub, lam)
    lhs, rhs = finite_gkrs_sides(rs_g, sub, lam)
    witness = None
    if lhs != rhs:
        d = lhs - rhs
        w = min(d.weights())
        witness = (w_str(w), lhs[w], rhs[w])
    return MultipletReport(
        (rs_g.type_label, _label(sub)),
        lam,
        entries,
        verified=witness is None,
        witness=witness,
        dims=[weyl_dimension(sub, e.mu) for e in entries],
    )


def affine_multiplet(rs_g: RootSystem, sub: RootData, lam: AffineWeight, N) -> List[MultipletEntry]:
    _equal_rank(rs_g, sub)
    if not in_fundamental_alcove(rs_g, lam):
        raise MultipletkitError(f"{lam} is not anti-dominant for the loop algebra of {rs_g.type_label}")
    x = lam - affine_rho(rs_g)
    rho_h = affine_rho(sub)
    target = affine_norm2(rs_g, x)
    out = []
    for c, y in affine_orbit(rs_g, x, N):
        if in_fundamental_alcove(sub, y, strict=True):
            mu = y + rho_h
            assert affine_norm2(rs_g, mu - rho_h) == target
            out.append(MultipletEntry(c, c.sign, mu))
    return out


def affine_gkrs_sides(rs_g: RootSystem, sub: RootData, lam: AffineWeight, N) -> Tuple[CharacterSeries, CharacterSeries]:
    N = Fraction(N)
    entries = affine_multiplet(rs_g, sub, lam, N)
    if not entries:
        raise MultipletkitError("cutoff too small to contain any multiplet entry")
    plus, minus = affine_spin_character(rs_g, sub, N)
    lhs = weyl_kac_character(rs_g, lam, N) * (plus - minus)
    rhs = None
    for e in entries:
        term = weyl_kac_character(sub, e.mu, N).scale(e.sign)
        rhs = term if rhs is None else rhs + term
    return lhs.truncate(N), rhs.truncate(N)


def verify_affine_gkrs(rs_g: RootSystem, sub: RootData, lam: AffineWeight, N) -> MultipletReport:
    N = Fraction(N)
    entries = affine_multiplet(rs_g, sub, lam, N)
    lhs, rhs = affine_gkrs_sides(rs_g, sub, lam, N)
    diff = lhs.first_difference(rhs, N)
    reached = min(lhs.cutoff, rhs.cutoff)
    ok = diff is None and reached >= N
    witness = diff
    if diff is None and reached < N:
        witness = ("cutoff", reached)
    return MultipletReport(
        (rs_g.type_label, _label(sub)),
        lam,
        entries,
        verified=ok,
        max_energy=reached,
        witness=witness,
        affine=True,
    )

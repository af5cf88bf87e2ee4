"""Randomized invariant checks shared by ``selftest`` and the test suite.

Each check returns a :class:`PropertyResult` holding the number of cases run
and the first counterexample, if any.  Randomness comes from a caller-owned
``random.Random`` so runs are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .characters import CharacterSeries, FiniteCharacter
from .errors import NonRegularWeight
from .rootsystem import RootData, RootSystem, Weight, w_str, w_sub, w_scale
from .weyl import (
    AffineWeight,
    AffineWeylElement,
    affine_norm2,
    in_fundamental_alcove,
    make_antidominant,
    reflection_element,
    simple_affine_roots,
)


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    failures: int = 0
    witness: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0

    def fail(self, witness: tuple) -> None:
        self.failures += 1
        if self.witness is None:
            self.witness = witness

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        text = f"{self.name}: {self.cases - self.failures}/{self.cases} {status}"
        if self.witness is not None:
            text += " witness=(" + ", ".join(str(x) for x in self.witness) + ")"
        return text

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


def random_weight(rng: random.Random, rank: int, bound: int = 4) -> Weight:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(rank))


def random_affine_weight(rng: random.Random, rank: int, bound: int = 4) -> AffineWeight:
    m = Fraction(rng.randint(-2 * bound, 2 * bound), rng.choice([1, 2]))
    h = Fraction(rng.randint(1, 2 * bound), rng.choice([1, 1, 2]))
    return AffineWeight(m, random_weight(rng, rank, bound), h)


def random_regular_weight(rng: random.Random, rd: RootData) -> AffineWeight:
    """Weight off every affine wall; denominators of 7 make this the typical case."""
    while True:
        lam = tuple(Fraction(rng.randint(-30, 30), 7) for _ in range(rd.rank))
        x = AffineWeight(Fraction(rng.randint(-8, 8)), lam, Fraction(rng.randint(1, 4)))
        if all((rd.pair(lam, a) / x.h).denominator != 1 for a in rd.positive_roots):
            return x


def random_affine_element(rng: random.Random, rd: RootData, length: int = 6) -> AffineWeylElement:
    simples = [reflection_element(rd, a.m, a.lam) for a in simple_affine_roots(rd)]
    e = AffineWeylElement.identity(rd.rank)
    for _ in range(rng.randint(0, length)):
        e = rng.choice(simples).compose(e)
    return e


def lattice_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """s_i from the Cartan integers alone: lambda - lambda_i alpha_i."""
    return w_sub(lam, w_scale(rs.simple_roots[i], lam[i]))


def weyl_isometry(rs: RootSystem, rng: random.Random, cases: int, result: Optional[PropertyResult] = None) -> PropertyResult:
    """Weyl action preserves the form and the level.

    The finite half uses reflections built from the Cartan matrix only, so a
    Gram matrix that is not Weyl invariant is caught here.
    """
    res = result or PropertyResult("weyl isometry and level")
    for _ in range(cases):
        res.cases += 1
        lam = random_weight(rng, rs.rank)
        i = rng.randrange(rs.rank)
        img = lattice_reflection(rs, i, lam)
        if rs.norm2(img) != rs.norm2(lam):
            res.fail((rs.type_label, "s", i, w_str(lam), rs.norm2(lam), rs.norm2(img)))
            continue
        x = random_affine_weight(rng, rs.rank)
        e = random_affine_element(rng, rs)
        y = e.act(rs, x)
        if y.h != x.h:
            res.fail((rs.type_label, "level", str(x), str(y)))
        elif affine_norm2(rs, y) != affine_norm2(rs, x):
            res.fail((rs.type_label, "norm", str(x), str(y)))
    return res


def antidominant_uniqueness(rd: RootData, rng: random.Random, cases: int, result: Optional[PropertyResult] = None) -> PropertyResult:
    """make_antidominant lands in the alcove, is idempotent, and is constant on orbits."""
    res = result or PropertyResult("make_antidominant uniqueness and idempotence")
    done = 0
    while done < cases:
        x = random_regular_weight(rng, rd)
        try:
            c, y, sign = make_antidominant(rd, x)
        except NonRegularWeight:
            continue
        done += 1
        res.cases += 1
        w = random_affine_element(rng, rd)
        c2, y2, _ = make_antidominant(rd, w.act(rd, x))
        c3, y3, _ = make_antidominant(rd, y)
        ok = (
            in_fundamental_alcove(rd, y, strict=True)
            and c.act(rd, x) == y
            and sign == c.sign
            and y2 == y
            and y3 == y
            and c3.act(rd, y) == y
        )
        if not ok:
            res.fail((str(x), str(y), str(y2), str(y3)))
    return res


def random_series(rng: random.Random, rank: int, level, cutoff: int, low: int = 0) -> CharacterSeries:
    coeffs = {}
    for m in range(low, cutoff + 1):
        data = {}
        for _ in range(rng.randint(0, 3)):
            data[random_weight(rng, rank, 2)] = rng.randint(-3, 3)
        coeffs[m] = FiniteCharacter(data)
    return CharacterSeries(level, cutoff, coeffs, low=low)


def truncation_closure(rng: random.Random, cases: int, rank: int = 1, result: Optional[PropertyResult] = None) -> PropertyResult:
    """Coefficients of a product through k depend only on the factors through k."""
    res = result or PropertyResult("truncation closure of series products")
    for _ in range(cases):
        res.cases += 1
        la, lb = rng.randint(0, 2), rng.randint(0, 2)
        a = random_series(rng, rank, 1, rng.randint(la, 6), la)
        b = random_series(rng, rank, 2, rng.randint(lb, 6), lb)
        full = a * b
        k = rng.randint(la + lb, max(la + lb, int(full.cutoff)))
        cut = (a.truncate(k - lb) * b.truncate(k - la)).truncate(k)
        diff = full.truncate(k).first_difference(cut, k)
        if diff is not None or full.cutoff != min(a.cutoff + lb, b.cutoff + la) or full.level != 3:
            res.fail(("k", k, diff))
    return res


def index_identity(reports: Sequence[dict], result: Optional[PropertyResult] = None) -> PropertyResult:
    """ker D+ minus ker D- reproduces the character side, for each assembled operator."""
    res = result or PropertyResult("index identity")
    for r in reports:
        res.cases += 1
        if not r.get("index_matches"):
            res.fail((r.get("pair"), r.get("lambda", r.get("N"))))
    return res


def run_all(rng: random.Random, systems: List[RootSystem], cases: int) -> List[PropertyResult]:
    iso = PropertyResult("weyl isometry and level")
    anti = PropertyResult("make_antidominant uniqueness and idempotence")
    for k, rs in enumerate(systems):
        per = cases // len(systems) + (k < cases % len(systems))
        weyl_isometry(rs, rng, per, iso)
        antidominant_uniqueness(rs, rng, max(1, per // 10), anti)
    return [iso, anti, truncation_closure(rng, max(1, cases // 10))]

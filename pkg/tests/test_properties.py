"""Property tests driven by hypothesis, alongside the seeded checks in properties.py."""

from fractions import Fraction as F

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from multipletkit.characters import CharacterSeries, FiniteCharacter
from multipletkit.errors import NonRegularWeight
from multipletkit.properties import lattice_reflection
from multipletkit.rootsystem import RootSystem
from multipletkit.weyl import (
    AffineWeight,
    AffineWeylElement,
    affine_norm2,
    in_fundamental_alcove,
    in_fundamental_alcove_by_roots,
    make_antidominant,
    reflection_element,
    simple_affine_roots,
)

SYSTEMS = {x: RootSystem(x) for x in ("A1", "A2", "B2", "G2", "A3", "B3")}
REFL = {x: [reflection_element(rs, a.m, a.lam) for a in simple_affine_roots(rs)] for x, rs in SYSTEMS.items()}

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=7)
labels = st.sampled_from(sorted(SYSTEMS))


@st.composite
def affine_cases(draw):
    label = draw(labels)
    rs = SYSTEMS[label]
    lam = tuple(draw(fractions) for _ in range(rs.rank))
    m = draw(fractions)
    h = draw(st.fractions(min_value=F(1, 3), max_value=6, max_denominator=3))
    word = draw(st.lists(st.integers(0, rs.rank), max_size=8))
    return label, AffineWeight(m, lam, h), word


def element(label, word):
    e = AffineWeylElement.identity(SYSTEMS[label].rank)
    for k in word:
        e = REFL[label][k].compose(e)
    return e


@settings(max_examples=300, deadline=None)
@given(affine_cases())
def test_affine_action_is_isometry_and_keeps_level(case):
    label, x, word = case
    rs = SYSTEMS[label]
    y = element(label, word).act(rs, x)
    assert y.h == x.h
    assert affine_norm2(rs, y) == affine_norm2(rs, x)


@settings(max_examples=300, deadline=None)
@given(labels, st.data())
def test_gram_is_invariant_under_cartan_reflections(label, data):
    rs = SYSTEMS[label]
    lam = tuple(F(data.draw(st.integers(-5, 5))) for _ in range(rs.rank))
    i = data.draw(st.integers(0, rs.rank - 1))
    assert rs.norm2(lattice_reflection(rs, i, lam)) == rs.norm2(lam)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(affine_cases())
def test_make_antidominant_unique_and_idempotent(case):
    label, x, word = case
    rs = SYSTEMS[label]
    try:
        c, y, sign = make_antidominant(rs, x)
    except NonRegularWeight:
        return
    assert in_fundamental_alcove(rs, y, strict=True)
    assert c.act(rs, x) == y and sign == c.sign
    _, y2, _ = make_antidominant(rs, element(label, word).act(rs, x))
    assert y2 == y
    c3, y3, s3 = make_antidominant(rs, y)
    assert y3 == y and s3 == 1 and c3.act(rs, y) == y


@settings(max_examples=300, deadline=None)
@given(affine_cases())
def test_alcove_descriptions_agree(case):
    label, x, _ = case
    rs = SYSTEMS[label]
    for strict in (False, True):
        assert in_fundamental_alcove(rs, x, strict) == in_fundamental_alcove_by_roots(rs, x, strict)


@st.composite
def series(draw, level):
    low = draw(st.integers(0, 2))
    cutoff = draw(st.integers(low, 6))
    coeffs = {}
    for m in range(low, cutoff + 1):
        terms = draw(st.dictionaries(st.integers(-3, 3), st.integers(-3, 3), max_size=3))
        coeffs[m] = FiniteCharacter({(F(w),): c for w, c in terms.items()})
    return CharacterSeries(level, cutoff, coeffs, low=low)


@settings(max_examples=300, deadline=None)
@given(series(1), series(2), st.integers(0, 10))
def test_products_are_closed_under_truncation(a, b, k):
    full = a * b
    assert full.cutoff == min(a.cutoff + b.low, b.cutoff + a.low)
    k = min(k, int(full.cutoff))
    cut = a.truncate(max(a.low, k - b.low)) * b.truncate(max(b.low, k - a.low))
    assert full.first_difference(cut, k) is None


@settings(max_examples=200, deadline=None)
@given(series(1), series(1), series(1))
def test_series_ring_laws(a, b, c):
    assert ((a + b) * c).first_difference(a * c + b * c) is None
    assert (a * b).first_difference(b * a) is None

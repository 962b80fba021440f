from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gabundle.autact import Linear, PlaneAuto, Triangular
from gabundle.cech import CechClass, HomogComponent
from gabundle.laurent import LaurentPoly2, Poly1, Poly4

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_rats = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rats = small_rats.filter(bool)


@st.composite
def laurent_polys(draw, lo=-4, hi=3, max_terms=5):
    exps = st.tuples(st.integers(lo, hi), st.integers(lo, hi))
    return LaurentPoly2(draw(st.dictionaries(exps, small_rats, max_size=max_terms)))


@st.composite
def classes(draw, dmax=8, max_terms=5):
    keys = [(-i, -j) for i in range(1, dmax) for j in range(1, dmax - i + 1)]
    return CechClass(draw(st.dictionaries(st.sampled_from(keys), small_rats, max_size=max_terms)))


@st.composite
def components(draw, dmin=2, dmax=10):
    d = draw(st.integers(dmin, dmax))
    return HomogComponent(d, tuple(draw(st.lists(small_rats, min_size=d - 1, max_size=d - 1))))


@st.composite
def poly4s(draw, top=2, max_terms=4):
    exps = st.tuples(*[st.integers(0, top)] * 4)
    return Poly4(draw(st.dictionaries(exps, st.integers(-3, 3), max_size=max_terms)))


@st.composite
def linears(draw):
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2)
                .filter(lambda r: r[0][0] * r[1][1] != r[0][1] * r[1][0]))
    return Linear(rows)


triangulars = st.builds(lambda cs: Triangular(Poly1(cs)), st.lists(st.integers(-2, 2), max_size=2))
generators = st.one_of(linears(), triangulars)
words = st.builds(lambda gs: PlaneAuto(tuple(gs)), st.lists(generators, min_size=1, max_size=3))

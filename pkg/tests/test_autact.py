from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from gabundle.autact import (Linear, PlaneAuto, base_change_equivalent, compose, pullback,
                             pullback_dual_path, pullback_linear, pullback_triangular)
from gabundle.cech import CechClass, decompose
from gabundle.errors import ExpansionTooLarge, SingularMatrix
from gabundle.laurent import Poly1

from conftest import classes, linears, nonzero_rats, triangulars, words

sx, sy, se = sp.symbols("x y e")


def cls(*terms):
    return CechClass({(i, j): c for i, j, c in terms})


def from_sympy(expr) -> CechClass:
    """Negative-quadrant part of a Laurent polynomial given as a sympy expression."""
    poly = sp.Poly(sp.expand(expr * sx ** 40 * sy ** 40), sx, sy)
    out = {}
    for (i, j), c in poly.terms():
        i, j = i - 40, j - 40
        if i < 0 and j < 0:
            out[(i, j)] = Fraction(int(c.p), int(c.q))
    return CechClass(out)


def to_sympy(c: CechClass):
    return sp.Add(*[sp.Rational(v.numerator, v.denominator) * sx ** i * sy ** j for (i, j), v in c.terms.items()])


def monomial_matrix_oracle(g, c: CechClass) -> CechClass:
    """Direct substitution f o g for diagonal and antidiagonal g.

    An antidiagonal map exchanges U_x and U_y, which reverses the orientation
    of the cocycle, hence the sign.
    """
    (a, b), (cc, d) = g
    f = to_sympy(c)
    q = lambda t: sp.Rational(t.numerator, t.denominator)
    if b == 0 and cc == 0:
        return from_sympy(f.subs({sx: q(Fraction(a)) * sx, sy: q(Fraction(d)) * sy}, simultaneous=True))
    assert a == 0 and d == 0
    return from_sympy(-f.subs({sx: q(Fraction(b)) * sy, sy: q(Fraction(cc)) * sx}, simultaneous=True))


def triangular_oracle(s: Poly1, c: CechClass) -> CechClass:
    """Substitute y -> y + x^2 s(x) and expand (1 + e)^{-n} with e = x^2 s / y as a series."""
    xs = sx ** 2 * sp.Add(*[sp.Rational(a.numerator, a.denominator) * sx ** k for k, a in enumerate(s.coeffs)])
    total = 0
    for (i, j), v in c.terms.items():
        m, n = -i, -j
        series = sp.series((1 + se) ** (-n), se, 0, m + 1).removeO()
        total += sp.Rational(v.numerator, v.denominator) * sx ** (-m) * sy ** (-n) * series.subs(se, xs / sy)
    return from_sympy(total)


monomial_matrices = st.one_of(
    st.tuples(nonzero_rats, nonzero_rats).map(lambda t: ((t[0], 0), (0, t[1]))),
    st.tuples(nonzero_rats, nonzero_rats).map(lambda t: ((0, t[0]), (t[1], 0))),
)


def test_spec_examples():
    assert pullback(PlaneAuto.identity(), cls((-2, -1, 1))) == cls((-2, -1, 1))
    assert pullback_linear(((2, 0), (0, 3)), cls((-2, -1, 1))) == cls((-2, -1, Fraction(1, 12)))
    assert pullback_linear(((0, 1), (1, 0)), cls((-2, -1, 1))) == cls((-1, -2, -1))
    assert pullback_linear(((1, 0), (0, 1)), cls((-2, -1, 5))) == cls((-2, -1, 5))
    assert pullback_triangular(Poly1([1]), cls((-1, -1, 1))) == cls((-1, -1, 1))
    assert pullback_triangular(Poly1([1]), cls((-3, -1, 1))) == cls((-3, -1, 1), (-1, -2, -1))
    assert pullback_triangular(Poly1(), cls((-3, -1, 1))) == cls((-3, -1, 1))
    tri = PlaneAuto.triangular([1])
    assert pullback_dual_path(tri, cls((-3, -1, 1))) == cls((-3, -1, 1), (-1, -2, -1))


def test_order_matters():
    c = cls((-3, -1, 1))
    tri, diag = PlaneAuto.triangular([1]), PlaneAuto.linear(((2, 0), (0, 1)))
    first = pullback(tri + diag, c)
    second = pullback(diag + tri, c)
    assert first != second
    assert first == pullback(diag, pullback(tri, c)) == pullback_dual_path(tri + diag, c)
    assert second == pullback(tri, pullback(diag, c)) == pullback_dual_path(diag + tri, c)
    # hand values: x^{-3}(y + x^2)^{-1} then (x, y) -> (2x, y)
    assert first == cls((-3, -1, Fraction(1, 8)), (-1, -2, Fraction(-1, 2)))


@given(monomial_matrices, classes())
def test_linear_matches_substitution_oracle(g, c):
    assert pullback_linear(g, c) == monomial_matrix_oracle(g, c)


@settings(max_examples=40)
@given(triangulars, classes(dmax=7, max_terms=3))
def test_triangular_matches_series_oracle(g, c):
    assert pullback_triangular(g.s, c) == triangular_oracle(g.s, c)


@given(words, words, classes())
def test_action_law(a1, a2, c):
    assert pullback(compose(a1, a2), c) == pullback(a2, pullback(a1, c))


@given(words, classes())
def test_two_paths_agree(a, c):
    assert pullback(a, c) == pullback_dual_path(a, c)


@given(linears(), classes())
def test_linear_preserves_weights(g, c):
    image = pullback_linear(g, c)
    assert {h.d for h in decompose(image)} <= {h.d for h in decompose(c)}
    # invertibility: the inverse matrix undoes the action
    (a, b), (cc, d) = g.matrix
    det = a * d - b * cc
    inv = Linear(((d / det, -b / det), (-cc / det, a / det)))
    assert pullback(PlaneAuto((inv,)), image) == c


@given(nonzero_rats, classes())
def test_scalar_matrix(lam, c):
    image = pullback_linear(((lam, 0), (0, lam)), c)
    expect = CechClass({(i, j): v * lam ** (i + j) for (i, j), v in c.terms.items()})
    assert image == expect


@given(triangulars, classes())
def test_triangular_filtration(g, c):
    image = pullback_triangular(g.s, c)
    if c.is_zero():
        assert image.is_zero()
        return
    top = max(c.weights())
    assert all(w <= top for w in image.weights())
    top_in = [h for h in decompose(c) if h.d == top]
    top_out = [h for h in decompose(image) if h.d == top]
    assert top_in == top_out


@given(words, classes())
def test_w2_component(a, c):
    image = pullback(a, c)
    assert image.coefficient(-1, -1) == c.coefficient(-1, -1) / a.jacobian_det


def test_singular_matrix():
    with pytest.raises(SingularMatrix):
        Linear(((1, 2), (2, 4)))
    with pytest.raises(SingularMatrix):
        pullback_linear(((0, 0), (0, 0)), cls((-1, -1, 1)))


def test_max_degree_guard():
    big = cls((-40, -40, 1))
    with pytest.raises(ExpansionTooLarge):
        pullback(PlaneAuto.identity(), big)
    assert pullback(PlaneAuto.identity(), big, max_degree=80) == big
    with pytest.raises(ExpansionTooLarge):
        pullback_dual_path(PlaneAuto.triangular([0] * 70 + [1]), cls((-1, -1, 1)))


@pytest.mark.parametrize("m,n,p,q,want", [(2, 2, 3, 1, False), (2, 3, 3, 2, True), (1, 1, 1, 1, True)])
def test_base_change_equivalent(m, n, p, q, want):
    assert base_change_equivalent(m, n, p, q) is want


def test_base_change_via_swap():
    # the swap realizes {m, n} = {n, m} up to the harmless sign of the class
    for m, n in [(2, 3), (1, 4), (3, 1)]:
        image = pullback_linear(((0, 1), (1, 0)), cls((-m, -n, 1)))
        assert image == cls((-n, -m, -1))

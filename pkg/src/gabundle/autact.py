"""Action of plane automorphisms on H^1 by pullback.

Automorphisms of the punctured plane are given as words in two kinds of
generators: invertible linear maps and triangular maps
``(x, y) -> (x, y + x^2 s(x))``. A word ``(g1, ..., gk)`` stands for the
composite map ``g1 o g2 o ... o gk``, so its pullback applies ``g1^*`` first
and ``pullback(a1 + a2, c) == pullback(a2, pullback(a1, c))``.

Two evaluation routes are implemented and kept independent:

* ``pullback`` -- generator by generator: linear maps through the dual
  model ``W_{-d} = V_{d-2}^* (x) det^{-1}``, triangular maps through binomial
  expansion of ``(y + x^2 s)^{-n}``.
* ``pullback_dual_path`` -- reconstructs the image from the pairing
  ``<psi^* w, v> = det(D psi)^{-1} <w, v o psi^{-1}>`` evaluated on the whole
  word at once.

Convention: both routes use ``det^{-1}`` and ``v o psi^{-1}``. On diagonal and
antidiagonal matrices this agrees with direct substitution, where the swap
of ``U_x`` and ``U_y`` contributes a sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .cech import CechClass, decompose, normalize, residue_pairing
from .errors import ExpansionTooLarge, SingularMatrix
from .laurent import LaurentPoly2, Poly1, as_rat

DEFAULT_MAX_DEGREE = 64

Matrix = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def _matrix(rows) -> Matrix:
    (a, b), (c, d) = rows
    return ((as_rat(a), as_rat(b)), (as_rat(c), as_rat(d)))


def det2(g: Matrix) -> Fraction:
    return g[0][0] * g[1][1] - g[0][1] * g[1][0]


def inverse2(g: Matrix) -> Matrix:
    det = det2(g)
    if det == 0:
        raise SingularMatrix(f"matrix {g} is singular")
    (a, b), (c, d) = g
    return ((d / det, -b / det), (-c / det, a / det))


@dataclass(frozen=True)
class Linear:
    """(x, y) -> (a x + b y, c x + d y) for matrix [[a, b], [c, d]]."""

    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", _matrix(self.matrix))
        if det2(self.matrix) == 0:
            raise SingularMatrix(f"matrix {self.matrix} is singular")

    @property
    def det(self) -> Fraction:
        return det2(self.matrix)


@dataclass(frozen=True)
class Triangular:
    """(x, y) -> (x, y + x^2 s(x))."""

    s: Poly1

    def __post_init__(self):
        if not isinstance(self.s, Poly1):
            object.__setattr__(self, "s", Poly1(self.s))


Generator = Union[Linear, Triangular]


@dataclass(frozen=True)
class PlaneAuto:
    word: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @classmethod
    def identity(cls) -> "PlaneAuto":
        return cls(())

    @classmethod
    def linear(cls, rows) -> "PlaneAuto":
        return cls((Linear(rows),))

    @classmethod
    def triangular(cls, s) -> "PlaneAuto":
        return cls((Triangular(s if isinstance(s, Poly1) else Poly1(s)),))

    def __add__(self, other: "PlaneAuto") -> "PlaneAuto":
        return PlaneAuto(self.word + other.word)

    @property
    def jacobian_det(self) -> Fraction:
        det = Fraction(1)
        for g in self.word:
            if isinstance(g, Linear):
                det *= g.det
        return det


def compose(*autos: PlaneAuto) -> PlaneAuto:
    out = PlaneAuto.identity()
    for a in autos:
        out = out + a
    return out


def _check_guard(c: CechClass, word: Sequence[Generator], max_degree: int) -> None:
    weights = c.weights()
    if weights and weights[-1] > max_degree:
        raise ExpansionTooLarge(f"class weight {weights[-1]} exceeds max_degree {max_degree}")
    for g in word:
        if isinstance(g, Triangular) and g.s.degree + 2 > max_degree:
            raise ExpansionTooLarge(f"triangular degree {g.s.degree + 2} exceeds max_degree {max_degree}")


def _linear_form(a: Fraction, b: Fraction) -> LaurentPoly2:
    return LaurentPoly2({(1, 0): a, (0, 1): b})


def pullback_linear(g, c: CechClass) -> CechClass:
    """Pull ``c`` back along the linear map ``g`` using the dual model.

    For each weight d and each monomial v of degree d - 2 the image pairs
    with v as ``det(g)^{-1} <c_d, v o g^{-1}>``; the pairing determines the
    image uniquely because the monomials are dual to the basis x^{-k} y^{k-d}.
    """
    g = g.matrix if isinstance(g, Linear) else _matrix(g)
    h = inverse2(g)
    inv_det = 1 / det2(g)
    X = _linear_form(*h[0])
    Y = _linear_form(*h[1])
    out: dict[tuple[int, int], Fraction] = {}
    for comp in decompose(c):
        d = comp.d
        w = comp.to_class()
        xp = [X ** a for a in range(d - 1)]
        yp = [Y ** b for b in range(d - 1)]
        for k in range(1, d):
            coef = inv_det * residue_pairing(w, xp[k - 1] * yp[d - k - 1])
            if coef:
                out[(-k, -(d - k))] = coef
    return CechClass._raw(out)


def _x2s(s: Poly1) -> LaurentPoly2:
    return LaurentPoly2({(k + 2, 0): a for k, a in enumerate(s.coeffs)})


def pullback_triangular(s, c: CechClass) -> CechClass:
    """Pull ``c`` back along ``(x, y) -> (x, y + x^2 s(x))`` by series expansion.

    ``x^{-m}(y + x^2 s)^{-n} = sum_k binom(-n, k) x^{-m} (x^2 s)^k y^{-n-k}``;
    from k = ceil(m / 2) on every term has x-exponent >= 0 and is a coboundary.
    """
    s = s.s if isinstance(s, Triangular) else (s if isinstance(s, Poly1) else Poly1(s))
    if s.is_zero():
        return c
    shift = _x2s(s)
    powers = [LaurentPoly2.one()]
    total = LaurentPoly2.zero()
    for (i, j), coef in c.terms.items():
        m, n = -i, -j
        for k in range((m + 1) // 2):
            while len(powers) <= k:
                powers.append(powers[-1] * shift)
            # binom(-n, k) = (-1)^k binom(n + k - 1, k)
            b = (-1) ** k * comb(n + k - 1, k)
            total = total + powers[k].shift((-m, -n - k)).scale(coef * b)
    return normalize(total)


def pullback(a: PlaneAuto, c: CechClass, max_degree: int = DEFAULT_MAX_DEGREE) -> CechClass:
    _check_guard(c, a.word, max_degree)
    for g in a.word:
        if isinstance(g, Linear):
            c = pullback_linear(g, c)
        else:
            c = pullback_triangular(g.s, c)
    return c


def _truncate(f: LaurentPoly2, top: int) -> LaurentPoly2:
    return LaurentPoly2({e: c for e, c in f.terms.items() if e[0] + e[1] <= top})


def _substitute(f: LaurentPoly2, X: LaurentPoly2, Y: LaurentPoly2, top: int) -> LaurentPoly2:
    """f(X, Y) for a polynomial f, dropping total degree above ``top``."""
    if f.is_zero():
        return f
    max_i = max(i for i, _ in f.terms)
    max_j = max(j for _, j in f.terms)
    xp = [LaurentPoly2.one()]
    for _ in range(max_i):
        xp.append(_truncate(xp[-1] * X, top))
    yp = [LaurentPoly2.one()]
    for _ in range(max_j):
        yp.append(_truncate(yp[-1] * Y, top))
    out = LaurentPoly2.zero()
    for (i, j), coef in f.terms.items():
        out = out + _truncate(xp[i] * yp[j], top).scale(coef)
    return out


def _inverse_substitution(g: Generator) -> tuple[LaurentPoly2, LaurentPoly2]:
    x = LaurentPoly2.gen("x")
    if isinstance(g, Linear):
        h = inverse2(g.matrix)
        return _linear_form(*h[0]), _linear_form(*h[1])
    return x, LaurentPoly2.gen("y") - _x2s(g.s)


def pullback_dual_path(a: PlaneAuto, c: CechClass, max_degree: int = DEFAULT_MAX_DEGREE) -> CechClass:
    """Independent evaluation of ``pullback(a, c)`` through the pairing formula.

    The image of a class of top weight D lies in F_{-D} (weights 2..D), so it
    is fixed by its pairings with monomials of degree <= D - 2, and the
    polynomials ``v o psi^{-1}`` may be truncated at degree D - 2: neither
    generator lowers degrees.
    """
    _check_guard(c, a.word, max_degree)
    if c.is_zero():
        return c
    top_weight = c.weights()[-1]
    top = top_weight - 2
    inv_det = 1 / a.jacobian_det
    inverses = [_inverse_substitution(g) for g in reversed(a.word)]
    out: dict[tuple[int, int], Fraction] = {}
    for d in range(2, top_weight + 1):
        for k in range(1, d):
            v = LaurentPoly2.monomial((k - 1, d - k - 1))
            for X, Y in inverses:
                v = _substitute(v, X, Y, top)
            coef = inv_det * residue_pairing(c, v)
            if coef:
                out[(-k, -(d - k))] = coef
    return CechClass._raw(out)


def base_change_equivalent(m: int, n: int, p: int, q: int) -> bool:
    """Whether X_{m,n} and X_{p,q} are related by a base change of the plane."""
    if min(m, n, p, q) < 1:
        raise ValueError("all indices must be >= 1")
    return sorted((m, n)) == sorted((p, q))

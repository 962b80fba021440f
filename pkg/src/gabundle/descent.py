"""Descent of homogeneous classes to P^1 and rational sections of O(-d)-bundles.

A class in W_{-d} is the pullback of a class in H^1(P^1, O(-d)). With
z = y/x on U_x / G_m, the cocycle map sends ``x^i y^j`` to ``z^{-i}``, so
``x^{-k} y^{-(d-k)}`` lands on ``z^k``.

Graded coboundaries: a weight -d monomial with j >= 0 (regular on U_y)
has k = -i >= d, and one with i >= 0 (regular on U_x) has k <= 0. Hence
``normalize_p1`` keeps exactly the powers z^1 .. z^{d-1}, matching the
normal form on the plane.

The section part follows the polynomial split
``(z - lam)^{d-1} q(z) = alpha(z) + z^d beta(z)`` with ``deg alpha <= d - 1``;
``s = -beta`` gives the rational section ``(z - lam)^{1-d} s(z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import comb
from types import MappingProxyType
from typing import Mapping

from .cech import HomogComponent
from .errors import BadLambda, SectionIdentityMismatch, ZeroCocycle
from .laurent import Poly1, as_rat


class P1Cocycle:
    """Laurent polynomial ``sum c_k z^k`` on the overlap of the two charts."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for k, c in items:
            acc[int(k)] = acc.get(int(k), Fraction(0)) + as_rat(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def sorted_terms(self):
        return sorted(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, P1Cocycle):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(("P1Cocycle", frozenset(self._terms.items())))

    def __repr__(self):
        body = " + ".join(f"({c})*z^{k}" for k, c in sorted(self._terms.items())) or "0"
        return f"P1Cocycle({body})"


@dataclass(frozen=True)
class P1Class:
    """Class in H^1(P^1, O(-d)); ``coeffs[k - 1]`` multiplies z^k, 1 <= k <= d - 1."""

    d: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))
        if len(self.coeffs) != self.d - 1:
            raise ValueError(f"H^1(O(-{self.d})) has dimension {self.d - 1}")

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def descend(h: HomogComponent) -> P1Cocycle:
    return P1Cocycle({k: c for k, c in enumerate(h.coeffs, 1)})


def normalize_p1(q: P1Cocycle, d: int) -> P1Class:
    if d < 2:
        raise ValueError("d must be >= 2")
    return P1Class(d, tuple(q.coefficient(k) for k in range(1, d)))


def p1_to_component(c: P1Class) -> HomogComponent:
    return HomogComponent(c.d, c.coeffs)


def _check_q(d: int, q: Poly1) -> None:
    if d < 2:
        raise ValueError("d must be >= 2")
    if q.is_zero():
        raise ZeroCocycle("q = 0 defines the trivial O(-d)-bundle")
    if q.coeff(0) != 0:
        raise ValueError("q must vanish at z = 0")
    if q.degree >= d:
        raise ValueError(f"deg q = {q.degree} must be < d = {d}")


def dg_r_polynomial(d: int, q: Poly1) -> Poly1:
    """r(z) = sum_{i=0}^{d-2} (-1)^{i+1} binom(d-2, i) a_{i+1} z^i for q = sum a_k z^k."""
    _check_q(d, q)
    return Poly1((-1) ** (i + 1) * comb(d - 2, i) * q.coeff(i + 1) for i in range(d - 1))


@dataclass(frozen=True)
class SectionData:
    d: int
    lam: Fraction
    s: Poly1
    alpha: Poly1
    beta: Poly1
    r: Poly1

    def f1(self) -> str:
        """Human-readable presentation of the rational section on the z-chart."""
        return f"(z - {self.lam})^({1 - self.d}) * ({self.s})"

    def o_infinity_residual(self, q: Poly1) -> Poly1:
        """z^d s(z) + (z - lam)^{d-1} q(z); must have degree <= d - 1."""
        zd = Poly1([0] * self.d + [1])
        return zd * self.s + (Poly1((-self.lam, 1)) ** (self.d - 1)) * q


def dg_find_section(d: int, q: Poly1, lam) -> SectionData:
    lam = as_rat(lam)
    r = dg_r_polynomial(d, q)
    if lam == 0:
        raise BadLambda("lambda must be nonzero (the pole sits on the overlap of the charts)")
    if r(lam) == 0:
        raise BadLambda(f"r(lambda) = 0 at lambda = {lam}; s would vanish at the pole")
    alpha, beta = ((Poly1((-lam, 1)) ** (d - 1)) * q).split(d)
    s = -beta
    split_value = s(lam)
    if split_value != alpha(lam) / lam ** d or split_value != r(lam):
        raise SectionIdentityMismatch(
            f"s(lambda) = {split_value}, lambda^-d alpha(lambda) = {alpha(lam) / lam ** d}, r(lambda) = {r(lam)}")
    return SectionData(d, lam, s, alpha, beta, r)


def dg_pick_lambda(d: int, q: Poly1) -> Fraction:
    """Smallest positive integer that is not a root of r."""
    r = dg_r_polynomial(d, q)
    for lam in count(1):
        if r(lam) != 0:
            return Fraction(lam)
    raise AssertionError("unreachable")

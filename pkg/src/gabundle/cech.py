"""Cech classes in H^1 of the punctured plane for the covering {U_x, U_y}.

A cocycle is a Laurent polynomial; monomials with a nonnegative exponent are
coboundaries (regular on U_x or on U_y), so the class of ``f`` is carried by
its terms ``x^i y^j`` with ``i, j <= -1``. This module provides that normal
form, the ``X(m, n, p)`` dictionary between nonzero classes and bundle
equations, the weight decomposition ``W_{-d}`` and the residue pairing with
binary forms of degree ``d - 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import DegreeMismatch, InvalidBundleSpec
from .laurent import LaurentPoly2, as_rat


class CechClass:
    """Normal-form class: finite map ``(i, j) -> Fraction`` with i, j <= -1."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            i, j = int(i), int(j)
            if i > -1 or j > -1:
                raise ValueError(f"exponent ({i}, {j}) outside the negative quadrant")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + as_rat(c)
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> Mapping[tuple[int, int], Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def sorted_terms(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def weights(self) -> list[int]:
        """Sorted distinct values of d = -(i + j) present in the support."""
        return sorted({-(i + j) for i, j in self._terms})

    def as_laurent(self) -> LaurentPoly2:
        return LaurentPoly2(self._terms)

    def __add__(self, other):
        if not isinstance(other, CechClass):
            return NotImplemented
        return normalize(self.as_laurent() + other.as_laurent())

    def __sub__(self, other):
        if not isinstance(other, CechClass):
            return NotImplemented
        return normalize(self.as_laurent() - other.as_laurent())

    def __neg__(self):
        return CechClass._raw({e: -c for e, c in self._terms.items()})

    def scale(self, c) -> "CechClass":
        c = as_rat(c)
        if not c:
            return CechClass()
        return CechClass._raw({e: c * v for e, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, CechClass):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(("CechClass", frozenset(self._terms.items())))

    def __str__(self):
        return str(self.as_laurent())

    def __repr__(self):
        return f"CechClass({self})"


def normalize(f: LaurentPoly2) -> CechClass:
    """Drop every coboundary monomial (some exponent >= 0)."""
    return CechClass._raw({e: c for e, c in f.terms.items() if e[0] < 0 and e[1] < 0})


@dataclass(frozen=True)
class BundleSpec:
    """The bundle ``X(m, n, p) = {x^m v - y^n u = p} minus the origin fibre``.

    ``BundleSpec.trivial()`` is the trivial bundle; otherwise ``p`` is a
    polynomial (nonnegative exponents) not divisible by ``x`` or ``y`` with
    ``deg_x p < m`` and ``deg_y p < n``.
    """

    m: int = 0
    n: int = 0
    p: LaurentPoly2 | None = None

    def __post_init__(self):
        if self.p is None:
            if self.m or self.n:
                raise InvalidBundleSpec("trivial bundle carries no (m, n)")
            return
        if not isinstance(self.p, LaurentPoly2):
            raise InvalidBundleSpec("p must be a LaurentPoly2")
        m, n, p = self.m, self.n, self.p
        if m < 1 or n < 1:
            raise InvalidBundleSpec(f"need m, n >= 1, got ({m}, {n})")
        if p.is_zero():
            raise InvalidBundleSpec("p = 0; use BundleSpec.trivial()")
        exps = list(p.terms)
        if min(min(e) for e in exps) < 0:
            raise InvalidBundleSpec("p must be a polynomial")
        if min(i for i, _ in exps) > 0:
            raise InvalidBundleSpec("p is divisible by x")
        if min(j for _, j in exps) > 0:
            raise InvalidBundleSpec("p is divisible by y")
        if max(i for i, _ in exps) >= m:
            raise InvalidBundleSpec(f"deg_x p >= m = {m}")
        if max(j for _, j in exps) >= n:
            raise InvalidBundleSpec(f"deg_y p >= n = {n}")

    @classmethod
    def trivial(cls) -> "BundleSpec":
        return cls()

    @classmethod
    def standard(cls, m: int, n: int, c=1) -> "BundleSpec":
        """``X_{m,n}`` (or ``X(m, n, c)`` for a nonzero constant c)."""
        return cls(m, n, LaurentPoly2.constant(c))

    @property
    def is_trivial(self) -> bool:
        return self.p is None

    def relator_label(self) -> str:
        if self.is_trivial:
            return "trivial"
        return f"x^{self.m} v - y^{self.n} u = {self.p}"


def bundle_class(spec: BundleSpec) -> CechClass:
    if spec.is_trivial:
        return CechClass()
    return normalize(spec.p.shift((-spec.m, -spec.n)))


def bundle_from_class(c: CechClass) -> BundleSpec:
    """Read back the unique ``X(m, n, p)`` whose class is ``c``."""
    if c.is_zero():
        return BundleSpec.trivial()
    m = -min(i for i, _ in c.terms)
    n = -min(j for _, j in c.terms)
    return BundleSpec(m, n, c.as_laurent().shift((m, n)))


def canonicalize_bundle(m: int, n: int, p: LaurentPoly2) -> BundleSpec:
    if m < 1 or n < 1:
        raise InvalidBundleSpec(f"need m, n >= 1, got ({m}, {n})")
    return bundle_from_class(normalize(p.shift((-m, -n))))


def is_affine(spec: BundleSpec) -> bool:
    return not bundle_class(spec).is_zero()


@dataclass(frozen=True)
class HomogComponent:
    """Element of W_{-d}; ``coeffs[k - 1]`` multiplies x^{-k} y^{-(d-k)}."""

    d: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"weight d must be >= 2, got {self.d}")
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))
        if len(self.coeffs) != self.d - 1:
            raise ValueError(f"W_-{self.d} has dimension {self.d - 1}, got {len(self.coeffs)} coefficients")

    @classmethod
    def zero(cls, d: int) -> "HomogComponent":
        return cls(d, (Fraction(0),) * (d - 1))

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^{-k} y^{-(d-k)}, 1 <= k <= d - 1."""
        return self.coeffs[k - 1]

    def to_class(self) -> CechClass:
        d = self.d
        return CechClass((((-k, -(d - k)), c) for k, c in enumerate(self.coeffs, 1)))


@dataclass(frozen=True)
class BinaryForm:
    """Binary form of degree e; ``coeffs[a]`` multiplies x^a y^{e-a}."""

    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("negative degree")
        object.__setattr__(self, "coeffs", tuple(as_rat(c) for c in self.coeffs))
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(f"degree-{self.degree} form needs {self.degree + 1} coefficients")

    @classmethod
    def monomial(cls, degree: int, a: int, c=1) -> "BinaryForm":
        coeffs = [Fraction(0)] * (degree + 1)
        coeffs[a] = as_rat(c)
        return cls(degree, tuple(coeffs))

    def coeff(self, a: int) -> Fraction:
        return self.coeffs[a]

    def to_laurent(self) -> LaurentPoly2:
        e = self.degree
        return LaurentPoly2({(a, e - a): c for a, c in enumerate(self.coeffs)})


def decompose(c: CechClass) -> list[HomogComponent]:
    """Split ``c`` into its weight components, in increasing d."""
    buckets: dict[int, list[Fraction]] = {}
    for (i, j), coef in c.terms.items():
        d = -(i + j)
        buckets.setdefault(d, [Fraction(0)] * (d - 1))[-i - 1] = coef
    return [HomogComponent(d, tuple(buckets[d])) for d in sorted(buckets)]


def compose_components(components: Iterable[HomogComponent]) -> CechClass:
    total = CechClass()
    for h in components:
        total = total + h.to_class()
    return total


def homogeneous_degree(c: CechClass) -> int | None:
    """Return -d if ``c`` lies in a single W_{-d}; None for zero or mixed classes."""
    weights = c.weights()
    return -weights[0] if len(weights) == 1 else None


def serre_pair(h: HomogComponent, v: BinaryForm) -> Fraction:
    # x^{-k} y^{-(d-k)} is dual to x^{k-1} y^{d-k-1}
    if v.degree != h.d - 2:
        raise DegreeMismatch(f"W_-{h.d} pairs with forms of degree {h.d - 2}, not {v.degree}")
    return sum((h.coeff(k) * v.coeff(k - 1) for k in range(1, h.d)), Fraction(0))


def dual_form(h: HomogComponent) -> BinaryForm:
    return BinaryForm(h.d - 2, h.coeffs)


def residue_pairing(c: CechClass, f: LaurentPoly2) -> Fraction:
    """Coefficient of x^{-1} y^{-1} in ``c * f``.

    On homogeneous pieces this is ``serre_pair``; it extends the pairing to
    arbitrary classes and inhomogeneous polynomials (mismatched degrees
    contribute nothing).
    """
    total = Fraction(0)
    for (i, j), a in c.terms.items():
        total += a * f.coefficient((-1 - i, -1 - j))
    return total

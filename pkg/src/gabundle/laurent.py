"""Exact sparse polynomial arithmetic over the rationals.

Three carriers are provided:

* ``LaurentPoly2`` -- bivariate Laurent polynomials in ``x, y`` (integer
  exponents of either sign); these are the raw Cech cocycles.
* ``Poly4`` -- polynomials in ``x, y, u, v`` (nonnegative exponents); the
  ambient ring of the threefolds ``x^m v - y^n u = p``.
* ``Poly1`` -- dense univariate polynomials in ``z``.

Coefficients are ``fractions.Fraction``. No zero coefficient is ever stored,
so structural equality is mathematical equality. All values are immutable.
"""

from __future__ import annotations

import numbers
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import RelatorLeadingTermAmbiguous

Rat = Fraction
Exps = tuple[int, ...]


def as_rat(c) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to ``Fraction``.

    Floats are rejected: nothing in this package is allowed to round.
    """
    if isinstance(c, Fraction):
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, numbers.Integral):
        return Fraction(int(c))
    if isinstance(c, numbers.Rational):
        return Fraction(c.numerator, c.denominator)
    if isinstance(c, str):
        return parse_rat(c)
    raise TypeError(f"not an exact rational: {c!r}")


def parse_rat(text: str) -> Fraction:
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    if not _is_int_literal(num) or (sep and not (den.isdigit() and den.isascii())):
        raise ValueError(f"malformed rational {text!r}")
    if sep and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if sep else 1)


def _is_int_literal(s: str) -> bool:
    body = s[1:] if s[:1] in "+-" else s
    return body.isdigit() and body.isascii()


def format_rat(c: Fraction) -> str:
    return str(c)


class _Sparse:
    """Shared machinery for sparse maps ``exponent tuple -> Fraction``."""

    __slots__ = ("_terms", "_hash")
    nvars = 0
    var_names: tuple[str, ...] = ()
    allow_negative = True

    def __init__(self, terms: Mapping[Exps, object] | Iterable[tuple[Exps, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, Fraction] = {}
        for e, c in items:
            e = tuple(int(k) for k in e)
            if len(e) != self.nvars:
                raise ValueError(f"expected {self.nvars} exponents, got {e}")
            if not self.allow_negative and min(e) < 0:
                raise ValueError(f"negative exponent in {e} for {type(self).__name__}")
            acc[e] = acc.get(e, Fraction(0)) + as_rat(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, Fraction]):
        # trusted constructor: caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * cls.nvars: Fraction(1)})

    @classmethod
    def constant(cls, c):
        return cls({(0,) * cls.nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1):
        return cls({tuple(exps): c})

    @classmethod
    def gen(cls, name: str):
        e = [0] * cls.nvars
        e[cls.var_names.index(name)] = 1
        return cls._raw({tuple(e): Fraction(1)})

    @property
    def terms(self) -> Mapping[Exps, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self).constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return type(self)._raw({e: c for e, c in out.items() if c != 0})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer exponents only")
        if k < 0:
            # invertible only for Laurent monomials
            if self.allow_negative and len(self._terms) == 1:
                (e, c), = self._terms.items()
                return type(self)._raw({tuple(a * k for a in e): c ** k})
            raise ValueError(f"{self} is not invertible")
        result, base = type(self).one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "_Sparse":
        c = as_rat(c)
        if c == 0:
            return type(self).zero()
        return type(self)._raw({e: c * v for e, v in self._terms.items()})

    def shift(self, exps: Sequence[int]):
        """Multiply by the monomial with exponent vector ``exps``."""
        return type(self)({tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == type(self).constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def _monomial_str(self, e: Exps) -> str:
        parts = []
        for name, k in zip(self.var_names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = self._monomial_str(e)
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"({c})*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class LaurentPoly2(_Sparse):
    """Element of Q[x^{+-1}, y^{+-1}], keyed by ``(i, j)`` for ``x^i y^j``."""

    __slots__ = ()
    nvars = 2
    var_names = ("x", "y")

    def support(self):
        return self._terms.keys()

    def min_exponents(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        return (min(i for i, _ in self._terms), min(j for _, j in self._terms))


class Poly4(_Sparse):
    """Element of Q[x, y, u, v], keyed by ``(e_x, e_y, e_u, e_v)``."""

    __slots__ = ()
    nvars = 4
    var_names = ("x", "y", "u", "v")
    allow_negative = False


def lex_vuyx(e: Exps) -> tuple[int, int, int, int]:
    """Sort key for pure lex with v > u > y > x on ``(e_x, e_y, e_u, e_v)``."""
    return (e[3], e[2], e[1], e[0])


def leading_exponent(f: Poly4) -> Exps:
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    return max(f.terms, key=lex_vuyx)


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def nf_mod_relator(f: Poly4, relator: Poly4) -> Poly4:
    """Remainder of ``f`` on division by the single polynomial ``relator``.

    The monomial order is lex with v > u > y > x. A single divisor is a
    Groebner basis of the ideal it generates, so the result is the canonical
    representative of ``f`` modulo ``(relator)``.
    """
    if relator.is_zero():
        raise RelatorLeadingTermAmbiguous("zero relator has no leading monomial")
    lead = leading_exponent(relator)
    if any(e != lead and _divides(lead, e) for e in relator.terms):
        raise RelatorLeadingTermAmbiguous(f"leading monomial {lead} divides another relator monomial")
    lc = relator.terms[lead]
    tail = [(e, c / lc) for e, c in relator.terms.items() if e != lead]

    work = dict(f.terms)
    rem: dict[Exps, Fraction] = {}
    while work:
        e = max(work, key=lex_vuyx)
        c = work.pop(e)
        if not _divides(lead, e):
            rem[e] = c
            continue
        q = tuple(a - b for a, b in zip(e, lead))
        # every tail monomial is lex-smaller than lead, so the loop terminates
        for te, tc in tail:
            ne = tuple(a + b for a, b in zip(te, q))
            nc = work.get(ne, 0) - c * tc
            if nc:
                work[ne] = nc
            else:
                work.pop(ne, None)
    return Poly4._raw(rem)


class Poly1:
    """Dense univariate polynomial in ``z``; ``coeffs[k]`` is the coefficient of z^k."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rat(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def z(cls):
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __call__(self, t):
        t = as_rat(t)
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * t + a
        return acc

    def _coerce(self, other):
        if isinstance(other, Poly1):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly1((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return Poly1(self.coeff(k) + other.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly1(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return Poly1()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("nonnegative integer powers only")
        result = Poly1((1,))
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "Poly1":
        c = as_rat(c)
        return Poly1(c * a for a in self._c)

    def split(self, d: int) -> tuple["Poly1", "Poly1"]:
        """Return ``(low, high)`` with ``self = low + z^d * high`` and deg low < d."""
        return Poly1(self._c[:d]), Poly1(self._c[d:])

    def __eq__(self, other):
        if isinstance(other, Poly1):
            return self._c == other._c
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._c == Poly1((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(("Poly1", self._c))

    def __str__(self):
        if not self._c:
            return "0"
        chunks = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if not a:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                chunks.append(str(a))
            elif a == 1:
                chunks.append(mono)
            elif a == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"({a})*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly1({self})"

"""Identity checks in the coordinate ring of X(m, n, p).

The ring is Q[x, y, u, v] / (x^m v - y^n u - p). It is a domain (the
relator has degree one in v and is irreducible), so an identity between
fractions can be checked after clearing denominators.

The worked example on X_{2,2} concerns the map to the plane with coordinates

    a = x - y/2,    b = (6x - y)/8 * v - (3y - 2x)/2 * u

and fibre coordinates ``a^{-3} U`` over {a != 0}, ``b^{-1} w`` over {b != 0}.
The two differ by ``a^{-3} b^{-1}``, the cocycle of X_{3,1}, exactly when

    b * U - a^3 * w - 1 == 0   in the coordinate ring.

With the printed choice ``U = y + a + a*b`` this fails; the residual is
reported by ``verify_example_X22_X31(fiber="printed")``. The printed ``w``
is nevertheless right: ``1 + a^3 w`` is divisible by ``b`` in the ring and
the quotient is ``CORRECTED_FIBER`` below, for which the identity holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .cech import BundleSpec
from .errors import TrivialBundle
from .laurent import Poly4, nf_mod_relator

X, Y, U, V = (Poly4.gen(n) for n in "xyuv")

# Every constant of a, b, w, one entry per monomial: name -> (x, y, u, v exponents, coefficient).
EXAMPLE_CONSTANTS: Mapping[str, tuple[tuple[int, int, int, int], Fraction]] = {
    "a:x": ((1, 0, 0, 0), Fraction(1)),
    "a:y": ((0, 1, 0, 0), Fraction(-1, 2)),
    "b:xv": ((1, 0, 0, 1), Fraction(6, 8)),
    "b:yv": ((0, 1, 0, 1), Fraction(-1, 8)),
    "b:yu": ((0, 1, 1, 0), Fraction(-3, 2)),
    "b:xu": ((1, 0, 1, 0), Fraction(2, 2)),
    "w:v2x": ((1, 0, 0, 2), Fraction(5, 16)),
    "w:u2x": ((1, 0, 2, 0), Fraction(1)),
    "w:vux": ((1, 0, 1, 1), Fraction(5, 2)),
    "w:v2y": ((0, 1, 0, 2), Fraction(-1, 32)),
    "w:u2y": ((0, 1, 2, 0), Fraction(-5, 2)),
    "w:vuy": ((0, 1, 1, 1), Fraction(-5, 4)),
}

# (1 + a^3 w) / b in Q[x, y, u, v] / (x^2 v - y^2 u - 1).
CORRECTED_FIBER = Poly4({
    (3, 0, 1, 0): 1,
    (2, 1, 1, 0): Fraction(-5, 2),
    (1, 2, 1, 0): Fraction(5, 2),
    (0, 3, 1, 0): Fraction(-5, 4),
    (1, 2, 0, 1): Fraction(5, 16),
    (0, 3, 0, 1): Fraction(-1, 32),
    (1, 0, 0, 0): Fraction(7, 4),
    (0, 1, 0, 0): Fraction(-3, 8),
})

X22 = BundleSpec.standard(2, 2)


@dataclass(frozen=True)
class IdentityCheck:
    bundle: BundleSpec
    lhs: Poly4
    rhs: Poly4
    residual: Poly4

    @property
    def passes(self) -> bool:
        return self.residual.is_zero()


def bundle_relator(spec: BundleSpec) -> Poly4:
    if spec.is_trivial:
        raise TrivialBundle("the trivial bundle has no defining relator")
    p = Poly4({(i, j, 0, 0): c for (i, j), c in spec.p.terms.items()})
    return X ** spec.m * V - Y ** spec.n * U - p


def nf_bundle(f: Poly4, spec: BundleSpec) -> Poly4:
    return nf_mod_relator(f, bundle_relator(spec))


def verify_identity(lhs: Poly4, rhs: Poly4, spec: BundleSpec) -> IdentityCheck:
    return IdentityCheck(spec, lhs, rhs, nf_bundle(lhs - rhs, spec))


def example_polys(constants: Mapping = EXAMPLE_CONSTANTS) -> tuple[Poly4, Poly4, Poly4]:
    parts = {"a": Poly4.zero(), "b": Poly4.zero(), "w": Poly4.zero()}
    for name, (exps, c) in constants.items():
        key = name.split(":")[0]
        parts[key] = parts[key] + Poly4.monomial(exps, c)
    return parts["a"], parts["b"], parts["w"]


def printed_fiber(a: Poly4, b: Poly4) -> Poly4:
    return Y + a + a * b


def mutated_constants(name: str, delta=Fraction(1, 16)) -> dict:
    exps, c = EXAMPLE_CONSTANTS[name]
    out = dict(EXAMPLE_CONSTANTS)
    out[name] = (exps, c + delta)
    return out


def verify_example_X22_X31(constants: Mapping = EXAMPLE_CONSTANTS, bundle: BundleSpec = X22,
                           fiber: str = "printed") -> IdentityCheck:
    """Check ``b * U - a^3 * w == 1`` modulo the relator of ``bundle``.

    ``fiber`` selects U: ``"printed"`` is ``y + a + a*b``, ``"corrected"`` is
    ``CORRECTED_FIBER``.
    """
    a, b, w = example_polys(constants)
    if fiber == "printed":
        fib = printed_fiber(a, b)
    elif fiber == "corrected":
        fib = CORRECTED_FIBER
    else:
        raise ValueError(f"unknown fiber choice {fiber!r}")
    return verify_identity(b * fib - a ** 3 * w, Poly4.one(), bundle)

"""Isomorphy verdicts for total spaces of bundles over the punctured plane.

``compare`` is a partial decision procedure. The rules, in order:

1. both trivial                          -> VarietyIsomorphic
2. exactly one trivial                   -> NotIsomorphic (affine vs strictly quasi-affine)
3. classes proportional                  -> BundleIsomorphic (rescale the Ga-action)
4. both homogeneous of the same degree   -> VarietyIsomorphic
5. exactly one x^{-1}y^{-1} coeff. zero  -> NotIsomorphic (de Rham H^3 generator)
6. anything else                         -> Unknown

Whether distinct homogeneous degrees >= 3 can give isomorphic varieties is
not decided by any of these rules, so ``Unknown`` is a real answer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cech import BundleSpec, CechClass, bundle_class, homogeneous_degree
from .errors import TrivialBundle


class Verdict(str, enum.Enum):
    BUNDLE_ISOMORPHIC = "BundleIsomorphic"
    VARIETY_ISOMORPHIC = "VarietyIsomorphic"
    NOT_ISOMORPHIC = "NotIsomorphic"
    UNKNOWN = "Unknown"


RULE_BOTH_TRIVIAL = "both-trivial"
RULE_AFFINE = "Prop-affine"
RULE_SCALAR = "scalar-reparametrization"
RULE_SAME_DEGREE = "Thm-same-degree"
RULE_DE_RHAM = "Thm-deRham"
RULE_OPEN = "undecided"


@dataclass(frozen=True)
class IsoVerdict:
    verdict: Verdict
    reason: str
    witness: dict[str, Any] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.verdict is Verdict.NOT_ISOMORPHIC and not self.witness:
            raise ValueError("NotIsomorphic needs a witness")

    @property
    def isomorphic(self) -> bool | None:
        if self.verdict is Verdict.UNKNOWN:
            return None
        return self.verdict is not Verdict.NOT_ISOMORPHIC


def h3_coefficient(spec: BundleSpec) -> Fraction:
    """Coefficient of x^{-1} y^{-1} in the class (0 for the trivial bundle).

    Nonzero exactly when a nowhere-vanishing 3-form generates H^3_dR of the
    total space; equivalently ``deg p = m + n - 2``.
    """
    return bundle_class(spec).coefficient(-1, -1)


def equivariant_isomorphic(d1: int, d2: int) -> bool:
    if d1 < 2 or d2 < 2:
        raise ValueError("homogeneous degrees are given as d >= 2")
    return d1 == d2


def scalar_ratio(a: CechClass, b: CechClass) -> Fraction | None:
    """The lambda with ``b == lambda * a``, if one exists and both are nonzero."""
    if a.is_zero() or b.is_zero() or a.terms.keys() != b.terms.keys():
        return None
    ratios = {b.terms[e] / a.terms[e] for e in a.terms}
    return ratios.pop() if len(ratios) == 1 else None


def compare(a: BundleSpec, b: BundleSpec) -> IsoVerdict:
    if a.is_trivial and b.is_trivial:
        return IsoVerdict(Verdict.VARIETY_ISOMORPHIC, RULE_BOTH_TRIVIAL, {"trivial": True})
    if a.is_trivial or b.is_trivial:
        return IsoVerdict(Verdict.NOT_ISOMORPHIC, RULE_AFFINE,
                          {"affine": [not a.is_trivial, not b.is_trivial]})

    ca, cb = bundle_class(a), bundle_class(b)
    lam = scalar_ratio(ca, cb)
    if lam is not None:
        return IsoVerdict(Verdict.BUNDLE_ISOMORPHIC, RULE_SCALAR, {"scalar": lam})

    da, db = homogeneous_degree(ca), homogeneous_degree(cb)
    if da is not None and da == db:
        return IsoVerdict(Verdict.VARIETY_ISOMORPHIC, RULE_SAME_DEGREE, {"degree": da})

    ha, hb = ca.coefficient(-1, -1), cb.coefficient(-1, -1)
    if (ha == 0) != (hb == 0):
        return IsoVerdict(Verdict.NOT_ISOMORPHIC, RULE_DE_RHAM, {"h3": [ha, hb]})

    # both homogeneous of degree -2 would already be proportional (rule 3)
    return IsoVerdict(Verdict.UNKNOWN, RULE_OPEN, {"degrees": [da, db], "h3": [ha, hb]})


SL2 = BundleSpec.standard(1, 1)

TOPOLOGY_NOTE = "diffeomorphic to A2* x R2; the real sphere S3 is a strong deformation retract"


def exoticity_report(spec: BundleSpec) -> dict[str, Any]:
    """Summarise how ``spec`` compares with SL2 = X_{1,1}, the usual affine 3-sphere."""
    if spec.is_trivial:
        raise TrivialBundle("the trivial bundle is not affine, hence not a sphere candidate")
    c = bundle_class(spec)
    h3 = c.coefficient(-1, -1)
    lam = scalar_ratio(bundle_class(SL2), c)
    if lam is not None:
        vs = IsoVerdict(Verdict.BUNDLE_ISOMORPHIC, RULE_SCALAR, {"scalar": lam})
    elif h3 == 0:
        vs = IsoVerdict(Verdict.NOT_ISOMORPHIC, RULE_DE_RHAM, {"h3": [Fraction(1), h3]})
    else:
        vs = IsoVerdict(Verdict.UNKNOWN, RULE_OPEN, {"h3": [Fraction(1), h3]})
    return {
        "topology": TOPOLOGY_NOTE,
        "homogeneous_degree": homogeneous_degree(c),
        "h3": h3,
        "vs_sl2": vs,
        "exotic_sphere": None if vs.isomorphic is None else not vs.isomorphic,
    }

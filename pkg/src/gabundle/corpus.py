"""Named bundles used throughout the docs, tests and CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .cech import BundleSpec
from .laurent import LaurentPoly2


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: BundleSpec
    notes: str


def _xy_plus_one() -> LaurentPoly2:
    return LaurentPoly2({(0, 0): 1, (1, 1): 1})


CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("sl2", BundleSpec.standard(1, 1), "X_{1,1} = SL2 = {xv - yu = 1}, the affine 3-sphere; class (xy)^-1"),
    CorpusEntry("x21", BundleSpec.standard(2, 1), "X_{2,1} = {x^2 v - yu = 1}; degree -3, exotic 3-sphere"),
    CorpusEntry("x31", BundleSpec.standard(3, 1), "X_{3,1} = {x^3 v - yu = 1}; degree -4"),
    CorpusEntry("x22", BundleSpec.standard(2, 2), "X_{2,2} = {x^2 v - y^2 u = 1}; degree -4, isomorphic to X_{3,1} as a variety"),
    CorpusEntry("x41", BundleSpec.standard(4, 1), "X_{4,1} = {x^4 v - yu = 1}; degree -5"),
    CorpusEntry("x_22_deformed", BundleSpec(2, 2, _xy_plus_one()),
                "{x^2 v - y^2 u = 1 + xy}; biholomorphic to X_{2,2} but not isomorphic to it"),
    CorpusEntry("trivial", BundleSpec.trivial(), "A2* x A1; strictly quasi-affine"),
)

BY_NAME = {e.name: e for e in CORPUS}
assert len(BY_NAME) == len(CORPUS)


def get(name: str) -> BundleSpec:
    return BY_NAME[name].spec

"""Exact computations with Ga-bundles over the punctured affine plane."""

from .autact import (Linear, PlaneAuto, Triangular, base_change_equivalent, compose, pullback,
                     pullback_dual_path, pullback_linear, pullback_triangular)
from .cech import (BinaryForm, BundleSpec, CechClass, HomogComponent, bundle_class, canonicalize_bundle,
                   decompose, dual_form, homogeneous_degree, is_affine, normalize, serre_pair)
from .classify import IsoVerdict, Verdict, compare, equivariant_isomorphic, exoticity_report, h3_coefficient
from .descent import (P1Class, P1Cocycle, SectionData, descend, dg_find_section, dg_pick_lambda,
                      dg_r_polynomial, normalize_p1)
from .laurent import LaurentPoly2, Poly1, Poly4, nf_mod_relator
from .verify import IdentityCheck, nf_bundle, verify_example_X22_X31, verify_identity

__version__ = "0.1.0"

__all__ = [
    "BinaryForm",
    "BundleSpec",
    "CechClass",
    "HomogComponent",
    "IdentityCheck",
    "IsoVerdict",
    "LaurentPoly2",
    "Linear",
    "P1Class",
    "P1Cocycle",
    "PlaneAuto",
    "Poly1",
    "Poly4",
    "SectionData",
    "Triangular",
    "Verdict",
    "base_change_equivalent",
    "bundle_class",
    "canonicalize_bundle",
    "compare",
    "compose",
    "decompose",
    "descend",
    "dg_find_section",
    "dg_pick_lambda",
    "dg_r_polynomial",
    "dual_form",
    "equivariant_isomorphic",
    "exoticity_report",
    "h3_coefficient",
    "homogeneous_degree",
    "is_affine",
    "nf_bundle",
    "nf_mod_relator",
    "normalize",
    "normalize_p1",
    "pullback",
    "pullback_dual_path",
    "pullback_linear",
    "pullback_triangular",
    "serre_pair",
    "verify_example_X22_X31",
    "verify_identity",
]

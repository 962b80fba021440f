"""JSON encoding of every domain type.

Rationals are always strings ("-3/8", "5"); JSON integers are accepted on
input for coefficients but floats never are. Term lists are emitted sorted
by exponent tuple so output is byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .autact import Linear, PlaneAuto, Triangular
from .cech import BinaryForm, BundleSpec, CechClass, HomogComponent, normalize
from .classify import IsoVerdict
from .descent import P1Class, P1Cocycle, SectionData
from .errors import SchemaError
from .laurent import LaurentPoly2, Poly1, Poly4, parse_rat
from .verify import IdentityCheck


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def rat_out(c: Fraction) -> str:
    return str(c)


def rat_in(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise SchemaError(f"rationals must be strings, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if not isinstance(v, str):
        raise SchemaError(f"rationals must be strings, got {v!r}")
    try:
        return parse_rat(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc)) from None


def _int_in(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"{what} must be an integer, got {v!r}")
    return v


def _obj(doc, what: str) -> dict:
    if not isinstance(doc, dict):
        raise SchemaError(f"{what} must be a JSON object")
    return doc


def _field(doc: dict, key: str, what: str):
    try:
        return doc[key]
    except KeyError:
        raise SchemaError(f"{what} is missing {key!r}") from None


def _terms(doc, keys: tuple[str, ...], what: str) -> list[tuple[tuple[int, ...], Fraction]]:
    doc = _obj(doc, what)
    terms = _field(doc, "terms", what)
    if not isinstance(terms, list):
        raise SchemaError(f"{what}.terms must be a list")
    out = []
    for t in terms:
        t = _obj(t, f"{what} term")
        out.append((tuple(_int_in(_field(t, k, what), k) for k in keys), rat_in(_field(t, "c", what))))
    return out


def _terms_out(items, keys: tuple[str, ...]) -> dict:
    return {"terms": [dict(zip(keys, e), c=rat_out(c)) for e, c in sorted(items)]}


# Laurent polynomials and classes -------------------------------------------

def laurent_to_json(f: LaurentPoly2 | CechClass) -> dict:
    return _terms_out(f.terms.items(), ("x", "y"))


class_to_json = laurent_to_json


def laurent_from_json(doc) -> LaurentPoly2:
    return LaurentPoly2(_terms(doc, ("x", "y"), "LaurentPoly2"))


def class_from_json(doc) -> CechClass:
    """Parse a cocycle; coboundary terms, if any, are dropped."""
    return normalize(laurent_from_json(doc))


def poly4_to_json(f: Poly4) -> dict:
    return _terms_out(f.terms.items(), ("x", "y", "u", "v"))


def poly4_from_json(doc) -> Poly4:
    try:
        return Poly4(_terms(doc, ("x", "y", "u", "v"), "Poly4"))
    except ValueError as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(str(exc)) from None


def poly1_to_json(f: Poly1) -> dict:
    return {"coeffs": [rat_out(c) for c in f.coeffs]}


def poly1_from_json(doc) -> Poly1:
    coeffs = _field(_obj(doc, "Poly1"), "coeffs", "Poly1")
    if not isinstance(coeffs, list):
        raise SchemaError("Poly1.coeffs must be a list")
    return Poly1(rat_in(c) for c in coeffs)


# Bundles -------------------------------------------------------------------

def bundle_to_json(spec: BundleSpec) -> dict:
    if spec.is_trivial:
        return {"trivial": True}
    return {"m": spec.m, "n": spec.n, "p": laurent_to_json(spec.p)}


def bundle_from_json(doc) -> BundleSpec:
    doc = _obj(doc, "BundleSpec")
    if doc.get("trivial") is True:
        return BundleSpec.trivial()
    m = _int_in(_field(doc, "m", "BundleSpec"), "m")
    n = _int_in(_field(doc, "n", "BundleSpec"), "n")
    p = laurent_from_json(_field(doc, "p", "BundleSpec"))
    return BundleSpec(m, n, p)


# Weight components and forms ------------------------------------------------

def component_to_json(h: HomogComponent) -> dict:
    return {"d": h.d, "coeffs": [rat_out(c) for c in h.coeffs]}


def component_from_json(doc) -> HomogComponent:
    doc = _obj(doc, "HomogComponent")
    d = _int_in(_field(doc, "d", "HomogComponent"), "d")
    coeffs = _field(doc, "coeffs", "HomogComponent")
    if not isinstance(coeffs, list):
        raise SchemaError("HomogComponent.coeffs must be a list")
    try:
        return HomogComponent(d, tuple(rat_in(c) for c in coeffs))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


def form_to_json(v: BinaryForm) -> dict:
    return {"degree": v.degree, "coeffs": [rat_out(c) for c in v.coeffs]}


def form_from_json(doc) -> BinaryForm:
    doc = _obj(doc, "BinaryForm")
    deg = _int_in(_field(doc, "degree", "BinaryForm"), "degree")
    coeffs = _field(doc, "coeffs", "BinaryForm")
    if not isinstance(coeffs, list):
        raise SchemaError("BinaryForm.coeffs must be a list")
    try:
        return BinaryForm(deg, tuple(rat_in(c) for c in coeffs))
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


# Automorphism words --------------------------------------------------------

def auto_to_json(a: PlaneAuto) -> dict:
    word = []
    for g in a.word:
        if isinstance(g, Linear):
            word.append({"linear": [[rat_out(c) for c in row] for row in g.matrix]})
        else:
            word.append({"triangular": {"s": [rat_out(c) for c in g.s.coeffs]}})
    return {"word": word}


def auto_from_json(doc) -> PlaneAuto:
    word = _field(_obj(doc, "PlaneAuto"), "word", "PlaneAuto")
    if not isinstance(word, list):
        raise SchemaError("PlaneAuto.word must be a list")
    gens = []
    for g in word:
        g = _obj(g, "generator")
        if "linear" in g:
            rows = g["linear"]
            if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
                raise SchemaError("linear generator must be a 2x2 list of rationals")
            gens.append(Linear(tuple(tuple(rat_in(c) for c in r) for r in rows)))
        elif "triangular" in g:
            gens.append(Triangular(poly1_from_json({"coeffs": _field(_obj(g["triangular"], "triangular"), "s", "triangular")})))
        else:
            raise SchemaError(f"unknown generator {g!r}")
    return PlaneAuto(tuple(gens))


# P^1 side ------------------------------------------------------------------

def p1cocycle_to_json(q: P1Cocycle) -> dict:
    return {"terms": [{"z": k, "c": rat_out(c)} for k, c in q.sorted_terms()]}


def p1cocycle_from_json(doc) -> P1Cocycle:
    return P1Cocycle({e[0]: c for e, c in _terms(doc, ("z",), "P1Cocycle")})


def p1class_to_json(c: P1Class) -> dict:
    return {"d": c.d, "coeffs": [rat_out(a) for a in c.coeffs]}


def p1class_from_json(doc) -> P1Class:
    h = component_from_json(doc)
    return P1Class(h.d, h.coeffs)


def section_to_json(sd: SectionData) -> dict:
    return {
        "d": sd.d,
        "lambda": rat_out(sd.lam),
        "s": poly1_to_json(sd.s),
        "alpha": poly1_to_json(sd.alpha),
        "beta": poly1_to_json(sd.beta),
        "r": poly1_to_json(sd.r),
        "s_at_lambda": rat_out(sd.s(sd.lam)),
        "f1": sd.f1(),
    }


def section_from_json(doc) -> SectionData:
    doc = _obj(doc, "SectionData")
    return SectionData(
        _int_in(_field(doc, "d", "SectionData"), "d"),
        rat_in(_field(doc, "lambda", "SectionData")),
        poly1_from_json(_field(doc, "s", "SectionData")),
        poly1_from_json(_field(doc, "alpha", "SectionData")),
        poly1_from_json(_field(doc, "beta", "SectionData")),
        poly1_from_json(_field(doc, "r", "SectionData")),
    )


# Verdicts, reports, identity checks ------------------------------------------

def _plain(v):
    if isinstance(v, Fraction):
        return rat_out(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, IsoVerdict):
        return verdict_to_json(v)
    return v


def verdict_to_json(v: IsoVerdict) -> dict:
    return {"verdict": v.verdict.value, "rule": v.reason, "witness": _plain(v.witness)}


def report_to_json(report: dict) -> dict:
    return _plain(report)


def identity_to_json(chk: IdentityCheck) -> dict:
    return {
        "bundle": bundle_to_json(chk.bundle),
        "lhs": poly4_to_json(chk.lhs),
        "rhs": poly4_to_json(chk.rhs),
        "residual": poly4_to_json(chk.residual),
        "passes": chk.passes,
    }


def identity_from_json(doc) -> IdentityCheck:
    doc = _obj(doc, "IdentityCheck")
    return IdentityCheck(
        bundle_from_json(_field(doc, "bundle", "IdentityCheck")),
        poly4_from_json(_field(doc, "lhs", "IdentityCheck")),
        poly4_from_json(_field(doc, "rhs", "IdentityCheck")),
        poly4_from_json(_field(doc, "residual", "IdentityCheck")),
    )

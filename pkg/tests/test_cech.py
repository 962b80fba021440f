from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from gabundle.cech import (BinaryForm, BundleSpec, CechClass, HomogComponent, bundle_class, bundle_from_class,
                           canonicalize_bundle, compose_components, decompose, dual_form, homogeneous_degree,
                           is_affine, normalize, residue_pairing, serre_pair)
from gabundle.errors import DegreeMismatch, InvalidBundleSpec
from gabundle.laurent import LaurentPoly2

from conftest import classes, components, laurent_polys

x, y = LaurentPoly2.gen("x"), LaurentPoly2.gen("y")
one = LaurentPoly2.one()


def mono(i, j, c=1):
    return LaurentPoly2.monomial((i, j), c)


def cls(*terms):
    return CechClass({(i, j): c for i, j, c in terms})


def test_normalize_examples():
    assert normalize(mono(-2, -1) + 3 * x + mono(-1, 2)) == cls((-2, -1, 1))
    assert normalize(mono(-1, -1)) == cls((-1, -1, 1))
    assert normalize(LaurentPoly2.zero()).is_zero()


@settings(max_examples=200)
@given(laurent_polys(), laurent_polys())
def test_normalize_is_linear_projection(f, g):
    nf = normalize(f)
    assert normalize(nf.as_laurent()) == nf
    assert normalize(f + g) == nf + normalize(g)
    for (i, j), c in f.terms.items():
        kept = normalize(mono(i, j, c))
        assert kept.is_zero() == (i >= 0 or j >= 0)


def test_class_rejects_coboundary_terms():
    with pytest.raises(ValueError):
        CechClass({(0, -1): 1})


def test_bundle_class_examples():
    assert bundle_class(BundleSpec.standard(1, 1)) == cls((-1, -1, 1))
    assert bundle_class(BundleSpec(2, 2, one + x * y)) == cls((-2, -2, 1), (-1, -1, 1))
    assert bundle_class(BundleSpec.trivial()).is_zero()


@pytest.mark.parametrize("m,n,p", [
    (0, 1, one), (1, 0, one), (2, 2, x + x * y), (2, 2, y), (2, 2, x ** 2 + one), (2, 2, one + y ** 2),
    (2, 2, LaurentPoly2.zero()), (2, 2, mono(-1, 0) + one),
])
def test_invalid_specs(m, n, p):
    with pytest.raises(InvalidBundleSpec):
        BundleSpec(m, n, p)


def test_canonicalize_examples():
    assert canonicalize_bundle(3, 2, x * (one + y)) == BundleSpec(2, 2, one + y)
    assert canonicalize_bundle(2, 2, one + x * y) == BundleSpec(2, 2, one + x * y)
    assert canonicalize_bundle(1, 1, x).is_trivial


@given(classes())
def test_class_bundle_dictionary_is_bijective(c):
    spec = bundle_from_class(c)
    assert bundle_class(spec) == c
    if not spec.is_trivial:
        assert canonicalize_bundle(spec.m, spec.n, spec.p) == spec


@given(laurent_polys(lo=0, hi=4))
def test_canonicalize_round_trip(p):
    spec = canonicalize_bundle(3, 3, p)
    if not spec.is_trivial:
        assert canonicalize_bundle(spec.m, spec.n, bundle_class(spec).as_laurent().shift((spec.m, spec.n))) == spec


def test_is_affine():
    assert is_affine(BundleSpec.standard(1, 1))
    assert not is_affine(BundleSpec.trivial())
    assert is_affine(BundleSpec(2, 2, one + x * y))


def test_decompose_examples():
    comps = decompose(cls((-2, -2, 1), (-1, -1, 1)))
    assert [h.d for h in comps] == [2, 4]
    assert comps[0].coeffs == (1,) and comps[1].coeffs == (0, 1, 0)
    (h,) = decompose(cls((-3, -1, 1), (-2, -2, 2)))
    assert h.d == 4 and h.coeffs == (0, 2, 1)
    assert decompose(CechClass()) == []


@given(classes())
def test_decompose_sums_back(c):
    comps = decompose(c)
    assert compose_components(comps) == c
    assert [h.d for h in comps] == sorted({h.d for h in comps})
    for h in comps:
        assert set(h.to_class().weights()) <= {h.d}


def test_homogeneous_degree():
    for m in range(1, 5):
        for n in range(1, 5):
            assert homogeneous_degree(bundle_class(BundleSpec.standard(m, n))) == -(m + n)
    assert homogeneous_degree(cls((-2, -2, 1), (-1, -1, 1))) is None
    assert homogeneous_degree(cls((-2, -1, 1), (-1, -2, 1))) == -3
    assert homogeneous_degree(CechClass()) is None


def test_component_shape():
    with pytest.raises(ValueError):
        HomogComponent(3, (1,))
    with pytest.raises(ValueError):
        HomogComponent(1, ())
    with pytest.raises(ValueError):
        BinaryForm(1, (1,))


def test_serre_pair_examples():
    for m in range(1, 5):
        for n in range(1, 5):
            (h,) = decompose(cls((-m, -n, 1)))
            assert serre_pair(h, BinaryForm.monomial(m + n - 2, m - 1)) == 1
    (h,) = decompose(cls((-2, -1, 1)))
    assert serre_pair(h, BinaryForm.monomial(1, 0)) == 0
    (h,) = decompose(cls((-1, -2, 2), (-2, -1, 3)))
    assert serre_pair(h, BinaryForm.monomial(1, 1)) == 3
    with pytest.raises(DegreeMismatch):
        serre_pair(h, BinaryForm.monomial(2, 0))


@pytest.mark.parametrize("d", range(2, 11))
def test_serre_gram_identity(d):
    gram = [[serre_pair(HomogComponent(d, tuple(int(i == k) for i in range(1, d))), BinaryForm.monomial(d - 2, a))
             for a in range(d - 1)] for k in range(1, d)]
    assert gram == [[int(r == s) for s in range(d - 1)] for r in range(d - 1)]


@given(components())
def test_serre_pair_is_residue_pairing(h):
    # independent route: coefficient of (xy)^{-1} in the product of Laurent polynomials
    for a in range(h.d - 1):
        v = BinaryForm.monomial(h.d - 2, a, 3)
        assert serre_pair(h, v) == residue_pairing(h.to_class(), v.to_laurent())


def test_dual_form_examples():
    (h,) = decompose(cls((-2, -1, 1)))
    assert dual_form(h).to_laurent() == x
    (h,) = decompose(cls((-1, -1, 1)))
    assert dual_form(h).to_laurent() == one
    (h,) = decompose(cls((-1, -3, 1), (-3, -1, 4)))
    assert dual_form(h).to_laurent() == y ** 2 + 4 * x ** 2


def test_class_arithmetic():
    a, b = cls((-1, -1, 1)), cls((-2, -1, Fraction(1, 2)))
    assert (a + b) - b == a
    assert -a + a == CechClass()
    assert a.scale(3).coefficient(-1, -1) == 3
    assert len({a, cls((-1, -1, 1))}) == 1

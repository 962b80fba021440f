from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gabundle import corpus, jsonio
from gabundle.autact import PlaneAuto
from gabundle.cech import BinaryForm, bundle_from_class
from gabundle.descent import P1Class, P1Cocycle, dg_find_section
from gabundle.errors import SchemaError
from gabundle.laurent import LaurentPoly2, Poly1
from gabundle.verify import verify_example_X22_X31

from conftest import classes, components, laurent_polys, poly4s, small_rats, words


def through_text(doc):
    return json.loads(jsonio.dumps(doc))


@given(laurent_polys())
def test_laurent_round_trip(f):
    assert jsonio.laurent_from_json(through_text(jsonio.laurent_to_json(f))) == f


@given(classes())
def test_class_and_bundle_round_trip(c):
    assert jsonio.class_from_json(through_text(jsonio.class_to_json(c))) == c
    spec = bundle_from_class(c)
    assert jsonio.bundle_from_json(through_text(jsonio.bundle_to_json(spec))) == spec


@given(poly4s())
def test_poly4_round_trip(f):
    assert jsonio.poly4_from_json(through_text(jsonio.poly4_to_json(f))) == f


@given(st.lists(small_rats, max_size=6))
def test_poly1_round_trip(cs):
    p = Poly1(cs)
    assert jsonio.poly1_from_json(through_text(jsonio.poly1_to_json(p))) == p


@given(components())
def test_component_and_p1_round_trip(h):
    assert jsonio.component_from_json(through_text(jsonio.component_to_json(h))) == h
    c = P1Class(h.d, h.coeffs)
    assert jsonio.p1class_from_json(through_text(jsonio.p1class_to_json(c))) == c
    q = P1Cocycle({k: v for k, v in enumerate(h.coeffs, -1)})
    assert jsonio.p1cocycle_from_json(through_text(jsonio.p1cocycle_to_json(q))) == q
    v = BinaryForm(h.d - 2, h.coeffs)
    assert jsonio.form_from_json(through_text(jsonio.form_to_json(v))) == v


@given(words)
def test_auto_round_trip(a):
    assert jsonio.auto_from_json(through_text(jsonio.auto_to_json(a))) == a


def test_section_and_identity_round_trip():
    sd = dg_find_section(4, Poly1([0, 1, -2, Fraction(1, 3)]), 2)
    assert jsonio.section_from_json(through_text(jsonio.section_to_json(sd))) == sd
    chk = verify_example_X22_X31()
    back = jsonio.identity_from_json(through_text(jsonio.identity_to_json(chk)))
    assert back == chk and back.passes is False


def test_rationals_are_strings():
    doc = jsonio.laurent_to_json(LaurentPoly2({(-1, -2): Fraction(-3, 8), (0, 0): 5}))
    assert doc == {"terms": [{"x": -1, "y": -2, "c": "-3/8"}, {"x": 0, "y": 0, "c": "5"}]}


@pytest.mark.parametrize("bad", [1.5, True, None, [1], "0.25", "1/0"])
def test_bad_rationals(bad):
    with pytest.raises(SchemaError):
        jsonio.rat_in(bad)


@pytest.mark.parametrize("doc", [
    [], {"term": []}, {"terms": {}}, {"terms": [{"x": 1, "c": "1"}]}, {"terms": [{"x": 1.0, "y": 0, "c": "1"}]},
])
def test_bad_laurent(doc):
    with pytest.raises(SchemaError):
        jsonio.laurent_from_json(doc)


def test_bad_auto():
    with pytest.raises(SchemaError):
        jsonio.auto_from_json({"word": [{"rotate": 1}]})
    with pytest.raises(SchemaError):
        jsonio.auto_from_json({"word": [{"linear": [[1, 0]]}]})


def test_class_input_drops_coboundaries():
    doc = {"terms": [{"x": -1, "y": -1, "c": "1"}, {"x": 2, "y": -3, "c": "4"}]}
    assert jsonio.class_to_json(jsonio.class_from_json(doc)) == {"terms": [{"x": -1, "y": -1, "c": "1"}]}


def test_trivial_bundle_json():
    assert jsonio.bundle_to_json(corpus.get("trivial")) == {"trivial": True}
    assert jsonio.bundle_from_json({"trivial": True}).is_trivial


def test_empty_word():
    assert jsonio.auto_from_json({"word": []}) == PlaneAuto.identity()

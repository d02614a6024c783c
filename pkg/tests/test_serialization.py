import json

import pytest

from app.algebra.nullfiliform import build_mu0
from app.algebra.tp_structures import build_tp_bracket
from app.models import AlgebraPair, AlphaParams
from app.utils.errors import InputError
from app.utils.rationals import format_rational, parse_rational, parse_rational_list
from app.utils.serialization import document_to_pair, emit, pair_to_document, parse_algebra

MU0_2 = '{"dim":2,"dot":[{"i":1,"j":1,"k":2,"c":"1"}]}'


def test_parse_mu0_2():
    pair = document_to_pair(parse_algebra(MU0_2))
    assert pair.dot == build_mu0(2)
    assert pair.bracket.is_zero


def test_rationals_are_normalised():
    doc = parse_algebra('{"dim":2,"dot":[{"i":1,"j":1,"k":2,"c":"4/6"}]}')
    assert doc.dot[0].c == "2/3"
    assert json.loads(emit(doc))["dot"][0]["c"] == "2/3"


def test_emit_parse_is_stable():
    text = '{"meta":{"name":"x"},"dim":3,"dot":[{"c":"-10/4","k":3,"j":2,"i":1}],"bracket":[]}'
    once = emit(parse_algebra(text))
    assert emit(parse_algebra(once)) == once
    assert once == '{"bracket": [], "dim": 3, "dot": [{"c": "-5/2", "i": 1, "j": 2, "k": 3}], "meta": {"name": "x"}}'


def test_pair_document_round_trip():
    pair = AlgebraPair(dot=build_mu0(4), bracket=build_tp_bracket(AlphaParams.of(4, ["1/2", 0, -3])))
    assert document_to_pair(parse_algebra(emit(pair_to_document(pair)))) == pair


@pytest.mark.parametrize(
    "text,location",
    [
        ('{"dim":2,"dot":[{"i":1,"j":1,"k":2,"c":"1.5"}]}', "dot[0].c"),
        ('{"dim":2,"dot":[{"i":1,"j":1,"k":2,"c":"1/0"}]}', "dot[0].c"),
        ('{"dim":2,"dot":[{"i":1,"j":1,"k":3,"c":"1"}]}', "dot[0].k"),
        ('{"dim":2,"dot":[],"bracket":[{"i":0,"j":1,"k":1,"c":"1"}]}', "bracket[0].i"),
        ('{"dim":2,"dot":[{"i":1,"j":1,"k":2,"c":1.5}]}', "dot[0].c"),
        ('{"dim":2,"dot":[{"i":true,"j":1,"k":2,"c":"1"}]}', "dot[0].i"),
        ('{"dim":2,"dot":[{"i":1,"j":"1","k":2,"c":"1"}]}', "dot[0].j"),
        ('{"dim":2,"dot":[{"i":1,"j":1,"k":2.0,"c":"1"}]}', "dot[0].k"),
        ('{"dim":"2","dot":[]}', "dim"),
        ('{"dim":true,"dot":[]}', "dim"),
    ],
)
def test_bad_documents_report_location(text, location):
    with pytest.raises(InputError) as excinfo:
        parse_algebra(text)
    assert excinfo.value.location == location


def test_malformed_json():
    with pytest.raises(InputError) as excinfo:
        parse_algebra('{"dim": 2,')
    assert excinfo.value.location.startswith("line 1")


def test_rational_helpers():
    assert parse_rational(" -4/6 ") == parse_rational("-2/3")
    assert format_rational(parse_rational("10/5")) == "2"
    assert parse_rational_list("1,0,3/4", "--alpha") == [1, 0, parse_rational("3/4")]
    assert parse_rational_list("", "--alpha") == []
    with pytest.raises(InputError) as excinfo:
        parse_rational_list("1,x", "--alpha")
    assert excinfo.value.location == "--alpha[1]"

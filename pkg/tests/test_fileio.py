from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smoothrough.algebra import AxiomError
from smoothrough.examples import PairingSpec, build_pairing_algebra, matrix_algebra
from smoothrough.fileio import (
    ParseError, algebra_file_obj, dumps, load_json, morita_file_obj, parse_algebra_file, parse_morita_file,
    read_file,
)
from smoothrough.morita import matrix_witness, verify_morita

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def roundtrip(a, modules=None):
    text = dumps(algebra_file_obj(a, modules))
    return parse_algebra_file(load_json(text)), text


def test_algebra_roundtrip_is_exact():
    pa = build_pairing_algebra(PairingSpec(2, 2, ("1/3", 0, "-2", "7/5")))
    f, text = roundtrip(pa.algebra, {"V": pa.v_module})
    assert f.algebra.mu.mat == pa.algebra.mu.mat
    assert f.modules["V"].act_left.mat == pa.v_module.act_left.mat
    assert '"1/3"' in text and '"7/5"' in text
    assert dumps(algebra_file_obj(f.algebra, f.modules)) == text


def test_unit_roundtrip():
    f, _ = roundtrip(matrix_algebra(2))
    assert f.algebra.unit.mat == matrix_algebra(2).unit.mat


def test_sample_files_parse():
    f = parse_algebra_file(read_file(SAMPLES / "pairing_2_1.json"))
    assert f.algebra.dim == 2 and list(f.modules) == ["A", "0-action", "A⊕0-action", "V"]
    g = parse_algebra_file(read_file(SAMPLES / "matrix_2.json"))
    assert g.algebra.is_unital and "col2" in g.modules


def test_nonassociative_sample_raises_axiom_error():
    with pytest.raises(AxiomError) as err:
        parse_algebra_file(read_file(SAMPLES / "nonassociative.json"))
    assert err.value.law == "associativity"


def test_morita_file_roundtrip():
    w, samples = parse_morita_file(read_file(SAMPLES / "morita_m2.json"))
    assert verify_morita(w, **samples).passed
    again, _ = parse_morita_file(load_json(dumps(morita_file_obj(w, samples))))
    assert again.pq.mat == w.pq.mat and again.qp.mat == w.qp.mat
    assert again.P.act_left.mat == w.P.act_left.mat
    w2 = matrix_witness(2)
    back, _ = parse_morita_file(load_json(dumps(morita_file_obj(w2))))
    assert back.Q.act_right.mat == w2.Q.act_right.mat


def base_obj() -> dict:
    return json.loads(dumps(algebra_file_obj(matrix_algebra(1))))


@pytest.mark.parametrize("value", [0.5, True, "0.5", "1e3", "1/0", None, "x"])
def test_non_rational_entries_are_rejected(value):
    obj = base_obj()
    obj["structure_constants"][0][0][0] = value
    with pytest.raises(ParseError) as err:
        parse_algebra_file(obj)
    assert err.value.location == "$.structure_constants[0][0][0]"


def test_parse_error_locations():
    with pytest.raises(ParseError) as err:
        load_json('{"format": 1,\n "dim": }', "f.json")
    assert "line 2" in err.value.location
    obj = base_obj()
    del obj["dim"]
    with pytest.raises(ParseError) as err:
        parse_algebra_file(obj)
    assert err.value.location == "$.dim"
    obj = base_obj()
    obj["format"] = 2
    with pytest.raises(ParseError, match="format"):
        parse_algebra_file(obj)
    obj = base_obj()
    obj["structure_constants"] = [[["1", "0"]]]
    with pytest.raises(ParseError):
        parse_algebra_file(obj)
    with pytest.raises(ParseError):
        read_file(SAMPLES / "missing.json")


def test_integers_are_accepted():
    obj = base_obj()
    obj["structure_constants"][0][0][0] = 1
    assert parse_algebra_file(obj).algebra.mu.mat[0, 0] == 1


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.integers(1, 2), st.integers(1, 2), st.data())
@settings(max_examples=30, deadline=None)
def test_random_pairing_roundtrip(dv, dw, data):
    b = data.draw(st.lists(rationals, min_size=dv * dw, max_size=dv * dw).filter(any))
    pa = build_pairing_algebra(PairingSpec(dv, dw, tuple(str(x) for x in b)))
    f, _ = roundtrip(pa.algebra, {"V": pa.v_module})
    assert f.algebra.mu.mat == pa.algebra.mu.mat
    assert all(isinstance(x, Fraction) for x in f.algebra.mu.mat.entries())

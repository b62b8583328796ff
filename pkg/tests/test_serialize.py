import json
from fractions import Fraction as F

import pytest

from polyseq import (
    FamilyParams,
    HSpec,
    Polynomial,
    SchemaError,
    build_P_recurrence,
    lin_tensor_direct,
    make_operator,
    realize_H,
)
from polyseq.serialize import (
    canonical_dumps,
    connection_from_jsonable,
    connection_to_jsonable,
    hspec_from_jsonable,
    hspec_to_jsonable,
    matrix_from_jsonable,
    matrix_to_jsonable,
    polynomial_from_jsonable,
    polynomial_to_jsonable,
    rat_from_str,
    rat_to_str,
    read_json,
    tensor_from_jsonable,
    tensor_to_jsonable,
    write_json,
)


def test_rat_round_trip():
    for v in [F(0), F(5), F(-3), F(1, 3), F(-7, 2)]:
        assert rat_from_str(rat_to_str(v)) == v


def test_rat_to_str_lowest_terms():
    assert rat_to_str(F(2, 4)) == "1/2"
    assert rat_to_str(F(4, 2)) == "2"
    assert rat_to_str(F(-1, 2)) == "-1/2"


def test_rat_from_str_rejects_junk():
    for bad in ["", "1.5", "a", "1/0x", "--3"]:
        with pytest.raises(SchemaError):
            rat_from_str(bad)
    assert rat_from_str(3) == F(3)


def test_canonical_dumps_stable():
    a = canonical_dumps({"b": 1, "a": [2, 3]})
    assert a == '{"a":[2,3],"b":1}\n'
    assert canonical_dumps({"a": [2, 3], "b": 1}) == a


def test_matrix_round_trip():
    m = make_operator("D", 4)
    blob = matrix_to_jsonable(m)
    assert blob["size"] == 4
    assert blob["index"] == 1
    back = matrix_from_jsonable(blob)
    assert back == m
    assert back.index == 1


def test_matrix_schema_errors():
    with pytest.raises(SchemaError):
        matrix_from_jsonable({"size": 2, "rows": [["1", "0"], ["0", "1"]]})
    with pytest.raises(SchemaError):
        matrix_from_jsonable({"size": 2, "index": 0, "rows": [["1"], ["0"]]})
    with pytest.raises(SchemaError):
        matrix_from_jsonable(
            {"size": 2, "index": 0, "rows": [["1", "0"], ["0", "1"]], "extra": 1})


def test_matrix_fractions_survive_round_trip():
    spec = HSpec.from_family(FamilyParams("chebyshev", F(1, 4), F(0)))
    p = build_P_recurrence(realize_H(spec, 6)).P
    assert matrix_from_jsonable(matrix_to_jsonable(p)) == p


def test_polynomial_round_trip():
    p = Polynomial((F(1, 3), 0, 2))
    blob = polynomial_to_jsonable(p)
    assert blob == {"coeffs": ["1/3", "0", "2"]}
    assert polynomial_from_jsonable(blob) == p


def test_hspec_round_trips():
    specs = [
        HSpec.tridiagonal(beta=(1, F(1, 2)), alpha=(F(-2, 3),)),
        HSpec.from_rows([(1,), (F(2, 5), 3)]),
        HSpec.from_family(FamilyParams("chebyshev", F(2), F(1))),
        HSpec.from_family(FamilyParams("hermite", F(1, 4), F(0))),
        HSpec.from_family(FamilyParams("charlier", F(3))),
    ]
    for spec in specs:
        assert hspec_from_jsonable(hspec_to_jsonable(spec)) == spec


def test_hspec_charlier_has_no_b():
    blob = hspec_to_jsonable(HSpec.from_family(FamilyParams("charlier", F(3))))
    assert blob == {"type": "charlier", "a": "3"}


def test_hspec_family_b_defaults_to_zero():
    spec = hspec_from_jsonable({"type": "hermite", "a": "2"})
    assert spec.family.b == 0


def test_hspec_bad_type():
    with pytest.raises(SchemaError):
        hspec_from_jsonable({"type": "wilson", "a": "1"})
    with pytest.raises(SchemaError):
        hspec_from_jsonable({"beta": ["1"]})


def test_hspec_zero_a_is_schema_error():
    with pytest.raises(SchemaError):
        hspec_from_jsonable({"type": "chebyshev", "a": "0"})


def test_tensor_round_trip(hermite_pair):
    tensor = lin_tensor_direct(hermite_pair, 3)
    blob = tensor_to_jsonable(tensor)
    assert blob["n_max"] == 3
    assert len(blob["slices"]) == 7
    assert [s["k"] for s in blob["slices"]] == list(range(7))
    assert tensor_from_jsonable(blob) == tensor


def test_tensor_slice_count_checked(hermite_pair):
    blob = tensor_to_jsonable(lin_tensor_direct(hermite_pair, 2))
    blob["slices"] = blob["slices"][:-1]
    with pytest.raises(SchemaError):
        tensor_from_jsonable(blob)


def test_connection_round_trip():
    grid = [[F(1), F(0)], [F(1, 2), F(1)]]
    blob = connection_to_jsonable(1, grid)
    assert blob["m_max"] == 1
    m_max, back = connection_from_jsonable(blob)
    assert m_max == 1
    assert back == [[F(1), F(0)], [F(1, 2), F(1)]]


def test_write_json_is_canonical(tmp_path):
    path = tmp_path / "out.json"
    write_json(str(path), {"b": "2", "a": "1/2"})
    raw = path.read_text()
    assert raw == '{"a":"1/2","b":"2"}\n'
    assert read_json(str(path)) == {"a": "1/2", "b": "2"}


def test_write_then_read_byte_identical(tmp_path, hermite_pair):
    tensor = lin_tensor_direct(hermite_pair, 3)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    write_json(str(p1), tensor_to_jsonable(tensor))
    write_json(str(p2), tensor_to_jsonable(tensor_from_jsonable(read_json(str(p1)))))
    assert p1.read_bytes() == p2.read_bytes()


def test_read_json_bad_syntax(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    with pytest.raises(SchemaError):
        read_json(str(path))


def test_no_floats_anywhere(hermite_pair):
    blob = tensor_to_jsonable(lin_tensor_direct(hermite_pair, 3))
    text = canonical_dumps(blob)
    for token in json.loads(text)["slices"][2]["matrix"]:
        for cell in token:
            assert isinstance(cell, str)

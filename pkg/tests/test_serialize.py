import json
from fractions import Fraction

import pytest

from localroots.laurent import LaurentScalar
from localroots.matrices import QQ, LocalMatrix, laurent_field, padic_field
from localroots.serialize import (
    SchemaError,
    field_from_dict,
    field_to_dict,
    matrix_from_dict,
    matrix_to_dict,
    parse_laurent,
    to_jsonable,
)


def roundtrip(M):
    data = json.loads(json.dumps(matrix_to_dict(M)))
    return matrix_from_dict(data)


def test_fields_round_trip():
    for fld in (QQ, padic_field(7, 12), laurent_field(2, 2, 9), laurent_field(3)):
        assert field_from_dict(field_to_dict(fld)) == fld
    assert field_from_dict({"kind": "padic", "p": 5}, precision=9).profile.precision == 9
    with pytest.raises(SchemaError):
        field_from_dict({"kind": "real"})
    with pytest.raises(SchemaError):
        field_from_dict([])


def test_rational_matrix_round_trip():
    M = LocalMatrix.of(QQ, [[Fraction(1, 2), -3], [0, Fraction(7, 9)]])
    assert matrix_to_dict(M)["entries"] == [["1/2", "-3"], ["0", "7/9"]]
    assert roundtrip(M).equals(M)


def test_padic_matrix_round_trip():
    fld = padic_field(5, 10)
    x = fld.to_padic(Fraction(3, 25))
    M = LocalMatrix.of(fld, [[x, 1], [0, fld.to_padic(7) - fld.to_padic(2)]])
    back = roundtrip(M)
    assert back.field == fld
    assert all(a == b for ra, rb in zip(M.entries, back.entries) for a, b in zip(ra, rb))


def test_laurent_matrix_round_trip():
    fld = laurent_field(3, 1, 8)
    t = LaurentScalar.uniformizer(fld.profile)
    M = LocalMatrix.of(fld, [[1 + t, t**-2], [0, (1 + t).inverse()]])
    back = roundtrip(M)
    assert all(a == b for ra, rb in zip(M.entries, back.entries) for a, b in zip(ra, rb))


def test_parse_laurent():
    prof = laurent_field(3).profile
    t = LaurentScalar.uniformizer(prof)
    one = LaurentScalar.from_int(prof, 1)
    assert parse_laurent("1 + t", prof) == one + t
    assert parse_laurent("2*t^-1 - t^3", prof) == LaurentScalar.from_int(prof, 2) * t**-1 - t**3
    assert parse_laurent("t^(-2)", prof) == t**-2
    for bad in ("", "x", "1 + + t", "t^", "1 + t -"):
        with pytest.raises(SchemaError):
            parse_laurent(bad, prof)


def test_malformed_matrices():
    for bad in (
        [],
        {"entries": []},
        {"entries": [[1, 2]]},
        {"entries": [[1, 2], [3]]},
        {"n": 3, "entries": [[1, 2], [3, 4]]},
        {"entries": [["1/0"]]},
        {"entries": [[True]]},
        {"entries": [[1.5]]},
        {"field": {"kind": "rational"}, "entries": [[{"valuation": 0}]]},
    ):
        with pytest.raises(SchemaError):
            matrix_from_dict(bad)


def test_to_jsonable():
    out = to_jsonable({"a": Fraction(1, 3), "b": float("inf"), "c": (1, 2), 4: None})
    assert out == {"a": "1/3", "b": "inf", "c": [1, 2], "4": None}
    json.dumps(out)

"""JSON forms of fields, scalars, matrices and reports."""

from __future__ import annotations

import dataclasses
import math
import re
from fractions import Fraction

from .laurent import LaurentProfile, LaurentScalar
from .matrices import QQ, LaurentField, LocalMatrix, PadicField, padic_field
from .padic import PadicScalar


class SchemaError(ValueError):
    pass


def field_to_dict(fld) -> dict:
    return fld.describe()


def field_from_dict(data: dict, precision: int | None = None):
    if not isinstance(data, dict) or "kind" not in data:
        raise SchemaError("field must be an object with a 'kind'")
    kind = data["kind"]
    if kind == "rational":
        return QQ
    if kind == "padic":
        return padic_field(int(data["p"]), int(precision or data.get("precision", 64)))
    if kind == "laurent":
        p = int(data["p"])
        s = int(data.get("s", 1))
        prec = int(precision or data.get("precision", 64))
        if "modulus" in data:
            return LaurentField(LaurentProfile(p, s, tuple(data["modulus"]), prec))
        return LaurentField(LaurentProfile.default(p, s, prec))
    raise SchemaError(f"unknown field kind {kind!r}")


def scalar_to_json(x):
    if isinstance(x, PadicScalar):
        out = x.to_dict()
        for key in ("p", "precision"):
            out.pop(key, None)
        return out
    if isinstance(x, LaurentScalar):
        return x.to_dict(with_profile=False)
    return str(Fraction(x))


_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(t(?:\^\(?(-?\d+)\)?)?)?$")


def parse_laurent(text: str, profile: LaurentProfile) -> LaurentScalar:
    """Parse a Laurent polynomial over F_p such as ``1 + t`` or ``2*t^-1 - t^3``."""
    s = text.replace(" ", "")
    if not s:
        raise SchemaError("empty Laurent polynomial")
    total = LaurentScalar.zero(profile)
    # split on signs that do not belong to an exponent
    parts = re.split(r"(?<![\^(])([+-])", s)
    if parts[0] == "":
        parts = parts[1:]
    else:
        parts = ["+"] + parts
    if len(parts) % 2:
        raise SchemaError(f"dangling sign in {text!r}")
    for sign, body in zip(parts[::2], parts[1::2]):
        m = _TERM.match(body)
        if not body or not m or not (m.group(1) or m.group(2)):
            raise SchemaError(f"cannot parse term {body!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        exp = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        if sign == "-":
            coef = -coef
        term = LaurentScalar.from_int(profile, coef)
        total = total + term.shift(exp)
    return total


def scalar_from_json(value, fld):
    try:
        if isinstance(fld, LaurentField):
            if isinstance(value, dict):
                return LaurentScalar.from_dict(value, fld.profile)
            if isinstance(value, int):
                return fld.coerce(value)
            if isinstance(value, str):
                return parse_laurent(value, fld.profile)
            raise SchemaError(f"bad Laurent entry {value!r}")
        if isinstance(value, dict):
            if not isinstance(fld, PadicField):
                raise SchemaError("p-adic entry in a non-p-adic matrix")
            data = dict(value, p=fld.prime, precision=fld.profile.precision)
            return PadicScalar.from_dict(data)
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise SchemaError(f"bad rational entry {value!r}")
        return Fraction(value)
    except (ValueError, ZeroDivisionError, KeyError, TypeError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(str(exc)) from exc


def matrix_to_dict(M: LocalMatrix) -> dict:
    return {
        "field": field_to_dict(M.field),
        "n": M.n,
        "entries": [[scalar_to_json(x) for x in row] for row in M.entries],
    }


def matrix_from_dict(data: dict, field=None) -> LocalMatrix:
    if not isinstance(data, dict) or "entries" not in data:
        raise SchemaError("matrix must be an object with 'entries'")
    fld = field if field is not None else field_from_dict(data.get("field", {"kind": "rational"}))
    rows = data["entries"]
    if not isinstance(rows, list) or not rows or any(not isinstance(r, list) for r in rows):
        raise SchemaError("entries must be a nonempty list of rows")
    n = data.get("n", len(rows))
    if n != len(rows) or any(len(r) != n for r in rows):
        raise SchemaError("entries must form an n x n array")
    return LocalMatrix.of(fld, [[scalar_from_json(v, fld) for v in row] for row in rows])


def to_jsonable(obj):
    """Recursively convert report values into JSON-ready data."""
    if isinstance(obj, LocalMatrix):
        return matrix_to_dict(obj)
    if isinstance(obj, (PadicScalar, LaurentScalar)):
        return scalar_to_json(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if dataclasses.is_dataclass(obj):
        return to_jsonable(dataclasses.asdict(obj))
    return obj

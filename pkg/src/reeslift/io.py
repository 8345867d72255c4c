"""JSON instance files.

Two kinds are understood::

    {"field": "rational", "kind": "plane-curve",
     "f": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}

    {"field": {"prime": 32003}, "kind": "space-curve",
     "d": 17, "mu1": 3, "mu2": 5, "alpha": [...], "beta": [...]}

Coefficients run from the highest power of T0 down; rationals may be given
as strings such as ``"-3/7"``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .field import Field
from .mubasis import InvalidCurve, ParamCurve, SpaceCurve
from .polyring import form_coeffs


class InstanceError(ValueError):
    pass


def _coeff_out(c, fld: Field):
    c = fld.signed(c)
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else str(c)
    return int(c)


def _coeffs(lst, fld: Field, what: str):
    if not isinstance(lst, list) or not lst:
        raise InstanceError(f"{what}: expected a nonempty list of coefficients")
    try:
        return [fld(x) for x in lst]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InstanceError(f"{what}: bad coefficient ({exc})") from None


def instance_from_obj(obj):
    if not isinstance(obj, dict):
        raise InstanceError("instance must be a JSON object")
    try:
        fld = Field.from_json(obj.get("field", "rational"))
    except ValueError as exc:
        raise InstanceError(str(exc)) from None
    kind = obj.get("kind")
    if kind == "plane-curve":
        f = obj.get("f")
        if not isinstance(f, list) or len(f) != 3:
            raise InstanceError("plane-curve needs 'f' with three coefficient lists")
        rows = [_coeffs(r, fld, f"f[{n}]") for n, r in enumerate(f)]
        if "d" in obj and any(len(r) != obj["d"] + 1 for r in rows):
            raise InstanceError("coefficient list lengths do not match d")
        try:
            return ParamCurve.from_coeffs(rows, fld)
        except InvalidCurve as exc:
            raise InstanceError(str(exc)) from None
    if kind == "space-curve":
        try:
            d, mu1, mu2 = int(obj["d"]), int(obj["mu1"]), int(obj["mu2"])
        except (KeyError, TypeError, ValueError):
            raise InstanceError("space-curve needs integer d, mu1, mu2") from None
        a = _coeffs(obj.get("alpha"), fld, "alpha")
        b = _coeffs(obj.get("beta"), fld, "beta")
        try:
            return SpaceCurve.from_coeffs(d, mu1, mu2, a, b, fld)
        except InvalidCurve as exc:
            raise InstanceError(str(exc)) from None
    raise InstanceError(f"unknown instance kind {kind!r}")


def instance_to_obj(inst) -> dict:
    fld = inst.field
    if isinstance(inst, ParamCurve):
        return {"field": fld.to_json(), "kind": "plane-curve", "d": inst.d,
                "f": [[_coeff_out(c, fld) for c in row] for row in inst.coeff_rows()]}
    if isinstance(inst, SpaceCurve):
        return {"field": fld.to_json(), "kind": "space-curve", "d": inst.d,
                "mu1": inst.mu1, "mu2": inst.mu2,
                "alpha": [_coeff_out(c, fld) for c in form_coeffs(inst.alpha, inst.d - inst.mu1)],
                "beta": [_coeff_out(c, fld) for c in form_coeffs(inst.beta, inst.d - inst.mu2)]}
    raise TypeError(f"cannot serialize {type(inst).__name__}")


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from None
    return instance_from_obj(obj)


def dumps(inst) -> str:
    return json.dumps(instance_to_obj(inst), indent=2)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def save(inst, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(inst) + "\n")

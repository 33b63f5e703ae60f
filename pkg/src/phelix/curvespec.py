"""Parsing and serialization of curve-specification documents.

A curve spec is a JSON object with a ``form`` tag, exact coefficients and an
optional start point.  Rationals travel as strings ("p/q" or "p") or JSON
integers — floats are rejected so nothing can silently leave exact
arithmetic.  Complex values are [re, im] pairs, quaternions are
[w, x, y, z] quadruples.

Forms and their coefficient layouts (all polynomial arrays ascending):

* ``quaternion``        — list of up to three quaternion quadruples, power basis
* ``bezier-quaternion`` — list of up to three quaternion control points
* ``hopf``              — {"z1": [[re, im], ...], "z2": [...]}
* ``hodograph``         — {"dx": [...], "dy": [...], "dz": [...]}
* ``curve``             — {"x": [...], "y": [...], "z": [...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .curves import (
    Hodograph,
    HopfPair,
    PolynomialCurve,
    Quaternion,
    QuaternionPolynomial,
    bezier_to_power,
    hodograph_from_hopf,
    hodograph_from_quaternion,
    hopf_from_quaternion,
    integrate,
)
from .errors import DegenerateInputError, SpecParseError
from .polynomials import GaussPoly, GaussianRational, RatPoly

FORMS = ("quaternion", "bezier-quaternion", "hopf", "hodograph", "curve")

Payload = Union[
    QuaternionPolynomial, Tuple[Quaternion, ...], HopfPair, Hodograph, PolynomialCurve
]


@dataclass(frozen=True)
class CurveSpec:
    form: str
    payload: Payload
    origin: Tuple[Fraction, Fraction, Fraction] = (Fraction(0), Fraction(0), Fraction(0))

    def quaternion_form(self) -> Optional[QuaternionPolynomial]:
        """The quaternion polynomial when the form carries one."""
        if self.form == "quaternion":
            return self.payload
        if self.form == "bezier-quaternion":
            return bezier_to_power(self.payload)
        return None

    def hopf_form(self) -> Optional[HopfPair]:
        if self.form == "hopf":
            return self.payload
        quat = self.quaternion_form()
        if quat is not None:
            return hopf_from_quaternion(quat)
        return None

    def hodograph(self) -> Hodograph:
        if self.form == "hodograph":
            return self.payload
        if self.form == "curve":
            return self.payload.hodograph()
        if self.form == "hopf":
            return hodograph_from_hopf(self.payload)
        return hodograph_from_quaternion(self.quaternion_form())

    def curve(self) -> PolynomialCurve:
        """The integrated curve (the curve form keeps its own constants)."""
        if self.form == "curve":
            return self.payload
        return integrate(self.hodograph(), self.origin)


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise SpecParseError(f"expected a rational, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise SpecParseError(
            f"float {value!r} is not exact; write rationals as strings like \"3/7\""
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecParseError(f"malformed rational {value!r}: {exc}") from exc
    raise SpecParseError(f"expected a rational, got {type(value).__name__} {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value)


def _parse_complex(value) -> GaussianRational:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise SpecParseError(f"complex values are [re, im] pairs, got {value!r}")
    return GaussianRational(parse_rational(value[0]), parse_rational(value[1]))


def _parse_quaternion(value) -> Quaternion:
    if not isinstance(value, (list, tuple)) or len(value) != 4:
        raise SpecParseError(f"quaternions are [w, x, y, z] quadruples, got {value!r}")
    return Quaternion(*(parse_rational(v) for v in value))


def _parse_rat_poly(values, label: str) -> RatPoly:
    if not isinstance(values, (list, tuple)):
        raise SpecParseError(f"{label}: expected an array of coefficients")
    return RatPoly([parse_rational(v) for v in values])


def _parse_gauss_poly(values, label: str) -> GaussPoly:
    if not isinstance(values, (list, tuple)):
        raise SpecParseError(f"{label}: expected an array of [re, im] pairs")
    return GaussPoly([_parse_complex(v) for v in values])


def _require_keys(obj, keys, label: str) -> None:
    if not isinstance(obj, dict):
        raise SpecParseError(f"{label}: expected an object with keys {keys}")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SpecParseError(f"{label}: missing keys {missing}")


def parse_spec(doc) -> CurveSpec:
    """Validate and parse one curve-spec document."""
    if not isinstance(doc, dict):
        raise SpecParseError("curve spec must be a JSON object")
    form = doc.get("form")
    if form not in FORMS:
        raise SpecParseError(f"unknown form {form!r}; expected one of {FORMS}")
    if "coefficients" not in doc:
        raise SpecParseError("curve spec has no coefficients")
    coeffs = doc["coefficients"]

    origin = (Fraction(0), Fraction(0), Fraction(0))
    if "origin" in doc:
        raw = doc["origin"]
        if not isinstance(raw, (list, tuple)) or len(raw) != 3:
            raise SpecParseError("origin must be a [x, y, z] triple")
        origin = tuple(parse_rational(v) for v in raw)

    if form in ("quaternion", "bezier-quaternion"):
        if not isinstance(coeffs, (list, tuple)) or not coeffs:
            raise SpecParseError(f"{form}: coefficients must be a non-empty array")
        if len(coeffs) > 3:
            raise SpecParseError(
                f"{form}: at most 3 quaternion coefficients (degree 2) supported, "
                f"got {len(coeffs)}"
            )
        quats = [_parse_quaternion(v) for v in coeffs]
        if form == "quaternion":
            payload: Payload = QuaternionPolynomial(quats)
            if payload.is_zero:
                raise SpecParseError("quaternion polynomial is identically zero")
        else:
            payload = tuple(quats)
            if bezier_to_power(payload).is_zero:
                raise SpecParseError("control quaternions are all zero")
        return CurveSpec(form, payload, origin)

    if form == "hopf":
        _require_keys(coeffs, ("z1", "z2"), "hopf coefficients")
        z1 = _parse_gauss_poly(coeffs["z1"], "z1")
        z2 = _parse_gauss_poly(coeffs["z2"], "z2")
        try:
            return CurveSpec(form, HopfPair(z1, z2), origin)
        except DegenerateInputError as exc:
            raise SpecParseError(str(exc)) from exc

    if form == "hodograph":
        _require_keys(coeffs, ("dx", "dy", "dz"), "hodograph coefficients")
        try:
            payload = Hodograph(
                _parse_rat_poly(coeffs["dx"], "dx"),
                _parse_rat_poly(coeffs["dy"], "dy"),
                _parse_rat_poly(coeffs["dz"], "dz"),
            )
        except DegenerateInputError as exc:
            raise SpecParseError(str(exc)) from exc
        return CurveSpec(form, payload, origin)

    _require_keys(coeffs, ("x", "y", "z"), "curve coefficients")
    payload = PolynomialCurve(
        _parse_rat_poly(coeffs["x"], "x"),
        _parse_rat_poly(coeffs["y"], "y"),
        _parse_rat_poly(coeffs["z"], "z"),
    )
    try:
        payload.hodograph()
    except DegenerateInputError as exc:
        raise SpecParseError("curve is a single point") from exc
    return CurveSpec(form, payload, origin)


def _encode_rat_poly(p: RatPoly):
    return [format_rational(c) for c in p.coeffs]


def _encode_gauss_poly(p: GaussPoly):
    return [[format_rational(c.re), format_rational(c.im)] for c in p.coeffs]


def _encode_quaternion(q: Quaternion):
    return [format_rational(c) for c in q.components()]


def spec_to_doc(spec: CurveSpec) -> dict:
    """Canonical JSON-ready document; parse_spec inverts it exactly."""
    doc: dict = {"form": spec.form}
    if spec.form == "quaternion":
        doc["coefficients"] = [_encode_quaternion(c) for c in spec.payload.coeffs]
    elif spec.form == "bezier-quaternion":
        doc["coefficients"] = [_encode_quaternion(c) for c in spec.payload]
    elif spec.form == "hopf":
        doc["coefficients"] = {
            "z1": _encode_gauss_poly(spec.payload.z1),
            "z2": _encode_gauss_poly(spec.payload.z2),
        }
    elif spec.form == "hodograph":
        doc["coefficients"] = {
            "dx": _encode_rat_poly(spec.payload.dx),
            "dy": _encode_rat_poly(spec.payload.dy),
            "dz": _encode_rat_poly(spec.payload.dz),
        }
    else:
        doc["coefficients"] = {
            "x": _encode_rat_poly(spec.payload.x),
            "y": _encode_rat_poly(spec.payload.y),
            "z": _encode_rat_poly(spec.payload.z),
        }
    if any(spec.origin):
        doc["origin"] = [format_rational(c) for c in spec.origin]
    return doc


def load_spec(text: str) -> CurveSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"invalid JSON: {exc}") from exc
    return parse_spec(doc)


def dump_spec(spec: CurveSpec, indent: Optional[int] = None) -> str:
    return json.dumps(spec_to_doc(spec), indent=indent)

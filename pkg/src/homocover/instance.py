"""Instance files: a JSON document describing a family of homothets.

Example::

    {
      "dimension": 2,
      "body": {"kind": "ball", "center": ["0", "0"], "radius": "1"},
      "members": [
        {"translation": ["-1", "0"], "scale": "1"},
        {"translation": ["1", "0"], "scale": "1"}
      ],
      "metadata": {"generator": "chain"}
    }

Numbers are written as strings: integers as ``"5"``, rationals as
``"p/q"`` and floats in shortest round-trip form (``repr``), so exact
instances survive a round trip.  Plain JSON numbers are accepted on input.
A polytope body is ``{"kind": "polytope", "vertices": [[...], ...]}``.
"""
import json
import re
import warnings
from fractions import Fraction

from .errors import HomocoverError, ParseError
from .geometry import Ball, Family, Homothet, Polytope

_INT = re.compile(r"^[+-]?\d+$")
_RATIO = re.compile(r"^[+-]?\d+/\d+$")

_TOP = ("dimension", "body", "members", "metadata")
_BODY = {"ball": ("kind", "center", "radius"), "polytope": ("kind", "vertices")}
_MEMBER = ("translation", "scale")


def format_number(x) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def parse_number(value, field):
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got {value!r}", field=field)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return value
    if not isinstance(value, str):
        raise ParseError(f"expected a number, got {value!r}", field=field)
    s = value.strip()
    if _INT.match(s):
        return int(s)
    if _RATIO.match(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ParseError("zero denominator", field=field)
        q = Fraction(int(num), int(den))
        return q.numerator if q.denominator == 1 else q
    try:
        x = float(s)
    except ValueError:
        raise ParseError(f"malformed number {value!r}", field=field) from None
    if x != x or x in (float("inf"), float("-inf")):
        raise ParseError(f"non-finite number {value!r}", field=field)
    return x


def _vector(value, dim, field):
    if not isinstance(value, list):
        raise ParseError("expected a list of numbers", field=field)
    if len(value) != dim:
        raise ParseError(f"expected {dim} coordinates, got {len(value)}", field=field)
    return [parse_number(x, f"{field}[{i}]") for i, x in enumerate(value)]


def _check_keys(obj, allowed, field, strict):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", field=field)
    extra = [k for k in obj if k not in allowed]
    if extra:
        msg = f"unknown fields {extra}"
        if strict:
            raise ParseError(msg, field=field or "<root>")
        warnings.warn(f"{msg} in {field or '<root>'}", stacklevel=3)


def parse_instance_document(text: str, strict: bool = True):
    """Parse instance text into ``(family, metadata)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    _check_keys(doc, _TOP, "", strict)
    for key in ("dimension", "body", "members"):
        if key not in doc:
            raise ParseError("missing required field", field=key)
    dim = doc["dimension"]
    if isinstance(dim, str) and _INT.match(dim):
        dim = int(dim)
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"dimension must be a positive integer, got {dim!r}", field="dimension")

    body_doc = doc["body"]
    if not isinstance(body_doc, dict) or body_doc.get("kind") not in _BODY:
        raise ParseError("body.kind must be 'ball' or 'polytope'", field="body.kind")
    kind = body_doc["kind"]
    _check_keys(body_doc, _BODY[kind], "body", strict)
    try:
        if kind == "ball":
            for key in ("center", "radius"):
                if key not in body_doc:
                    raise ParseError("missing required field", field=f"body.{key}")
            radius = parse_number(body_doc["radius"], "body.radius")
            if not radius > 0:
                raise ParseError("radius must be positive", field="body.radius")
            body = Ball(_vector(body_doc["center"], dim, "body.center"), radius)
        else:
            verts = body_doc.get("vertices")
            if not isinstance(verts, list):
                raise ParseError("expected a list of vertices", field="body.vertices")
            body = Polytope(
                [_vector(v, dim, f"body.vertices[{i}]") for i, v in enumerate(verts)]
            )
    except ParseError:
        raise
    except HomocoverError as exc:
        raise ParseError(str(exc), field="body") from None

    members_doc = doc["members"]
    if not isinstance(members_doc, list) or not members_doc:
        raise ParseError("expected a non-empty list", field="members")
    members = []
    for i, m in enumerate(members_doc):
        where = f"members[{i}]"
        _check_keys(m, _MEMBER, where, strict)
        for key in _MEMBER:
            if key not in m:
                raise ParseError("missing required field", field=f"{where}.{key}")
        scale = parse_number(m["scale"], f"{where}.scale")
        if not scale > 0:
            raise ParseError(
                f"member {i}: homothety coefficient must be positive, got {format_number(scale)}",
                field=f"{where}.scale",
            )
        members.append(Homothet(_vector(m["translation"], dim, f"{where}.translation"), scale))

    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("expected an object", field="metadata")
    return Family(body, members), metadata


def parse_instance(text: str, strict: bool = True) -> Family:
    return parse_instance_document(text, strict)[0]


def instance_document(family: Family, metadata=None) -> dict:
    body = family.body
    if isinstance(body, Ball):
        body_doc = {
            "kind": "ball",
            "center": [format_number(x) for x in body.center],
            "radius": format_number(body.radius),
        }
    else:
        body_doc = {
            "kind": "polytope",
            "vertices": [[format_number(x) for x in v] for v in body.vertices],
        }
    doc = {
        "dimension": family.dimension,
        "body": body_doc,
        "members": [
            {
                "translation": [format_number(x) for x in m.translation],
                "scale": format_number(m.scale),
            }
            for m in family.members
        ],
    }
    if metadata:
        doc["metadata"] = dict(metadata)
    return doc


def serialize_instance(family: Family, metadata=None) -> str:
    """Canonical text form: two-space indented JSON, trailing newline."""
    return json.dumps(instance_document(family, metadata), indent=2) + "\n"

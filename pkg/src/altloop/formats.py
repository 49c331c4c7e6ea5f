"""File formats and printing.

* scalars: canonical literals like ``-3/2`` and ``1/2+3*sqrt(-5)``
* algebras: structure-constants JSON
  ``{"dim": n, "basis": [...], "unit": i|null, "table": [[[lit, ...], ...], ...]}``
  (involutive algebras extend this with "involution", "field", "params",
  "norm_form")
* loops: text tables, line 1 the order, then 1-based rows, with an optional
  ``# names: ...`` header
* ring elements: formal sums ``3*g2 - 1*g5 + 1*e``
* classifier descriptors and verdicts: JSON

Parsing followed by printing is the identity on canonical files.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .classifier import (
    AlgebraDescriptor,
    SimpleComponentDescriptor,
    Verdict,
)
from .composition import InvolutiveAlgebra, NormForm
from .errors import FormatError
from .loops import FiniteLoop, validate_loop
from .scalars import FieldDescriptor, format_scalar, parse_field, parse_scalar
from .structalg import RingElement, StructureConstantAlgebra


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# structure-constants JSON


def algebra_to_dict(A: StructureConstantAlgebra) -> dict:
    return {
        "dim": A.dim,
        "basis": list(A.basis_names),
        "unit": A.unit_index,
        "table": [
            [[format_scalar(c) for c in cell] for cell in row] for row in A.table
        ],
    }


def algebra_to_json(A: StructureConstantAlgebra) -> str:
    return _dump(algebra_to_dict(A))


def algebra_from_dict(d: dict, name="algebra") -> StructureConstantAlgebra:
    try:
        table = [
            [[parse_scalar(c) for c in cell] for cell in row] for row in d["table"]
        ]
        return StructureConstantAlgebra(table, d["basis"], d.get("unit"), name)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad structure-constants data: {exc}") from exc


def algebra_from_json(text: str, name="algebra") -> StructureConstantAlgebra:
    return algebra_from_dict(_loads(text), name)


def _loads(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc


def involutive_to_dict(A: InvolutiveAlgebra) -> dict:
    d = algebra_to_dict(A.algebra)
    d["involution"] = [[format_scalar(c) for c in img] for img in A.images]
    d["field"] = repr(A.field)
    d["params"] = (
        None if A.params is None else [format_scalar(p) for p in A.params]
    )
    d["norm_form"] = (
        None
        if A.norm_form is None
        else [format_scalar(c) for c in A.norm_form.coeffs]
    )
    return d


def involutive_to_json(A: InvolutiveAlgebra) -> str:
    return _dump(involutive_to_dict(A))


def involutive_from_dict(d: dict) -> InvolutiveAlgebra:
    if "involution" not in d:
        raise FormatError("file has no involution data (built by a plain table?)")
    algebra = algebra_from_dict(d)
    images = [[parse_scalar(c) for c in img] for img in d["involution"]]
    field = parse_field(d.get("field", "Q"))
    params = d.get("params")
    if params is not None:
        params = tuple(parse_scalar(p) for p in params)
    nf = d.get("norm_form")
    norm_form = None if nf is None else NormForm(tuple(parse_scalar(c) for c in nf))
    return InvolutiveAlgebra(algebra, images, field, params, norm_form)


def involutive_from_json(text: str) -> InvolutiveAlgebra:
    return involutive_from_dict(_loads(text))


# ---------------------------------------------------------------------------
# loop tables


def loop_to_text(L: FiniteLoop) -> str:
    lines = ["# names: " + " ".join(L.names), str(L.order)]
    for row in L.table:
        lines.append(" ".join(str(v + 1) for v in row))
    return "\n".join(lines) + "\n"


def loop_from_text(text: str) -> FiniteLoop:
    names = None
    rows = []
    order = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*names:\s*(.+)", line)
            if m:
                names = tuple(m.group(1).split())
            continue
        if order is None:
            try:
                order = int(line)
            except ValueError:
                raise FormatError(f"expected the loop order, got {line!r}") from None
            continue
        try:
            rows.append([int(v) - 1 for v in line.split()])
        except ValueError:
            raise FormatError(f"bad table row {line!r}") from None
    if order is None:
        raise FormatError("empty loop table")
    if len(rows) != order:
        raise FormatError(f"expected {order} rows, found {len(rows)}")
    return validate_loop(rows, names)


# ---------------------------------------------------------------------------
# ring elements as formal sums


def element_from_text(A: StructureConstantAlgebra, text: str) -> RingElement:
    """Inverse of the element formatter: terms ``COEFF*NAME`` joined by
    `` + `` / `` - `` (names may contain signs and parentheses but never
    spaces, so the spaced separators are unambiguous)."""
    coords = [Fraction(0)] * A.dim
    s = text.strip()
    if s == "0":
        return A.element(coords)
    index = {nm: i for i, nm in enumerate(A.basis_names)}
    terms = []
    sign = 1
    if s.startswith("- "):
        raise FormatError("a leading minus binds to its term: write -COEFF*NAME")
    if s.startswith("-"):
        sign, s = -1, s[1:]
    for chunk in re.split(r"\s+([+-])\s+", s):
        if chunk == "+":
            sign = 1
        elif chunk == "-":
            sign = -1
        else:
            terms.append((sign, chunk.strip()))
    for sign, term in terms:
        if not term:
            raise FormatError(f"empty term in {text!r}")
        if term in index:
            coeff, name = Fraction(1), term
        else:
            lit, star, name = term.rpartition("*")
            if not star or name not in index:
                raise FormatError(f"no basis name matches the term {term!r}")
            if lit.startswith("(") and lit.endswith(")"):
                lit = lit[1:-1]
            coeff = parse_scalar(lit)
        coords[index[name]] = coords[index[name]] + sign * coeff
    return A.element(coords)


# ---------------------------------------------------------------------------
# classifier descriptors and verdicts


def component_to_dict(c: SimpleComponentDescriptor) -> dict:
    k = c.kind
    if k == SimpleComponentDescriptor.RATIONAL:
        return {"kind": "Q"}
    if k == SimpleComponentDescriptor.IMAG_QUADRATIC:
        return {"kind": "imag_quadratic", "m": c.m}
    if k == SimpleComponentDescriptor.QUATERNION:
        return {"kind": "quaternion", "params": [format_scalar(p) for p in c.params]}
    if k == SimpleComponentDescriptor.OCTONION:
        return {
            "kind": "octonion",
            "field": repr(c.octonion_field),
            "params": [format_scalar(p) for p in c.params],
        }
    if k == SimpleComponentDescriptor.M2Q:
        return {"kind": "m2q"}
    return {"kind": "other", "tag": c.tag}


def component_from_dict(d: dict) -> SimpleComponentDescriptor:
    kind = d.get("kind")
    if kind == "Q":
        return SimpleComponentDescriptor(SimpleComponentDescriptor.RATIONAL)
    if kind == "imag_quadratic":
        return SimpleComponentDescriptor(
            SimpleComponentDescriptor.IMAG_QUADRATIC, m=int(d["m"])
        )
    if kind == "quaternion":
        a, b = (parse_scalar(str(p)) for p in d["params"])
        return SimpleComponentDescriptor(
            SimpleComponentDescriptor.QUATERNION, params=(a, b)
        )
    if kind == "octonion":
        params = tuple(parse_scalar(str(p)) for p in d["params"])
        return SimpleComponentDescriptor(
            SimpleComponentDescriptor.OCTONION,
            params=params,
            octonion_field=parse_field(d.get("field", "Q")),
        )
    if kind == "m2q":
        return SimpleComponentDescriptor(SimpleComponentDescriptor.M2Q)
    if kind == "other":
        return SimpleComponentDescriptor(
            SimpleComponentDescriptor.OTHER, tag=d.get("tag", "")
        )
    raise FormatError(f"unknown component kind {kind!r}")


def descriptor_to_dict(d: AlgebraDescriptor) -> dict:
    return {
        "components": [component_to_dict(c) for c in d.components],
        "radical_dim": d.radical_dim,
        "radical_central": d.radical_central,
        "has_nilpotents": d.has_nilpotents,
    }


def descriptor_to_json(d: AlgebraDescriptor) -> str:
    return _dump(descriptor_to_dict(d))


def descriptor_from_dict(d: dict) -> AlgebraDescriptor:
    try:
        return AlgebraDescriptor(
            tuple(component_from_dict(c) for c in d["components"]),
            int(d.get("radical_dim", 0)),
            d.get("radical_central"),
            bool(d.get("has_nilpotents", False)),
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad descriptor: {exc}") from exc


def descriptor_from_json(text: str) -> AlgebraDescriptor:
    return descriptor_from_dict(_loads(text))


def _data_value(v):
    if isinstance(v, RingElement):
        return [format_scalar(c) for c in v.coords]
    if isinstance(v, (tuple, list)):
        return [_data_value(x) for x in v]
    if isinstance(v, FieldDescriptor):
        return repr(v)
    if isinstance(v, (int, bool, str)) or v is None:
        return v
    return str(v)


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "answer": v.answer,
        "clause": v.clause,
        "witness": v.witness or None,
        "data": {k: _data_value(val) for k, val in sorted(v.data.items())},
    }


def verdict_to_json(v: Verdict) -> str:
    return _dump(verdict_to_dict(v))

"""JSON encodings of matrices, bialgebras, σ tables and Hopf elements.

Matrix:        {"field": "Q" | {"GF": p}, "n": N, "matrix": [[scalar, ...], ...]}
Table:         {"field", "basis", "unit", "mult", "delta", "eps"}
                 mult[i][j] = [{"b": name, "c": scalar}], delta[i] = [{"l", "r", "c"}]
Presentation:  {"field", "generators", "relations": [[{"c", "w": [gen, ...]}]],
                 "delta_gen": {g: [{"l", "r", "c"}]}, "eps_gen": {g: scalar}}
σ:             {"C": [names], "table": {c: {h_or_"1": scalar}}}
Hopf element:  {"A": [gens], "terms": [{"a": [gen, ...], "h": [{"c", "w"}] | name, "c": scalar}]}

Scalars are decimal integers or "a/b" strings (plain JSON integers are accepted too).
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .freeword import DEFAULT_DEGREE, FreeAlgebra, NCPoly
from .hopfcore import Bialgebra, PresentedBialgebra, SubcoalgebraView, TableBialgebra, make_presented_bialgebra, make_table_bialgebra
from .hopfelement import TensorElement, tensor_element
from .kernel import GF, QQ, Field, Scalar, format_scalar, parse_scalar
from .pairing import Pairing
from .tensorlab import EndoTensor, endo_from_matrix


class FormatError(ValueError):
    """Malformed input; the message names the offending location."""


def _fail(where: str, msg: str) -> FormatError:
    return FormatError(f"{where}: {msg}")


def _prime_field(p: Any, value: Any) -> Field:
    try:
        return GF(int(p))
    except (TypeError, ValueError):
        raise FormatError(f"field: {value!r} is not a prime field") from None


def parse_field(value: Any) -> Field:
    """Accepts "Q", "QQ", "GF(p)", "GFp", {"GF": p} or a bare prime."""
    if isinstance(value, Field):
        return value
    if isinstance(value, dict):
        if set(value) != {"GF"}:
            raise FormatError(f"field: expected {{'GF': p}}, got {value!r}")
        return _prime_field(value["GF"], value)
    if isinstance(value, int) and not isinstance(value, bool):
        return _prime_field(value, value)
    if isinstance(value, str):
        s = value.strip()
        if s in ("Q", "QQ", "Rationals"):
            return QQ
        m = re.fullmatch(r"(?:GF)?\(?(\d+)\)?", s)
        if m:
            return _prime_field(m.group(1), value)
    raise FormatError(f"field: cannot parse {value!r}")


def field_json(f: Field) -> Any:
    return "Q" if not f.is_prime_field else {"GF": f.characteristic}


def _scalar(f: Field, v: Any, where: str) -> Scalar:
    try:
        if isinstance(v, bool):
            raise ValueError("booleans are not scalars")
        if isinstance(v, int):
            return f(v)
        if isinstance(v, str):
            return parse_scalar(f, v)
    except (ValueError, ZeroDivisionError) as e:
        raise _fail(where, str(e)) from None
    raise _fail(where, f"bad scalar {v!r}")


def _sj(s: Scalar) -> str:
    return format_scalar(s)


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: line {e.lineno} column {e.colno}: {e.msg}") from None


def _need(d: Any, key: str, where: str) -> Any:
    if not isinstance(d, dict) or key not in d:
        raise _fail(where, f"missing key {key!r}")
    return d[key]


# -- matrices ---------------------------------------------------------------


def matrix_from_json(d: Any, field: Field | None = None) -> EndoTensor:
    f = field or parse_field(_need(d, "field", "matrix file"))
    n = _need(d, "n", "matrix file")
    if not isinstance(n, int) or n < 1:
        raise _fail("n", f"expected a positive integer, got {n!r}")
    rows = _need(d, "matrix", "matrix file")
    if not isinstance(rows, list) or len(rows) != n * n:
        raise _fail("matrix", f"expected {n * n} rows")
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n * n:
            raise _fail(f"matrix[{r}]", f"expected {n * n} entries")
        out.append([_scalar(f, v, f"matrix[{r}][{c}]") for c, v in enumerate(row)])
    return endo_from_matrix(f, n, out)


def matrix_to_json(r: EndoTensor) -> dict:
    return {"field": field_json(r.field), "n": r.n, "matrix": [[_sj(c) for c in row] for row in r.matrix]}


# -- bialgebras -------------------------------------------------------------


def _index_or_name(container: Any, i: int, name: str) -> Any:
    if isinstance(container, dict):
        return container.get(name)
    return container[i]


def _lincomb_terms(f: Field, items: Any, where: str, names: set[str]) -> dict[str, Scalar]:
    if not isinstance(items, list):
        raise _fail(where, "expected a list of {b, c}")
    out: dict[str, Scalar] = {}
    for k, it in enumerate(items):
        b = _need(it, "b", f"{where}[{k}]")
        if b not in names:
            raise _fail(f"{where}[{k}]", f"unknown basis element {b!r}")
        out[b] = out.get(b, f.zero) + _scalar(f, _need(it, "c", f"{where}[{k}]"), f"{where}[{k}].c")
    return out


def _triples(f: Field, items: Any, where: str) -> list[tuple[str, str, Scalar]]:
    if not isinstance(items, list):
        raise _fail(where, "expected a list of {l, r, c}")
    return [
        (
            _need(it, "l", f"{where}[{k}]"),
            _need(it, "r", f"{where}[{k}]"),
            _scalar(f, it.get("c", 1), f"{where}[{k}].c"),
        )
        for k, it in enumerate(items)
    ]


def bialgebra_from_json(d: Any, degree: int = DEFAULT_DEGREE) -> Bialgebra:
    f = parse_field(_need(d, "field", "bialgebra file"))
    if "generators" in d:
        return _presentation_from_json(d, f, degree)
    basis = _need(d, "basis", "bialgebra file")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise _fail("basis", "expected a list of names")
    names = set(basis)
    unit = _need(d, "unit", "bialgebra file")
    if isinstance(unit, str):
        unit_terms = {unit: f.one}
    elif isinstance(unit, list) and all(not isinstance(u, dict) for u in unit):
        if len(unit) != len(basis):
            raise _fail("unit", "coefficient list has the wrong length")
        unit_terms = {b: _scalar(f, u, f"unit[{i}]") for i, (b, u) in enumerate(zip(basis, unit))}
    else:
        unit_terms = _lincomb_terms(f, unit, "unit", names)
    mult_raw = _need(d, "mult", "bialgebra file")
    mult = {}
    for i, a in enumerate(basis):
        row = _index_or_name(mult_raw, i, a)
        if row is None:
            raise _fail(f"mult[{a}]", "missing row")
        for j, b in enumerate(basis):
            entry = _index_or_name(row, j, b)
            if entry is None:
                raise _fail(f"mult[{a}][{b}]", "missing entry")
            mult[a, b] = _lincomb_terms(f, entry, f"mult[{a}][{b}]", names)
    delta_raw = _need(d, "delta", "bialgebra file")
    delta = {}
    for i, a in enumerate(basis):
        entry = _index_or_name(delta_raw, i, a)
        if entry is None:
            raise _fail(f"delta[{a}]", "missing entry")
        delta[a] = _triples(f, entry, f"delta[{a}]")
    eps_raw = _need(d, "eps", "bialgebra file")
    eps = {}
    for i, a in enumerate(basis):
        v = _index_or_name(eps_raw, i, a)
        if v is None:
            raise _fail(f"eps[{a}]", "missing entry")
        eps[a] = _scalar(f, v, f"eps[{a}]")
    try:
        return make_table_bialgebra(f, basis, unit_terms, mult, delta, eps, d.get("name", ""))
    except ValueError as e:
        if type(e) is ValueError:
            raise FormatError(str(e)) from None
        raise


def _poly_from_json(free: FreeAlgebra, items: Any, where: str) -> NCPoly:
    if not isinstance(items, list):
        raise _fail(where, "expected a list of {c, w}")
    terms: dict = {}
    for k, it in enumerate(items):
        w = tuple(g for g in _need(it, "w", f"{where}[{k}]") if g != "1")
        for g in w:
            if g not in free.generators:
                raise _fail(f"{where}[{k}]", f"unknown generator {g!r}")
        c = _scalar(free.field, it.get("c", 1), f"{where}[{k}].c")
        terms[w] = terms.get(w, free.field.zero) + c
    return free.poly({w: c for w, c in terms.items() if c})


def _presentation_from_json(d: dict, f: Field, degree: int) -> PresentedBialgebra:
    gens = d["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise _fail("generators", "expected a list of names")
    free = FreeAlgebra(f, gens)
    rels = [_poly_from_json(free, r, f"relations[{i}]") for i, r in enumerate(d.get("relations", []))]
    dg_raw = _need(d, "delta_gen", "presentation")
    eg_raw = _need(d, "eps_gen", "presentation")
    dg = {g: _triples(f, _need(dg_raw, g, "delta_gen"), f"delta_gen[{g}]") for g in gens}
    eg = {g: _scalar(f, _need(eg_raw, g, "eps_gen"), f"eps_gen[{g}]") for g in gens}
    for g, trip in dg.items():
        for l, r, _ in trip:
            for name in (l, r):
                if name != "1" and name not in gens:
                    raise _fail(f"delta_gen[{g}]", f"unknown generator {name!r}")
    labels = d.get("labels")
    return make_presented_bialgebra(f, gens, rels, dg, eg, degree, name=d.get("name", ""), labels=labels)


def bialgebra_to_json(b: Bialgebra) -> dict:
    f = b.field
    if isinstance(b, TableBialgebra):
        one = b.one()
        return {
            "field": field_json(f),
            "name": b.name,
            "basis": list(b.basis),
            "unit": [{"b": k, "c": _sj(c)} for k, c in one.items()],
            "mult": [
                [[{"b": k, "c": _sj(c)} for k, c in b.key_mul(x, y).items()] for y in b.basis] for x in b.basis
            ],
            "delta": [[{"l": l, "r": r, "c": _sj(c)} for (l, r), c in b.key_delta(x).items()] for x in b.basis],
            "eps": [_sj(b.key_counit(x)) for x in b.basis],
        }
    assert isinstance(b, PresentedBialgebra)
    return {
        "field": field_json(f),
        "name": b.name,
        "generators": list(b.generators),
        "relations": [[{"c": _sj(c), "w": list(w)} for w, c in r.items()] for r in b.relations],
        "labels": list(b.labels),
        "delta_gen": {
            g: [{"l": "".join(l) or "1", "r": "".join(r) or "1", "c": _sj(c)} for (l, r), c in b.generator_delta(g).items()]
            for g in b.generators
        },
        "eps_gen": {g: _sj(b.counit_word((g,))) for g in b.generators},
    }


# -- σ tables ---------------------------------------------------------------


def sigma_from_json(host: Bialgebra, d: Any, subcoalgebra: list[str] | None = None) -> Pairing:
    names = subcoalgebra or _need(d, "C", "sigma file")
    table_raw = _need(d, "table", "sigma file")
    f = host.field
    table = {}
    for c in names:
        row = _need(table_raw, c, "table")
        for h, v in row.items():
            table[c, h] = _scalar(f, v, f"table[{c}][{h}]")
    try:
        C = SubcoalgebraView(host, list(names))
        return Pairing(C, table)
    except ValueError as e:
        raise FormatError(str(e)) from None


def sigma_to_json(sigma: Pairing) -> dict:
    out: dict = {}
    for (c, h), v in sigma.table.items():
        out.setdefault(c, {})[h] = _sj(v)
    return {"C": list(sigma.C.names), "table": out}


# -- Hopf elements ----------------------------------------------------------


def element_from_json(host: Bialgebra, d: Any) -> TensorElement:
    gens = _need(d, "A", "element file")
    terms = []
    for k, t in enumerate(_need(d, "terms", "element file")):
        a = _need(t, "a", f"terms[{k}]")
        h = _need(t, "h", f"terms[{k}]")
        if isinstance(h, str):
            e: Any = h
        else:
            e = host.zero()
            for m, it in enumerate(h):
                w = [g for g in _need(it, "w", f"terms[{k}].h[{m}]") if g != "1"]
                e = e + host.word(w).scale(_scalar(host.field, it.get("c", 1), f"terms[{k}].h[{m}].c"))
        terms.append((a, e, _scalar(host.field, t.get("c", 1), f"terms[{k}].c")))
    try:
        return tensor_element(host, gens, terms)
    except ValueError as e:
        raise FormatError(str(e)) from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2)


# ---------------------------------------------------------------------------
# JSON Schema (draft 2020-12) for the machine-readable CLI output

_STATUS = {"enum": ["pass", "fail", "inconclusive"]}
_WITNESS = {
    "type": "object",
    "required": ["location"],
    "properties": {"location": {"type": "string"}},
    "additionalProperties": {"type": "string"},
}
VERDICT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "witnesses", "detail"],
    "properties": {
        "status": _STATUS,
        "witnesses": {"type": "array", "items": _WITNESS},
        "detail": {"type": "string"},
    },
}
REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["example", "status", "matches_expectations", "checks"],
    "properties": {
        "example": {"type": "string"},
        "status": _STATUS,
        "matches_expectations": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "expected", "status", "witnesses"],
                "properties": {
                    "check": {"type": "string"},
                    "expected": {"enum": ["pass", "fail", "contrast", None]},
                    "status": _STATUS,
                    "witnesses": {"type": "array", "items": _WITNESS},
                },
            },
        },
    },
}
_SCALAR = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
SEARCH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["status", "count"],
    "properties": {
        "status": {"const": "pass"},
        "count": {"type": "integer", "minimum": 0},
        "solutions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "matrix"],
                "properties": {
                    "index": {"type": "integer"},
                    "matrix": {"type": "array", "items": {"type": "array", "items": _SCALAR}},
                },
            },
        },
        "sigmas": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["C", "table"],
                "properties": {
                    "C": {"type": "array", "items": {"type": "string"}},
                    "table": {"type": "object", "additionalProperties": {"type": "object", "additionalProperties": _SCALAR}},
                },
            },
        },
    },
}

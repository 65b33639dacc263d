"""JSON input format for the command line tool.

A document has a ``field`` ("QQ" or "QQ(q)"), exactly one object section
and optional extra sections::

    finite_hopf        basis, unit, mult, comult, counit, antipode[, antipode_inverse]
    presentation_hopf  generators, relations, comult, counit, antipode[, antipode_inverse]
    hf_matrix          F
    sle_tensor         n, N, E[, method]

    characters          {label: {generator: scalar}}
    coreps              {label: [[poly, ...], ...]}
    sovereign_elements  {label: {"element": poly, "inverse": poly}}
    cobraiding          {"table": {a: {b: scalar}}[, "inverse_table": ...]}
                        or {"sweedler_parameter": scalar}
    cotwist             {"from_character": label}
                        or {"values": {basis: scalar}, "inverse_values": {...}}
    options             {"degree_bound": int or null, "degree_cap": int}

Scalars are strings such as "3*q^2-1" or "(q+1)/q".  A polynomial is a
list of ``[coefficient, [generator, ...]]`` terms, the empty list of
names being the unit word; a tensor is a list of
``[coefficient, [left names], [right names]]``.  For ``finite_hopf``
the generators are the basis names, and ``mult[a][b]`` is the product of
basis elements a and b.  ``E`` is dense with the last index running
fastest.  Output is canonical: sorted keys, reduced scalars, terms in
monomial order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .corep import MatrixCorep
from .exactmath import QQ, FieldDesc, Matrix, Scalar, ScalarParseError, format_scalar, parse_scalar, \
    rational_functions
from .forms import GenCharacter
from .hopf_fd import FinHopf
from .hopf_pres import GroupLikeElement, PresentedHopf
from .ncalg import GenSet, NCPoly, Presentation, TensorPoly, word_key

OBJECT_KINDS = ("finite_hopf", "presentation_hopf", "hf_matrix", "sle_tensor")
OPTIONAL = ("characters", "coreps", "sovereign_elements", "cobraiding", "cotwist", "options")
DEFAULT_CAP = 6


class ParseError(ValueError):
    pass


class SchemaError(ValueError):
    pass


@dataclass
class Workbench:
    field: FieldDesc
    kind: str
    hopf: Any
    source: Any = None
    characters: dict[str, GenCharacter] = field(default_factory=dict)
    coreps: dict[str, MatrixCorep] = field(default_factory=dict)
    sovereign_elements: dict[str, GroupLikeElement] = field(default_factory=dict)
    cobraiding: dict | None = None
    cotwist: dict | None = None
    degree_bound: int | None = None
    degree_cap: int = DEFAULT_CAP
    params: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# scalars, polynomials, tensors


def field_from_text(text: str) -> FieldDesc:
    if text == "QQ":
        return QQ
    if isinstance(text, str) and text.startswith("QQ(") and text.endswith(")"):
        try:
            return rational_functions(text[3:-1])
        except ValueError as e:
            raise SchemaError(str(e)) from None
    raise SchemaError(f"unknown field {text!r}")


def _scalar(F: FieldDesc, v) -> Scalar:
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise SchemaError(f"scalar expected, got {v!r}")
    try:
        return parse_scalar(F, str(v))
    except (ScalarParseError, ZeroDivisionError) as e:
        raise ParseError(f"bad scalar {v!r}: {e}") from None


def _names(gens, names) -> tuple[int, ...]:
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise SchemaError(f"list of generator names expected, got {names!r}")
    try:
        return gens.word(names)
    except KeyError as e:
        raise SchemaError(str(e)) from None


def poly_from_json(gens, F: FieldDesc, data) -> NCPoly:
    if not isinstance(data, list):
        raise SchemaError(f"polynomial must be a list of terms, got {data!r}")
    terms: dict = {}
    for t in data:
        if not isinstance(t, list) or len(t) != 2:
            raise SchemaError(f"bad term {t!r}")
        w = _names(gens, t[1])
        terms[w] = terms.get(w, F.zero()) + _scalar(F, t[0])
    return NCPoly(gens, F, terms)


def poly_to_json(p: NCPoly) -> list:
    return [[format_scalar(c), p.gens.word_names(w)] for w, c in sorted(p.terms.items(), key=lambda t: word_key(t[0]))]


def tensor_from_json(gens, F: FieldDesc, data) -> TensorPoly:
    if not isinstance(data, list):
        raise SchemaError(f"tensor must be a list of terms, got {data!r}")
    terms: dict = {}
    for t in data:
        if not isinstance(t, list) or len(t) != 3:
            raise SchemaError(f"bad tensor term {t!r}")
        k = (_names(gens, t[1]), _names(gens, t[2]))
        terms[k] = terms.get(k, F.zero()) + _scalar(F, t[0])
    return TensorPoly(gens, F, terms)


def tensor_to_json(t: TensorPoly) -> list:
    items = sorted(t.terms.items(), key=lambda kv: (word_key(kv[0][0]), word_key(kv[0][1])))
    return [[format_scalar(c), t.gens.word_names(a), t.gens.word_names(b)] for (a, b), c in items]


def _require(d: dict, key: str, where: str):
    if not isinstance(d, dict):
        raise SchemaError(f"{where} must be an object")
    if key not in d:
        raise SchemaError(f"{where}: missing {key!r}")
    return d[key]


def _table(d, names, where):
    if not isinstance(d, dict):
        raise SchemaError(f"{where} must be an object")
    unknown = [k for k in d if k not in names]
    if unknown:
        raise SchemaError(f"{where}: unknown generator {unknown[0]!r}")
    missing = [k for k in names if k not in d]
    if missing:
        raise SchemaError(f"{where}: no entry for {missing[0]!r}")
    return d


# ---------------------------------------------------------------------------
# object sections


def _parse_finite(F, sec) -> FinHopf:
    basis = _require(sec, "basis", "finite_hopf")
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise SchemaError("finite_hopf.basis must be a nonempty list of names")
    n = len(basis)
    try:
        gens = GenSet(basis)
    except ValueError as e:
        raise SchemaError(str(e)) from None

    def vec(p: NCPoly) -> list[Scalar]:
        out = [F.zero()] * n
        for w, c in p.terms.items():
            if len(w) != 1:
                raise SchemaError("finite_hopf elements must be linear in the basis")
            out[w[0]] = out[w[0]] + c
        return out

    unit = vec(poly_from_json(gens, F, _require(sec, "unit", "finite_hopf")))
    mult_d = _table(_require(sec, "mult", "finite_hopf"), basis, "finite_hopf.mult")
    mult = [[vec(poly_from_json(gens, F, _table(mult_d[a], basis, f"mult.{a}")[b])) for b in basis] for a in basis]
    com_d = _table(_require(sec, "comult", "finite_hopf"), basis, "finite_hopf.comult")
    comult = []
    for a in basis:
        t = tensor_from_json(gens, F, com_d[a])
        m = [[F.zero()] * n for _ in range(n)]
        for (l, r), c in t.terms.items():
            if len(l) != 1 or len(r) != 1:
                raise SchemaError("finite_hopf coproducts must be linear in each leg")
            m[l[0]][r[0]] = m[l[0]][r[0]] + c
        comult.append(m)
    cou_d = _table(_require(sec, "counit", "finite_hopf"), basis, "finite_hopf.counit")
    counit = [_scalar(F, cou_d[a]) for a in basis]

    def matrix(key):
        d = _table(sec[key], basis, f"finite_hopf.{key}")
        cols = [vec(poly_from_json(gens, F, d[a])) for a in basis]
        return Matrix.from_rows(F, [[cols[j][i] for j in range(n)] for i in range(n)])

    _require(sec, "antipode", "finite_hopf")
    S = matrix("antipode")
    Sinv = matrix("antipode_inverse") if "antipode_inverse" in sec else None
    return FinHopf(basis, mult, unit, comult, counit, S, Sinv, field=F, name=str(sec.get("name", "")))


def _emit_finite(A: FinHopf) -> dict:
    basis = list(A.gens.names)
    n = A.dim
    col = lambda m, j: A.element([m[i, j] for i in range(n)])
    out = {
        "basis": basis,
        "unit": poly_to_json(A.algebra_one()),
        "mult": {a: {b: poly_to_json(A.element(A.mult[i][j])) for j, b in enumerate(basis)}
                 for i, a in enumerate(basis)},
        "comult": {a: tensor_to_json(A.comult_of(A.basis_element(i))) for i, a in enumerate(basis)},
        "counit": {a: format_scalar(A.counit_vec[i]) for i, a in enumerate(basis)},
        "antipode": {a: poly_to_json(col(A.antipode_matrix, j)) for j, a in enumerate(basis)},
    }
    if A.antipode_inverse_matrix is not None:
        out["antipode_inverse"] = {a: poly_to_json(col(A.antipode_inverse_matrix, j)) for j, a in enumerate(basis)}
    if A.name:
        out["name"] = A.name
    return out


def _parse_presented(F, sec) -> PresentedHopf:
    names = _require(sec, "generators", "presentation_hopf")
    if not isinstance(names, list) or not names or not all(isinstance(g, str) for g in names):
        raise SchemaError("presentation_hopf.generators must be a nonempty list of names")
    try:
        gens = GenSet(names)
    except ValueError as e:
        raise SchemaError(str(e)) from None
    rels_d = _require(sec, "relations", "presentation_hopf")
    if not isinstance(rels_d, list):
        raise SchemaError("presentation_hopf.relations must be a list")
    rels = [poly_from_json(gens, F, r) for r in rels_d]
    pres = Presentation(gens, [r for r in rels if not r.is_zero()], F)
    comult = {g: tensor_from_json(gens, F, v)
              for g, v in _table(_require(sec, "comult", "presentation_hopf"), names, "comult").items()}
    counit = {g: _scalar(F, v)
              for g, v in _table(_require(sec, "counit", "presentation_hopf"), names, "counit").items()}
    anti = {g: poly_from_json(gens, F, v)
            for g, v in _table(_require(sec, "antipode", "presentation_hopf"), names, "antipode").items()}
    anti_inv = None
    if "antipode_inverse" in sec:
        anti_inv = {g: poly_from_json(gens, F, v)
                    for g, v in _table(sec["antipode_inverse"], names, "antipode_inverse").items()}
    return PresentedHopf(pres, comult, counit, anti, anti_inv, name=str(sec.get("name", "")))


def _emit_presented(A: PresentedHopf) -> dict:
    names = A.gens.names
    out = {
        "generators": list(names),
        "relations": [poly_to_json(r) for r in A.pres.relations],
        "comult": {g: tensor_to_json(A.comult[g]) for g in names},
        "counit": {g: format_scalar(A.counit[g]) for g in names},
        "antipode": {g: poly_to_json(A.antipode[g]) for g in names},
    }
    if A.antipode_inv is not None:
        out["antipode_inverse"] = {g: poly_to_json(A.antipode_inv[g]) for g in names}
    if A.name:
        out["name"] = A.name
    return out


def _parse_matrix(F, rows, where) -> Matrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SchemaError(f"{where} must be a nonempty list of rows")
    if any(len(r) != len(rows) for r in rows):
        raise SchemaError(f"{where} must be square")
    return Matrix.from_rows(F, [[_scalar(F, v) for v in r] for r in rows])


# ---------------------------------------------------------------------------
# documents


def load(text: str) -> Workbench:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return from_document(doc)


def from_document(doc) -> Workbench:
    from .exactmath import Singular
    from .sle import ETensor, Degenerate, build_SLE
    from .universal import build_HF

    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    unknown = [k for k in doc if k not in OBJECT_KINDS + OPTIONAL + ("field",)]
    if unknown:
        raise SchemaError(f"unknown section {unknown[0]!r}")
    F = field_from_text(_require(doc, "field", "document"))
    kinds = [k for k in OBJECT_KINDS if k in doc]
    if len(kinds) != 1:
        raise SchemaError(f"exactly one object section expected among {OBJECT_KINDS}")
    kind = kinds[0]
    sec = doc[kind]
    params: dict = {}
    try:
        if kind == "finite_hopf":
            wb = Workbench(F, kind, _parse_finite(F, sec))
        elif kind == "presentation_hopf":
            wb = Workbench(F, kind, _parse_presented(F, sec))
        elif kind == "hf_matrix":
            M = _parse_matrix(F, _require(sec, "F", "hf_matrix"), "hf_matrix.F")
            H = build_HF(M)
            wb = Workbench(F, kind, H.hopf, H)
            params["F"] = M
        else:
            n, N = _require(sec, "n", "sle_tensor"), _require(sec, "N", "sle_tensor")
            if not (isinstance(n, int) and isinstance(N, int)) or n < 1 or N < 1:
                raise SchemaError("sle_tensor.n and N must be positive integers")
            vals = _require(sec, "E", "sle_tensor")
            if not isinstance(vals, list) or len(vals) != n ** N:
                raise SchemaError(f"sle_tensor.E must list {n ** N} values")
            method = sec.get("method", "minnorm")
            if method not in ("minnorm", "particular"):
                raise SchemaError(f"unknown method {method!r}")
            E = ETensor(n, N, [_scalar(F, v) for v in vals], F)
            S = build_SLE(E, method)
            wb = Workbench(F, kind, S.hopf, S)
            params.update(E=E, method=method)
    except (Singular, Degenerate) as e:
        raise SchemaError(f"{type(e).__name__}: {e}") from None
    except (KeyError, ValueError) as e:
        if isinstance(e, (SchemaError, ParseError)):
            raise
        raise SchemaError(str(e)) from None
    wb.params = params
    A = wb.hopf
    names = A.gens.names

    for label, vals in (doc.get("characters") or {}).items():
        _table(vals, names, f"characters.{label}")
        wb.characters[label] = GenCharacter({g: _scalar(F, vals[g]) for g in names}, label)
    for label, rows in (doc.get("coreps") or {}).items():
        if not isinstance(rows, list) or not rows or any(not isinstance(r, list) or len(r) != len(rows) for r in rows):
            raise SchemaError(f"coreps.{label} must be a square matrix")
        try:
            wb.coreps[label] = MatrixCorep(A, [[poly_from_json(A.gens, F, p) for p in r] for r in rows], label)
        except ValueError as e:
            raise SchemaError(f"coreps.{label}: {e}") from None
    for label, d in (doc.get("sovereign_elements") or {}).items():
        if kind == "finite_hopf":
            raise SchemaError("sovereign_elements apply to presented algebras")
        wb.sovereign_elements[label] = GroupLikeElement(
            poly_from_json(A.gens, F, _require(d, "element", label)),
            poly_from_json(A.gens, F, _require(d, "inverse", label)))
    cob = doc.get("cobraiding")
    if cob is not None:
        if not isinstance(cob, dict) or not (("table" in cob) ^ ("sweedler_parameter" in cob)):
            raise SchemaError("cobraiding needs exactly one of 'table' and 'sweedler_parameter'")
        if "table" in cob:
            wb.cobraiding = {"table": _pair_table(F, names, cob["table"], "cobraiding.table")}
            if "inverse_table" in cob:
                wb.cobraiding["inverse_table"] = _pair_table(F, names, cob["inverse_table"], "cobraiding.inverse_table")
        else:
            if set(names) not in ({"g", "x"}, {"1", "g", "x", "gx"}):
                raise SchemaError("sweedler_parameter needs Sweedler's algebra")
            wb.cobraiding = {"sweedler_parameter": _scalar(F, cob["sweedler_parameter"])}
    cot = doc.get("cotwist")
    if cot is not None:
        if not isinstance(cot, dict):
            raise SchemaError("cotwist must be an object")
        if "from_character" in cot:
            if wb.cobraiding is None:
                raise SchemaError("cotwist from a character needs a cobraiding")
            wb.cotwist = {"from_character": str(cot["from_character"])}
        elif "values" in cot:
            if kind != "finite_hopf":
                raise SchemaError("cotwist values need a finite-dimensional algebra")
            wb.cotwist = {k: {b: _scalar(F, v) for b, v in _table(cot[k], names, f"cotwist.{k}").items()}
                          for k in ("values", "inverse_values") if _require(cot, k, "cotwist") is not None}
        else:
            raise SchemaError("cotwist needs 'from_character' or 'values'")
    opts = doc.get("options") or {}
    if not isinstance(opts, dict) or any(k not in ("degree_bound", "degree_cap") for k in opts):
        raise SchemaError("options accepts degree_bound and degree_cap")
    db, cap = opts.get("degree_bound"), opts.get("degree_cap", DEFAULT_CAP)
    if db is not None and (not isinstance(db, int) or db < 0):
        raise SchemaError("degree_bound must be a nonnegative integer or null")
    if not isinstance(cap, int) or cap < 0:
        raise SchemaError("degree_cap must be a nonnegative integer")
    wb.degree_bound, wb.degree_cap = db, cap
    return wb


def _pair_table(F, names, d, where) -> dict:
    _table(d, names, where)
    out = {}
    for a in names:
        _table(d[a], names, f"{where}.{a}")
        for b in names:
            out[(a, b)] = _scalar(F, d[a][b])
    return out


def to_document(wb: Workbench) -> dict:
    F = wb.field
    doc: dict = {"field": str(F)}
    if wb.kind == "finite_hopf":
        doc["finite_hopf"] = _emit_finite(wb.hopf)
    elif wb.kind == "presentation_hopf":
        doc["presentation_hopf"] = _emit_presented(wb.hopf)
    elif wb.kind == "hf_matrix":
        M = wb.params["F"]
        doc["hf_matrix"] = {"F": [[format_scalar(M[i, j]) for j in range(M.cols)] for i in range(M.rows)]}
    else:
        E = wb.params["E"]
        doc["sle_tensor"] = {"n": E.n, "N": E.N, "E": [format_scalar(v) for v in E.dense()],
                             "method": wb.params.get("method", "minnorm")}
    names = wb.hopf.gens.names
    if wb.characters:
        doc["characters"] = {k: {g: format_scalar(c.values[g]) for g in names} for k, c in wb.characters.items()}
    if wb.coreps:
        doc["coreps"] = {k: [[poly_to_json(p) for p in r] for r in V.entries] for k, V in wb.coreps.items()}
    if wb.sovereign_elements:
        doc["sovereign_elements"] = {k: {"element": poly_to_json(g.element), "inverse": poly_to_json(g.inverse)}
                                     for k, g in wb.sovereign_elements.items()}
    if wb.cobraiding is not None:
        if "table" in wb.cobraiding:
            doc["cobraiding"] = {key: {a: {b: format_scalar(t[(a, b)]) for b in names} for a in names}
                                 for key, t in wb.cobraiding.items()}
        else:
            doc["cobraiding"] = {"sweedler_parameter": format_scalar(wb.cobraiding["sweedler_parameter"])}
    if wb.cotwist is not None:
        if "from_character" in wb.cotwist:
            doc["cotwist"] = dict(wb.cotwist)
        else:
            doc["cotwist"] = {k: {b: format_scalar(v) for b, v in d.items()} for k, d in wb.cotwist.items()}
    doc["options"] = {"degree_bound": wb.degree_bound, "degree_cap": wb.degree_cap}
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def canonical(wb: Workbench) -> str:
    return dumps(to_document(wb))

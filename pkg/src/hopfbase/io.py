"""JSON formats for Hopf algebras, groups and noncommutative polynomials.

A Hopf algebra file looks like::

    {
      "name": "sweedler",
      "cyclotomic_order": 1,
      "basis": ["1", "g", "v", "gv"],
      "unit": {"1": "1"},
      "counit": {"1": "1", "g": "1"},
      "mul": {"g": {"g": {"1": "1"}, "v": {"gv": "1"}}, ...},
      "comul": {"v": [["1", "v", "1"], ["v", "g", "1"]], ...},
      "antipode": {"v": {"gv": "1"}, ...},
      "declared_grouplikes": [{"1": "1"}, {"g": "1"}],
      "group_part": {"v": "g", "gv": "1"}
    }

Omitted entries are zero. Scalars are integers or literal strings such as
"-2/3" or "1-2/3*z^2" (z a primitive root of unity of the given order).
"""

from __future__ import annotations

import hashlib
import json

from .errors import InputError, ScalarParseError
from .groups import group_by_name, group_from_json
from .hopf import HopfAlgebraData, functions_on_group, group_algebra, sweedler, taft, uqbar_sl2
from .scalars import CyclotomicField, format_scalar

__all__ = [
    "parse_json_text",
    "hopf_from_json",
    "hopf_to_json",
    "load_hopf",
    "builtin_algebra",
    "BUILTIN_NAMES",
    "load_group",
    "ncpoly_from_json",
    "digest",
    "canonical_dumps",
]

REQUIRED = ("basis", "unit", "counit", "mul", "comul", "antipode")


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def digest(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


def parse_json_text(text, what="input"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("%s: invalid JSON at line %d column %d: %s" % (what, exc.lineno, exc.colno, exc.msg)) from exc


def _scalar(F, value, field):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError("scalar must be an integer or a string literal", field)
    try:
        return F.coerce(value) if isinstance(value, int) else F.parse(value)
    except ScalarParseError as exc:
        raise InputError(str(exc), field) from exc


def _vector(F, data, pos, field):
    if not isinstance(data, dict):
        raise InputError("expected an object mapping basis labels to scalars", field)
    out = {}
    for label, c in data.items():
        if label not in pos:
            raise InputError("unknown basis label %r" % label, "%s.%s" % (field, label))
        c = _scalar(F, c, "%s.%s" % (field, label))
        if c:
            out[pos[label]] = c
    return out


def _per_label(data, pos, field):
    if not isinstance(data, dict):
        raise InputError("expected an object keyed by basis labels", field)
    for label in data:
        if label not in pos:
            raise InputError("unknown basis label %r" % label, "%s.%s" % (field, label))
    return data


def hopf_from_json(data):
    """Build a :class:`HopfAlgebraData` from parsed JSON, with field diagnostics."""
    if not isinstance(data, dict):
        raise InputError("Hopf algebra must be a JSON object", "")
    for key in REQUIRED:
        if key not in data:
            raise InputError("missing field", key)
    order = data.get("cyclotomic_order", 1)
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise InputError("must be a positive integer", "cyclotomic_order")
    F = CyclotomicField(order)
    basis = data["basis"]
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise InputError("must be a non-empty list of strings", "basis")
    if len(set(basis)) != len(basis):
        raise InputError("labels must be distinct", "basis")
    n = len(basis)
    pos = {b: i for i, b in enumerate(basis)}

    unit = _vector(F, data["unit"], pos, "unit")
    counit_map = _vector(F, data["counit"], pos, "counit")
    counit = [counit_map.get(i, F.zero) for i in range(n)]

    mul = [[{} for _ in range(n)] for _ in range(n)]
    for a, row in _per_label(data["mul"], pos, "mul").items():
        for b, vec in _per_label(row, pos, "mul.%s" % a).items():
            mul[pos[a]][pos[b]] = _vector(F, vec, pos, "mul.%s.%s" % (a, b))

    comul = [{} for _ in range(n)]
    for a, terms in _per_label(data["comul"], pos, "comul").items():
        if not isinstance(terms, list):
            raise InputError("expected a list of [left, right, scalar] triples", "comul.%s" % a)
        for k, term in enumerate(terms):
            where = "comul.%s[%d]" % (a, k)
            if not isinstance(term, list) or len(term) != 3:
                raise InputError("expected [left, right, scalar]", where)
            left, right, c = term
            for lab in (left, right):
                if lab not in pos:
                    raise InputError("unknown basis label %r" % (lab,), where)
            key = (pos[left], pos[right])
            value = comul[pos[a]].get(key, F.zero) + _scalar(F, c, where)
            if value:
                comul[pos[a]][key] = value
            else:
                comul[pos[a]].pop(key, None)

    antipode = [{} for _ in range(n)]
    for a, vec in _per_label(data["antipode"], pos, "antipode").items():
        antipode[pos[a]] = _vector(F, vec, pos, "antipode.%s" % a)

    grouplikes = None
    if data.get("declared_grouplikes") is not None:
        gl = data["declared_grouplikes"]
        if not isinstance(gl, list):
            raise InputError("expected a list of vectors", "declared_grouplikes")
        grouplikes = [_vector(F, v, pos, "declared_grouplikes[%d]" % k) for k, v in enumerate(gl)]

    group_part = None
    if data.get("group_part") is not None:
        gp = _per_label(data["group_part"], pos, "group_part")
        group_part = {}
        for a, b in gp.items():
            if b not in pos:
                raise InputError("unknown basis label %r" % (b,), "group_part.%s" % a)
            group_part[pos[a]] = pos[b]

    return HopfAlgebraData(
        str(data.get("name", "H")), F, basis, mul, unit, comul, counit, antipode, grouplikes, group_part
    )


def hopf_to_json(H):
    lab = H.basis
    fmt = format_scalar

    def vec(v):
        return {lab[i]: fmt(c) for i, c in sorted(v.items())}

    out = {
        "name": H.name,
        "cyclotomic_order": H.field.order,
        "basis": list(lab),
        "unit": vec(H.unit),
        "counit": {lab[i]: fmt(c) for i, c in enumerate(H.counit) if c},
        "mul": {
            lab[a]: {lab[b]: vec(H.mul[a][b]) for b in range(H.dim) if H.mul[a][b]}
            for a in range(H.dim)
        },
        "comul": {
            lab[a]: [[lab[j], lab[k], fmt(c)] for (j, k), c in sorted(H.comul[a].items())] for a in range(H.dim)
        },
        "antipode": {lab[a]: vec(H.antipode[a]) for a in range(H.dim)},
    }
    out["mul"] = {a: row for a, row in out["mul"].items() if row}
    if H.grouplikes is not None:
        out["declared_grouplikes"] = [vec(g) for g in H.grouplikes]
    if H.group_part is not None:
        out["group_part"] = {lab[a]: lab[b] for a, b in sorted(H.group_part.items())}
    return out


def load_hopf(path):
    """Read a Hopf algebra file; returns ``(H, sha256 of the file bytes)``."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc.strerror), "input") from exc
    data = parse_json_text(raw.decode("utf-8"), str(path))
    return hopf_from_json(data), digest(raw)


BUILTIN_NAMES = (
    "sweedler",
    "taft<n>",
    "uqbar<e>",
    "k[<group>]",
    "O(<group>)",
)


def builtin_algebra(name):
    """Built-ins by name: sweedler, taft3, uqbar2, k[S3], O(Z4), ..."""
    try:
        if name == "sweedler":
            return sweedler()
        if name.startswith("taft"):
            return taft(int(name[4:]))
        if name.startswith("uqbar"):
            return uqbar_sl2(int(name[5:]))
        if name.startswith("k[") and name.endswith("]"):
            return group_algebra(group_by_name(name[2:-1]))
        if name.startswith("O(") and name.endswith(")"):
            return functions_on_group(group_by_name(name[2:-1]))
    except (ValueError, KeyError) as exc:
        raise InputError("unknown built-in %r (%s)" % (name, exc), "builtin") from exc
    raise InputError("unknown built-in %r; expected one of %s" % (name, ", ".join(BUILTIN_NAMES)), "builtin")


def load_group(name=None, path=None):
    """A group by built-in name or from a JSON file; returns ``(G, digest)``."""
    if path is not None:
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InputError("cannot read %s: %s" % (path, exc.strerror), "group-file") from exc
        return group_from_json(parse_json_text(raw.decode("utf-8"), str(path))), digest(raw)
    try:
        G = group_by_name(name)
    except (KeyError, ValueError) as exc:
        raise InputError("unknown group %r" % name, "group") from exc
    return G, digest(canonical_dumps(G.to_json()))


def ncpoly_from_json(data, H):
    """A list of [word, scalar] pairs, each word a list of basis labels."""
    from .pitheory import NcPoly

    if not isinstance(data, list):
        raise InputError("expected a list of [word, scalar] pairs", "poly")
    pos = {b: i for i, b in enumerate(H.basis)}
    terms = {}
    for k, item in enumerate(data):
        where = "poly[%d]" % k
        if not isinstance(item, list) or len(item) != 2 or not isinstance(item[0], list):
            raise InputError("expected [word, scalar]", where)
        word = []
        for lab in item[0]:
            if lab not in pos:
                raise InputError("unknown basis label %r" % (lab,), where)
            word.append(pos[lab])
        c = _scalar(H.field, item[1], where)
        terms[tuple(word)] = terms.get(tuple(word), H.field.zero) + c
    return NcPoly(H.dim, terms)

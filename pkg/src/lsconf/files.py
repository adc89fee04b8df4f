"""JSON file formats: algebras, derivation matrices, cocycle families.

Algebra files are sparse and label-keyed so that small examples diff
cleanly:

    {"name": "...", "dim": 2, "basis": ["L", "W"],
     "ops": {"ld": {"L,L": {"L": "1"}, "W,L": {"W": "1"}}}}

Rationals travel as strings matching -?digits[/digits]; they are
canonicalized on load, so load -> save -> load is identity on the
canonical spec.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction

from .algebras import AlgebraSpec, LinearMapSpec
from .cohomology import CocycleFamily
from .linalg import ZERO

RATIONAL_RE = re.compile(r"-?\d+(/\d+)?$")

FILE_OPS = ("ld", "rd", "circ", "dot")


class FileFormatError(Exception):
    def __init__(self, message, location=None):
        if location:
            message = f"{message} (at {location})"
        super().__init__(message)
        self.location = location


def parse_rational(text, location=None):
    if not isinstance(text, str) or not RATIONAL_RE.match(text):
        raise FileFormatError(f"not a rational string: {text!r}", location)
    if "/" in text and text.split("/")[1].lstrip("0") == "":
        raise FileFormatError(f"zero denominator: {text!r}", location)
    return Fraction(text)


def _rational_cell(value, location):
    """Accept rational strings and plain JSON integers."""
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return parse_rational(value, location)


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileFormatError(str(exc), path) from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid JSON: {exc}", path) from exc


def load_algebra(path):
    doc = _load_json(path)
    for key in ("name", "dim", "basis"):
        if key not in doc:
            raise FileFormatError(f"missing field {key!r}", path)
    name, dim, basis = doc["name"], doc["dim"], doc["basis"]
    if not isinstance(dim, int) or dim < 1:
        raise FileFormatError("dim must be a positive integer", "dim")
    if (not isinstance(basis, list) or len(basis) != dim
            or not all(isinstance(b, str) for b in basis)):
        raise FileFormatError("basis must list dim label strings", "basis")
    if len(set(basis)) != dim:
        raise FileFormatError("basis labels must be distinct", "basis")
    index = {lab: i for i, lab in enumerate(basis)}
    ops = {}
    for op, table in (doc.get("ops") or {}).items():
        if op not in FILE_OPS:
            raise FileFormatError(f"unknown op {op!r}", f"ops.{op}")
        tensor = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        if not isinstance(table, dict):
            raise FileFormatError("op table must be an object", f"ops.{op}")
        for pair, cell in table.items():
            parts = [p.strip() for p in pair.split(",")]
            if len(parts) != 2 or not all(p in index for p in parts):
                raise FileFormatError(f"bad basis pair {pair!r}", f"ops.{op}.{pair}")
            i, j = index[parts[0]], index[parts[1]]
            if not isinstance(cell, dict):
                raise FileFormatError("entry must map labels to rationals",
                                      f"ops.{op}.{pair}")
            for lab, val in cell.items():
                if lab not in index:
                    raise FileFormatError(f"unknown label {lab!r}",
                                          f"ops.{op}.{pair}.{lab}")
                tensor[i][j][index[lab]] = _rational_cell(
                    val, f"ops.{op}.{pair}.{lab}")
        ops[op] = tensor
    return AlgebraSpec(name, dim, tuple(basis), ops)


def algebra_to_json(alg):
    ops = {}
    for op in sorted(alg.ops):
        if op not in FILE_OPS:
            raise FileFormatError(f"op {op!r} has no file representation", op)
        table = {}
        t = alg.ops[op]
        for i in range(alg.dim):
            for j in range(alg.dim):
                cell = {alg.basis[k]: str(t[i][j][k])
                        for k in range(alg.dim) if t[i][j][k]}
                if cell:
                    table[f"{alg.basis[i]},{alg.basis[j]}"] = cell
        if table:
            ops[op] = table
    return {"name": alg.name, "dim": alg.dim,
            "basis": list(alg.basis), "ops": ops}


def dump_json(doc):
    """The byte-stable rendering used for every JSON we write."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_algebra(alg, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(algebra_to_json(alg)))


def load_matrix(path, expect_dim=None):
    doc = _load_json(path)
    rows = doc.get("matrix")
    if not isinstance(rows, list) or not rows:
        raise FileFormatError("missing 'matrix' array", path)
    n = len(rows)
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError("matrix must be square", f"matrix[{r}]")
        out.append([_rational_cell(x, f"matrix[{r}][{c}]")
                    for c, x in enumerate(row)])
    if expect_dim is not None and n != expect_dim:
        raise FileFormatError(f"matrix is {n}x{n}, expected {expect_dim}",
                              "matrix")
    return LinearMapSpec(tuple(tuple(r) for r in out))


def load_cocycle(path, dim=None):
    doc = _load_json(path)
    cap = doc.get("degree_cap")
    forms = doc.get("forms")
    if not isinstance(cap, int) or cap < 0:
        raise FileFormatError("degree_cap must be a non-negative integer",
                              "degree_cap")
    if not isinstance(forms, list) or len(forms) != cap + 1:
        raise FileFormatError("need degree_cap + 1 forms", "forms")
    parsed = []
    for i, f in enumerate(forms):
        mat = []
        for a, row in enumerate(f):
            mat.append([_rational_cell(x, f"forms[{i}][{a}][{b}]")
                        for b, x in enumerate(row)])
        parsed.append(tuple(tuple(r) for r in mat))
    fam = CocycleFamily(cap, tuple(parsed))
    if dim is not None and fam.dim != dim:
        raise FileFormatError(f"cocycle forms are {fam.dim}-dimensional, "
                              f"expected {dim}", "forms")
    return fam


def cocycle_to_json(fam):
    return {"degree_cap": fam.degree_cap,
            "forms": [[[str(x) for x in row] for row in f] for f in fam.forms]}


def file_sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()

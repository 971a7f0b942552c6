"""JSON file formats for algebras and representations.

Algebra file::

    {"dim": 3, "basis": ["H", "E", "F"],
     "brackets": [{"i": 0, "j": 1, "k": 1, "c": 2}, ...]}

Each record lists a nonzero C[i, j, k] with i < j; the loader also sets
C[j, i, k] = -c. Representation file::

    {"algebra_dim": m, "degree": n, "matrices": [[[...], ...], ...]}

Any path argument of the form ``catalog:<name>`` resolves to a catalog
entry instead of a file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import numpy as np

from .algebra import DEFAULT_TOLERANCE, LieAlgebra, nonzero_brackets
from .catalog import catalog_algebra, catalog_representation
from .representation import Representation

CATALOG_PREFIX = "catalog:"

PathLike = Union[str, Path]


class FormatError(ValueError):
    """A definition file could not be parsed; the message names the line or field."""


def _read_json(source: PathLike):
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"{path}: cannot read file ({exc.strerror or exc})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _int_field(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise FormatError(f"{where}: field {key!r} must be an integer, got {val!r}")
    return val


def algebra_from_dict(data, tolerance: float = DEFAULT_TOLERANCE, where: str = "algebra") -> LieAlgebra:
    if not isinstance(data, dict):
        raise FormatError(f"{where}: top level must be a JSON object")
    dim = _int_field(data, "dim", where)
    if dim < 1:
        raise FormatError(f"{where}: field 'dim' must be positive, got {dim}")
    basis = data.get("basis", [])
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise FormatError(f"{where}: field 'basis' must be an array of strings")
    if basis and len(basis) != dim:
        raise FormatError(f"{where}: field 'basis' has {len(basis)} names for dim {dim}")
    records = data.get("brackets", [])
    if not isinstance(records, list):
        raise FormatError(f"{where}: field 'brackets' must be an array")
    c = np.zeros((dim, dim, dim))
    seen = set()
    for n, rec in enumerate(records):
        loc = f"{where}: brackets[{n}]"
        if not isinstance(rec, dict):
            raise FormatError(f"{loc}: must be an object")
        i, j, k = (_int_field(rec, key, loc) for key in "ijk")
        for key, val in zip("ijk", (i, j, k)):
            if not 0 <= val < dim:
                raise FormatError(f"{loc}: index {key}={val} out of range for dim {dim}")
        if i >= j:
            raise FormatError(f"{loc}: requires i < j, got i={i}, j={j}")
        val = rec.get("c")
        if isinstance(val, bool) or not isinstance(val, (int, float)):
            raise FormatError(f"{loc}: field 'c' must be a number, got {val!r}")
        if (i, j, k) in seen:
            raise FormatError(f"{loc}: duplicate entry for (i, j, k) = ({i}, {j}, {k})")
        seen.add((i, j, k))
        c[i, j, k] = val
        c[j, i, k] = -val
    return LieAlgebra(c, tuple(basis), tolerance)


def algebra_to_dict(g: LieAlgebra) -> dict:
    return {
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": [
            {"i": i, "j": j, "k": k, "c": int(c) if float(c).is_integer() else c}
            for i, j, k, c in nonzero_brackets(g)
        ],
    }


def representation_from_dict(data, tolerance: float = DEFAULT_TOLERANCE, where: str = "representation") -> Representation:
    if not isinstance(data, dict):
        raise FormatError(f"{where}: top level must be a JSON object")
    m = _int_field(data, "algebra_dim", where)
    n = _int_field(data, "degree", where)
    if m < 1 or n < 1:
        raise FormatError(f"{where}: 'algebra_dim' and 'degree' must be positive")
    mats = data.get("matrices")
    if not isinstance(mats, list):
        raise FormatError(f"{where}: missing or non-array field 'matrices'")
    if len(mats) != m:
        raise FormatError(f"{where}: 'matrices' has {len(mats)} entries for algebra_dim {m}")
    try:
        arr = np.array(mats, dtype=float)
    except (TypeError, ValueError):
        raise FormatError(f"{where}: 'matrices' must be numeric {n}x{n} arrays") from None
    if arr.shape != (m, n, n):
        raise FormatError(f"{where}: 'matrices' has shape {arr.shape}, expected {(m, n, n)}")
    return Representation(arr, tolerance)


def representation_to_dict(rep: Representation) -> dict:
    def num(x: float):
        return int(x) if float(x).is_integer() else float(x)

    return {
        "algebra_dim": rep.algebra_dim,
        "degree": rep.degree,
        "matrices": [[[num(x) for x in row] for row in mat] for mat in rep.matrices],
    }


def load_algebra(source: PathLike, tolerance: float = DEFAULT_TOLERANCE) -> LieAlgebra:
    text = str(source)
    if text.startswith(CATALOG_PREFIX):
        try:
            return catalog_algebra(text[len(CATALOG_PREFIX):]).with_tolerance(tolerance)
        except KeyError as exc:
            raise FormatError(exc.args[0]) from None
    return algebra_from_dict(_read_json(source), tolerance, where=text)


def load_representation(source: PathLike, tolerance: float = DEFAULT_TOLERANCE) -> Representation:
    text = str(source)
    if text.startswith(CATALOG_PREFIX):
        try:
            rep = catalog_representation(text[len(CATALOG_PREFIX):])
        except KeyError as exc:
            raise FormatError(exc.args[0]) from None
        return Representation(rep.matrices, tolerance)
    return representation_from_dict(_read_json(source), tolerance, where=text)


def _write(path: PathLike, data: dict) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")


def save_algebra(g: LieAlgebra, path: PathLike) -> None:
    _write(path, algebra_to_dict(g))


def save_representation(rep: Representation, path: PathLike) -> None:
    _write(path, representation_to_dict(rep))

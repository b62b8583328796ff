"""Canonical JSON serialization.

All scalars travel as lowest-terms rational strings ("p" or "p/q", q > 0) —
never floats — and every emitted document uses sorted keys and fixed
separators, so parse + re-serialize is byte-identical.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import SchemaError
from .families import FamilyParams
from .linearize import LinTensor
from .matrix import TruncMatrix
from .polynomial import Polynomial
from .sequences import HSpec

_RAT_RE = re.compile(r"^-?\d+(/-?\d+)?$")


def rat_to_str(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def rat_from_str(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"expected a rational string, got {s!r}")
    if isinstance(s, int):
        # Integers are tolerated on input; output is always strings.
        return Fraction(s)
    if not _RAT_RE.match(s):
        raise SchemaError(f"malformed rational string {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"malformed rational string {s!r}: {exc}") from None


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _rat_list(values, what: str) -> list:
    _require(isinstance(values, list), f"{what} must be a list")
    return [rat_from_str(v) for v in values]


def _rat_grid(values, what: str) -> list:
    _require(isinstance(values, list), f"{what} must be a list of lists")
    out = []
    for row in values:
        _require(isinstance(row, list), f"{what} rows must be lists")
        out.append([rat_from_str(v) for v in row])
    return out


# -- matrices ----------------------------------------------------------------

def matrix_to_jsonable(m: TruncMatrix) -> dict:
    return {
        "size": m.size,
        "index": m.index,
        "rows": [[rat_to_str(v) for v in row] for row in m.rows],
    }


def matrix_from_jsonable(obj) -> TruncMatrix:
    _require(isinstance(obj, dict), "matrix must be an object")
    _require(
        set(obj) == {"size", "index", "rows"},
        f"matrix needs exactly keys size/index/rows, got {sorted(obj)}",
    )
    size, index = obj["size"], obj["index"]
    _require(isinstance(size, int) and size >= 1, "size must be a positive integer")
    _require(isinstance(index, int), "index must be an integer")
    rows = _rat_grid(obj["rows"], "matrix rows")
    _require(
        len(rows) == size and all(len(r) == size for r in rows),
        f"rows must form a {size}x{size} block",
    )
    try:
        return TruncMatrix(rows, index=index, exact_rows=size)
    except Exception as exc:
        raise SchemaError(f"inconsistent matrix payload: {exc}") from None


# -- polynomials -------------------------------------------------------------

def polynomial_to_jsonable(p: Polynomial) -> dict:
    return {"coeffs": [rat_to_str(c) for c in p.coeffs]}

def polynomial_from_jsonable(obj) -> Polynomial:
    _require(isinstance(obj, dict) and set(obj) == {"coeffs"}, "polynomial needs key coeffs")
    return Polynomial(_rat_list(obj["coeffs"], "coeffs"))


# -- H specs -----------------------------------------------------------------

def hspec_to_jsonable(spec: HSpec) -> dict:
    if spec.kind == "tridiagonal":
        return {
            "type": "tridiagonal",
            "beta": [rat_to_str(b) for b in spec.beta],
            "alpha": [rat_to_str(a) for a in spec.alpha],
        }
    if spec.kind == "rows":
        return {"type": "rows", "rows": [[rat_to_str(v) for v in r] for r in spec.rows]}
    fam = spec.family
    if fam.name == "charlier":
        return {"type": "charlier", "a": rat_to_str(fam.a)}
    return {"type": fam.name, "a": rat_to_str(fam.a), "b": rat_to_str(fam.b)}


def hspec_from_jsonable(obj) -> HSpec:
    _require(isinstance(obj, dict), "H spec must be an object")
    kind = obj.get("type")
    if kind == "tridiagonal":
        _require(set(obj) == {"type", "beta", "alpha"}, "tridiagonal spec needs beta and alpha")
        return HSpec.tridiagonal(
            _rat_list(obj["beta"], "beta"), _rat_list(obj["alpha"], "alpha")
        )
    if kind == "rows":
        _require(set(obj) == {"type", "rows"}, "rows spec needs key rows")
        return HSpec.from_rows(_rat_grid(obj["rows"], "rows"))
    if kind in ("chebyshev", "hermite"):
        _require(set(obj) <= {"type", "a", "b"}, f"{kind} spec takes a and b")
        _require("a" in obj, f"{kind} spec needs a")
        a = rat_from_str(obj["a"])
        b = rat_from_str(obj.get("b", "0"))
        try:
            return HSpec.from_family(FamilyParams(kind, a, b))
        except Exception as exc:
            raise SchemaError(str(exc)) from None
    if kind == "charlier":
        _require(set(obj) == {"type", "a"}, "charlier spec takes only a")
        try:
            return HSpec.from_family(FamilyParams("charlier", rat_from_str(obj["a"])))
        except Exception as exc:
            raise SchemaError(str(exc)) from None
    raise SchemaError(f"unknown H spec type {kind!r}")


# -- tensors and connection matrices ------------------------------------------

def tensor_to_jsonable(t: LinTensor) -> dict:
    return {
        "n_max": t.n_max,
        "slices": [
            {"k": k, "matrix": [[rat_to_str(v) for v in row] for row in t.slices[k]]}
            for k in range(t.k_max + 1)
        ],
    }


def tensor_from_jsonable(obj) -> LinTensor:
    _require(isinstance(obj, dict) and set(obj) == {"n_max", "slices"}, "tensor needs n_max and slices")
    n_max = obj["n_max"]
    _require(isinstance(n_max, int) and n_max >= 0, "n_max must be a nonnegative integer")
    slices_in = obj["slices"]
    _require(isinstance(slices_in, list) and len(slices_in) == 2 * n_max + 1,
             f"tensor needs {2 * n_max + 1} slices")
    slices = []
    for k, entry in enumerate(slices_in):
        _require(isinstance(entry, dict) and set(entry) == {"k", "matrix"},
                 "each slice needs keys k and matrix")
        _require(entry["k"] == k, f"slice {k} is labeled {entry['k']}")
        grid = _rat_grid(entry["matrix"], "slice matrix")
        _require(len(grid) == n_max + 1 and all(len(r) == n_max + 1 for r in grid),
                 f"slice {k} must be {n_max + 1} square")
        slices.append(tuple(tuple(v for v in row) for row in grid))
    return LinTensor(n_max=n_max, k_max=2 * n_max, slices=tuple(slices))


def connection_to_jsonable(m_max: int, matrix) -> dict:
    return {
        "m_max": m_max,
        "matrix": [[rat_to_str(v) for v in row] for row in matrix],
    }


def connection_from_jsonable(obj):
    _require(isinstance(obj, dict) and set(obj) == {"m_max", "matrix"},
             "connection needs m_max and matrix")
    m_max = obj["m_max"]
    _require(isinstance(m_max, int) and m_max >= 0, "m_max must be a nonnegative integer")
    grid = _rat_grid(obj["matrix"], "connection matrix")
    _require(len(grid) == m_max + 1 and all(len(r) == m_max + 1 for r in grid),
             f"connection matrix must be {m_max + 1} square")
    return m_max, grid


# -- files --------------------------------------------------------------------

def read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON: {exc}") from None


def write_json(path: str, jsonable) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_dumps(jsonable))

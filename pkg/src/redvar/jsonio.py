"""JSON wire format: scalars as "p/q" strings, matrices as nested arrays,
subspaces as {"n": n, "basis": [matrix, ...]}."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .polys import fmt_scalar

_SCALAR = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class InputError(ValueError):
    """Malformed user input; the message names the offending location."""


def parse_scalar(s, where: str = "scalar") -> Fraction:
    if isinstance(s, bool):
        raise InputError(f"{where}: expected a rational string, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputError(f"{where}: expected a rational string, got {s!r}")
    m = _SCALAR.match(s)
    if not m:
        raise InputError(f"{where}: malformed scalar {s!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise InputError(f"{where}: zero denominator in {s!r}")
    return Fraction(int(m.group(1)), den)


def parse_matrix(obj, where: str = "matrix", n: int | None = None) -> list[list[Fraction]]:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError(f"{where}: expected a non-empty array of rows")
    width = len(obj[0])
    out = []
    for i, row in enumerate(obj):
        if len(row) != width:
            raise InputError(f"{where}: row {i} has length {len(row)}, expected {width}")
        out.append([parse_scalar(x, f"{where}[{i}][{j}]") for j, x in enumerate(row)])
    if n is not None and (len(out) != n or width != n):
        raise InputError(f"{where}: expected {n}x{n}, got {len(out)}x{width}")
    return out


def format_matrix(m) -> list[list[str]]:
    return [[fmt_scalar(x) for x in row] for row in m]


def parse_subspace(obj, where: str = "subspace"):
    from .lie import LieSubspace

    if not isinstance(obj, dict) or "n" not in obj or "basis" not in obj:
        raise InputError(f"{where}: expected an object with keys 'n' and 'basis'")
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{where}.n: expected a positive integer")
    mats = [parse_matrix(m, f"{where}.basis[{k}]", n) for k, m in enumerate(obj["basis"])]
    try:
        return LieSubspace.from_matrices(n, mats)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def format_subspace(s) -> dict:
    return {"n": s.n, "basis": [format_matrix(m) for m in s.matrices()]}


def load_json(path: str | Path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)

"""JSON documents for algebras and matrices.

The algebra document is the single wire format shared by the files the
CLI reads, the HTTP service bodies and the catalog export:

    {"dim": n, "kind": "general",
     "gamma": [[i, j, k, "rational"], ...]}

    {"dim": n, "kind": "evolution",
     "matrix": [["rational", ...], ...]}      row i = coefficients of e_i^2

Indices are 1-based, rationals are strings, duplicate (i, j, k) entries
are an error and round-trips are bit-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError
from .evolution import EvolutionMatrix, to_tensor
from .exact import Matrix, format_rational, parse_rational
from .structure import CubicTensor

KIND_GENERAL = "general"
KIND_EVOLUTION = "evolution"


@dataclass(frozen=True)
class AlgebraInput:
    """A parsed algebra document: the tensor plus, for evolution files,
    the natural-basis matrix it came from."""

    kind: str
    tensor: CubicTensor
    evolution: EvolutionMatrix | None

    @property
    def dim(self) -> int:
        return self.tensor.dim


def parse_algebra_document(doc) -> AlgebraInput:
    if not isinstance(doc, dict):
        raise FormatError("algebra document must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise FormatError("'dim' must be a positive integer")
    kind = doc.get("kind")
    if kind == KIND_GENERAL:
        raw = doc.get("gamma")
        if not isinstance(raw, list):
            raise FormatError("kind=general requires a 'gamma' list")
        gamma: dict[tuple[int, int, int], Fraction] = {}
        for item in raw:
            if not (isinstance(item, (list, tuple)) and len(item) == 4):
                raise FormatError(f"bad gamma entry: {item!r}")
            i, j, k, text = item
            if not all(isinstance(t, int) for t in (i, j, k)):
                raise FormatError(f"gamma indices must be integers: {item!r}")
            if not all(1 <= t <= dim for t in (i, j, k)):
                raise FormatError(f"gamma index {(i, j, k)} outside 1..{dim}")
            if (i, j, k) in gamma:
                raise FormatError(f"duplicate gamma entry at {(i, j, k)}")
            gamma[(i, j, k)] = parse_rational(text)
        return AlgebraInput(KIND_GENERAL, CubicTensor(dim, gamma), None)
    if kind == KIND_EVOLUTION:
        raw = doc.get("matrix")
        if not (isinstance(raw, list) and len(raw) == dim):
            raise FormatError("kind=evolution requires a dim x dim 'matrix'")
        rows = []
        for row in raw:
            if not (isinstance(row, list) and len(row) == dim):
                raise FormatError("evolution matrix must be square of size dim")
            rows.append([parse_rational(x) for x in row])
        evo = EvolutionMatrix(Matrix.from_rows(rows))
        return AlgebraInput(KIND_EVOLUTION, to_tensor(evo), evo)
    raise FormatError(f"unknown algebra kind: {kind!r}")


def tensor_document(t: CubicTensor) -> dict:
    return {
        "dim": t.dim,
        "kind": KIND_GENERAL,
        "gamma": [[i, j, k, format_rational(v)] for (i, j, k), v in sorted(t.entries())],
    }


def evolution_document(e: EvolutionMatrix) -> dict:
    return {
        "dim": e.dim,
        "kind": KIND_EVOLUTION,
        "matrix": e.m.to_strings(),
    }


def algebra_document(alg: AlgebraInput) -> dict:
    if alg.kind == KIND_EVOLUTION:
        return evolution_document(alg.evolution)
    return tensor_document(alg.tensor)


def parse_matrix_document(doc) -> Matrix:
    """Matrix file format: {"rows": [["rational", ...], ...]}."""
    if not isinstance(doc, dict) or "rows" not in doc:
        raise FormatError("matrix document must be an object with a 'rows' field")
    raw = doc["rows"]
    if not (isinstance(raw, list) and raw and all(isinstance(r, list) for r in raw)):
        raise FormatError("'rows' must be a non-empty list of lists")
    width = len(raw[0])
    if any(len(r) != width for r in raw):
        raise FormatError("matrix rows have mixed lengths")
    return Matrix.from_rows([[parse_rational(x) for x in row] for row in raw])


def load_algebra_file(path: str) -> AlgebraInput:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    return parse_algebra_document(doc)


def load_matrix_file(path: str) -> Matrix:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    return parse_matrix_document(doc)


def dump_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)

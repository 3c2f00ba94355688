from typing import Any, Dict, List

from src.diagram import Diagram
from src.engine import CoefficientPair, Seed, TropSemifield, initial_seed
from src.matrix_core import ExchangeMatrix, is_sign_skew_symmetric
from src.utils.errors import InputError, NotSignSkewSymmetricError
from src.utils.io import read_json


def _require(data: Any, key: str, kind: type, where: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"{where}: missing key '{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise InputError(f"{where}: '{key}' must be a {kind.__name__}")
    return value


def _int_list(values: Any, where: str) -> List[int]:
    if not isinstance(values, list) or any(not isinstance(v, int) or isinstance(v, bool) for v in values):
        raise InputError(f"{where}: expected a list of integers")
    return values


def validate_matrix(data: Dict[str, Any]) -> ExchangeMatrix:
    """{"labels": [...], "rows": [[int, ...], ...]}; labels default to 1..n."""
    rows = _require(data, "rows", list, "matrix")
    rows = [_int_list(r, f"matrix row {i + 1}") for i, r in enumerate(rows)]
    labels = data.get("labels")
    if labels is not None and not isinstance(labels, list):
        raise InputError("matrix: 'labels' must be a list")
    return ExchangeMatrix.from_rows(rows, labels)


def validate_diagram(data: Dict[str, Any]) -> Diagram:
    """{"n": int, "edges": [{"tail": int, "head": int, "w": int}]} with vertices from 1."""
    n = _require(data, "n", int, "diagram")
    if n < 1:
        raise InputError(f"diagram: n must be positive, got {n}")
    edges = []
    for k, e in enumerate(_require(data, "edges", list, "diagram")):
        where = f"diagram edge {k + 1}"
        tail = _require(e, "tail", int, where)
        head = _require(e, "head", int, where)
        w = e.get("w", 1)
        if not isinstance(w, int) or isinstance(w, bool):
            raise InputError(f"{where}: 'w' must be an int")
        edges.append((tail - 1, head - 1, w))
    return Diagram.from_edges(n, edges)


def validate_seed(data: Dict[str, Any]) -> Seed:
    """{"matrix": ..., "coeff_pairs": [[plus, minus], ...], "semifield": ["p1", ...]}"""
    matrix = validate_matrix(_require(data, "matrix", dict, "seed"))
    if not is_sign_skew_symmetric(matrix):
        raise NotSignSkewSymmetricError("seed matrix must be sign-skew-symmetric")
    generators = data.get("semifield", [])
    if not isinstance(generators, list) or any(not isinstance(g, str) for g in generators):
        raise InputError("seed: 'semifield' must be a list of generator names")
    semifield = TropSemifield(tuple(generators))
    pairs = data.get("coeff_pairs")
    if pairs is None:
        return initial_seed(matrix, semifield)
    if not isinstance(pairs, list) or len(pairs) != matrix.n:
        raise InputError(f"seed: 'coeff_pairs' must list {matrix.n} pairs")
    coeffs = []
    for k, pair in enumerate(pairs):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"seed: coefficient pair {k + 1} must be [plus, minus]")
        plus = semifield.element(_int_list(pair[0], f"coefficient pair {k + 1}"))
        minus = semifield.element(_int_list(pair[1], f"coefficient pair {k + 1}"))
        coeffs.append(CoefficientPair(plus, minus))
    return initial_seed(matrix, semifield, coeffs)


def load_matrix(path: str) -> ExchangeMatrix:
    return validate_matrix(read_json(path))


def load_diagram(path: str) -> Diagram:
    return validate_diagram(read_json(path))


def load_seed(path: str) -> Seed:
    return validate_seed(read_json(path))


def dump_matrix(B: ExchangeMatrix) -> Dict[str, Any]:
    """JSON form read back by validate_matrix."""
    return B.to_dict()

"""Cycle matrices of non-degenerate cycle sets.

Matrices are lists of rows with 1-based labels; permutations are 1-based
image lists, so ``[2, 1, 3]`` swaps the first two points.
"""

import json as _json
from pathlib import Path as _Path

from ._cyclemat import (
    act,
    are_isomorphic,
    automorphisms,
    build_json,
    canonical_form,
    determinant,
    enumerate_classes,
    enumerate_raw,
    format_matrix,
    is_transpose,
    multiperm_tower,
    multipermutation_level,
    parse_matrix,
    permutation_solution,
    point_orbits,
    retract,
    tensor,
    trivial_solution,
    validate,
)
from ._cyclemat import census_json as _census_json

__all__ = [
    "act",
    "are_isomorphic",
    "automorphisms",
    "build",
    "canonical_form",
    "census",
    "determinant",
    "enumerate_classes",
    "enumerate_raw",
    "format_matrix",
    "is_transpose",
    "multiperm_tower",
    "multipermutation_level",
    "parse_matrix",
    "permutation_solution",
    "point_orbits",
    "read_matrix",
    "retract",
    "tensor",
    "trivial_solution",
    "validate",
]


def build(spec):
    """Matrix for a construction spec, given as a dict or JSON text."""
    if not isinstance(spec, str):
        spec = _json.dumps(spec)
    return build_json(spec)


def census(n, *, square_free=None, indecomposable=None, transpose=None,
           max_level=None, permutation_only=None, jobs=1, mode="auto"):
    """Census report for order n as a dict; unset filters are ignored."""
    return _json.loads(_census_json(
        n, square_free, indecomposable, transpose, max_level,
        permutation_only, jobs, mode))


def read_matrix(path):
    return parse_matrix(_Path(path).read_text())

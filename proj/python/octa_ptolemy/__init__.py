"""Ptolemy and shape coordinates of knot diagrams, with the invariants computed from them."""

import json

from ._core import (
    OctaError,
    bloch_wigner,
    builtin_names,
    builtin_pd,
    builtin_solution,
    dilog,
    residuals,
)
from . import _core

__all__ = [
    "OctaError",
    "bloch_wigner",
    "builtin_names",
    "builtin_pd",
    "builtin_solution",
    "diagram",
    "dilog",
    "invariants",
    "residuals",
    "solve",
]


def diagram(pd):
    return json.loads(_core.diagram_json(pd))


def solve(pd, mode="z", seed=0, restarts=1, tol=None):
    kwargs = {} if tol is None else {"tol": tol}
    return json.loads(_core.solve_json(pd, mode, seed, restarts, **kwargs))


def invariants(pd, mode, values, base_crossing=-1):
    return json.loads(_core.invariants_json(pd, mode, list(values), base_crossing))

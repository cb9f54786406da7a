"""
Reference solutions: closed forms, the finite-difference oracle and error norms
"""
from .exact import exact_cd, exact_cd_cosine, exact_rd, exact_solution
from .mesh import SHISHKIN_CONSTANT, layer_layout, problem_mesh, shishkin_mesh
from .metrics import (
    DEFAULT_QUAD_POINTS,
    SOLUTION_POINTS,
    evaluation_grid,
    l2_norm,
    problem_grid,
    rel_l2_error,
)
from .oracle import DEFAULT_MESH, FiniteDifferenceSystem, oracle_solve
from .solution import Provenance, ProvenanceKind, ReferenceSolution, interpolate

__all__ = [
    "exact_cd",
    "exact_cd_cosine",
    "exact_rd",
    "exact_solution",
    "SHISHKIN_CONSTANT",
    "layer_layout",
    "problem_mesh",
    "shishkin_mesh",
    "DEFAULT_QUAD_POINTS",
    "SOLUTION_POINTS",
    "evaluation_grid",
    "l2_norm",
    "problem_grid",
    "rel_l2_error",
    "DEFAULT_MESH",
    "FiniteDifferenceSystem",
    "oracle_solve",
    "Provenance",
    "ProvenanceKind",
    "ReferenceSolution",
    "interpolate",
]

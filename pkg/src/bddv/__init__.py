"""Exact solver for bounded-degree vertex deletion.

Delete at most k vertices so that every remaining vertex has degree at most
d. The search engine branches on seven prioritized local configurations;
the oracle module provides a brute-force ground truth and a deterministic
instance generator, and the analysis module verifies every branching rule's
factor against its closed form.
"""

from .analysis import FactorCheck, branching_factor, step1_factor_bound, verify_factors
from .graph import Graph, GraphUsageError, Instance
from .oracle import (
    GeneratorSpec,
    PlantSpec,
    brute_force_decision,
    brute_force_minimum,
    generate,
)
from .search import SearchStats, solve_decision, solve_minimum, validate_solution
from .structures import StructuralAssumptionViolation

__version__ = "0.1.0"

__all__ = [
    "FactorCheck",
    "GeneratorSpec",
    "Graph",
    "GraphUsageError",
    "Instance",
    "PlantSpec",
    "SearchStats",
    "StructuralAssumptionViolation",
    "branching_factor",
    "brute_force_decision",
    "brute_force_minimum",
    "generate",
    "solve_decision",
    "solve_minimum",
    "step1_factor_bound",
    "validate_solution",
    "verify_factors",
]

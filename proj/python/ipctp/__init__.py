"""Quay crane, yard location and yard crane scheduling.

Instances are native objects; solutions, reports and violation lists are
plain dictionaries decoded from the library's JSON formats.
"""

import json

from ._core import (
    BudgetExceeded,
    ConfigInvalid,
    CyclicOrdering,
    Error,
    FormatError,
    Instance,
    InstanceInvalid,
    InvalidDecisions,
    NoEligibleCrane,
    NoFeasibleSolution,
)
from . import _core

__all__ = [
    "Instance", "generate", "solve", "oracle", "validate", "export_lp", "import_mip", "gantt",
    "Error", "InstanceInvalid", "NoEligibleCrane", "FormatError", "InvalidDecisions",
    "CyclicOrdering", "BudgetExceeded", "NoFeasibleSolution", "ConfigInvalid",
]

generate = _core.generate


def _text(solution):
    return solution if isinstance(solution, str) else json.dumps(solution)


def solve(instance, time_limit=600.0, workers=1, seed=0):
    """Returns (report, solution); solution is None when nothing was found."""
    report, solution = _core.solve(instance, time_limit, workers, seed)
    return json.loads(report), (json.loads(solution) if solution is not None else None)


def oracle(instance, limit=200_000_000, workers=1):
    return json.loads(_core.oracle(instance, limit, workers))


def validate(instance, solution):
    """List of violations; empty means feasible."""
    return json.loads(_core.validate(instance, _text(solution)))


def export_lp(instance, big_m=None):
    """Returns (lp_text, mapping) for the MIP formulation."""
    lp, mapping = _core.export_lp(instance, big_m)
    return lp, json.loads(mapping)


def import_mip(instance, values, big_m=None):
    """Rebuilds a solution from "name value" lines of an external MILP solve."""
    if isinstance(values, dict):
        values = "".join(f"{k} {v!r}\n" for k, v in values.items())
    return json.loads(_core.import_mip(instance, values, big_m))


def gantt(instance, solution, width=80):
    return _core.gantt(instance, _text(solution), width)

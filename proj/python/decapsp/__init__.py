"""Decremental approximate all-pairs shortest paths."""

import json

from ._decapsp import (
    Algorithm,
    ConfigError,
    DomainError,
    DuplicateEdge,
    EdgeNotFound,
    Error,
    Graph,
    MonotonicityViolation,
    MonotoneESTree,
    OracleTooLarge,
    ParseError,
    algorithm_tags,
    bottleneck_weights,
    exact_apsp,
    generate,
    make_algorithm,
    parse_graph,
    rounded,
    static_two_apsp,
)
from ._decapsp import run_json as _run_json
from ._decapsp import verify_json as _verify_json


def run(graph, stream, algo, **flags):
    """Replays an update stream and returns the run report as a dict."""
    return json.loads(_run_json(graph, stream, algo, **flags))


def verify(graph, stream, algo, **flags):
    """Checks every pair against exact distances and returns the stretch report as a dict."""
    return json.loads(_verify_json(graph, stream, algo, **flags))


__all__ = [
    "Algorithm",
    "ConfigError",
    "DomainError",
    "DuplicateEdge",
    "EdgeNotFound",
    "Error",
    "Graph",
    "MonotonicityViolation",
    "MonotoneESTree",
    "OracleTooLarge",
    "ParseError",
    "algorithm_tags",
    "bottleneck_weights",
    "exact_apsp",
    "generate",
    "make_algorithm",
    "parse_graph",
    "rounded",
    "run",
    "static_two_apsp",
    "verify",
]

"""Near-additive spanners on a CONGEST simulator."""

import json
from fractions import Fraction

from ._nearadd import (
    BandwidthError,
    ConfigError,
    Construction,
    DeterminismError,
    Error,
    Graph,
    InputError,
    ProtocolError,
    Schedule,
    build_schedule,
    build_spanner,
    generate,
    read_edge_list,
    write_edge_list,
)

__all__ = [
    "BandwidthError",
    "ConfigError",
    "Construction",
    "DeterminismError",
    "Error",
    "Graph",
    "InputError",
    "ProtocolError",
    "Schedule",
    "build_schedule",
    "build_spanner",
    "generate",
    "read_edge_list",
    "write_edge_list",
    "fraction",
    "run",
]


def fraction(text):
    """Exact value of a rational string such as "3/7"."""
    return Fraction(text)


def run(graph, kappa, c, mode, eps, level="full", workers=1):
    """Build a spanner and verify it. Returns (construction, report dict)."""
    schedule = build_schedule(graph.num_vertices, kappa, c, mode, str(eps))
    construction = build_spanner(graph, schedule, workers=workers)
    return construction, json.loads(construction.verify(level=level))

"""Exact invariants of normal-crossings surfaces with graph-like singular locus.

Graphs, diagrams and fans are plain dicts in the same JSON layout the CLI uses.
"""

import json

from . import _ncsing
from ._ncsing import NcsingError, cokernel, example_names, smith_diagonal

__all__ = [
    "NcsingError",
    "assemble_diagram",
    "boundary_graph",
    "cokernel",
    "dehn_twists",
    "divisor_classification",
    "dual_surface",
    "example_fan",
    "example_graph",
    "example_names",
    "h1_graph_manifold",
    "is_two_periodic",
    "pencil_localization",
    "pic_invariants",
    "smith_diagonal",
    "validate_fan",
    "validate_graph",
    "wall_reports",
]


def _call(fn, obj):
    out = fn(json.dumps(obj))
    return json.loads(out) if isinstance(out, str) else out


def example_graph(name):
    return json.loads(_ncsing.example_graph(name))


def example_fan(name):
    return json.loads(_ncsing.example_fan(name))


def validate_graph(graph):
    return _call(_ncsing.validate_graph, graph)


def validate_fan(fan):
    return _call(_ncsing.validate_fan, fan)


def dual_surface(graph):
    return _call(_ncsing.dual_surface, graph)


def h1_graph_manifold(graph):
    """Returns (free rank, torsion list)."""
    h1 = _call(_ncsing.h1_graph_manifold, graph)
    return h1["free"], [int(t) for t in h1["torsion"]]


def pencil_localization(graph):
    return _call(_ncsing.pencil_localization, graph)


def dehn_twists(graph):
    return _call(_ncsing.dehn_twists, graph)


def assemble_diagram(graph):
    return _call(_ncsing.assemble_diagram, graph)


def pic_invariants(diagram):
    return _call(_ncsing.pic_invariants, diagram)


def is_two_periodic(diagram):
    return _call(_ncsing.is_two_periodic, diagram)


def boundary_graph(fan):
    return _call(_ncsing.boundary_graph, fan)


def wall_reports(fan):
    return _call(_ncsing.wall_reports, fan)


def divisor_classification(fan):
    return _call(_ncsing.divisor_classification, fan)

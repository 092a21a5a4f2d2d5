"""Bundled benchmark graph with exactly known characteristic polynomials.

The 10-node, 11-link graph shipped in data/benchmark10.edges was recovered
by degree-sequence-constrained enumeration (see demos/find_benchmark_graph.py);
it is the unique labeled graph with degree vector (3,3,1,4,2,2,1,2,2,2) whose
characteristic polynomial and all ten node-deleted polynomials equal the
reference coefficients below.  The polynomials make exact integer tests
possible: no tolerance is involved anywhere in this module.
"""

from __future__ import annotations

from importlib import resources

from .graphs import Graph, parse_graph
from .polynomials import IntPolynomial

# Coefficients lowest power first; index 0 is the full graph, index j >= 1 the
# graph with node j deleted.
_REFERENCE: dict[int, tuple[int, ...]] = {
    0: (-4, 4, 27, -10, -52, 8, 38, -2, -11, 0, 1),
    1: (-2, -5, 6, 17, -6, -19, 2, 8, 0, -1),
    2: (0, -4, 0, 16, 0, -19, 0, 8, 0, -1),
    3: (0, -8, 4, 29, -6, -29, 2, 10, 0, -1),
    4: (0, -4, 0, 14, 0, -16, 0, 7, 0, -1),
    5: (-2, -5, 8, 20, -8, -23, 2, 9, 0, -1),
    6: (2, -7, -4, 25, 2, -25, 0, 9, 0, -1),
    7: (-2, -9, 6, 30, -6, -29, 2, 10, 0, -1),
    8: (0, -4, 2, 18, -4, -22, 2, 9, 0, -1),
    9: (0, -4, 4, 20, -6, -23, 2, 9, 0, -1),
    10: (0, -4, 4, 19, -6, -23, 2, 9, 0, -1),
}


def benchmark_graph() -> Graph:
    """The bundled 10-node benchmark graph."""
    text = resources.files("spectramark").joinpath("data/benchmark10.edges").read_text()
    return parse_graph(text, "edge_list")


def benchmark_polynomials() -> dict[int, IntPolynomial]:
    """Reference polynomials: key 0 is det(A - xI) of the full graph, key j is
    the same for the graph with node j (1-based) deleted."""
    return {k: IntPolynomial(c) for k, c in _REFERENCE.items()}

"""Exact spanning-tree, 2-forest and effective-resistance counts with 2-separation reductions."""

import json
from fractions import Fraction

from . import _twosep
from ._twosep import (
    ConsistencyError,
    InvalidArgument,
    MultiGraph,
    ParseError,
    find_2separators,
    find_cut_vertices,
    gen_bent,
    gen_sierpinski,
    gen_straight,
    resistance_pinv,
)

__all__ = [
    "ConsistencyError", "InvalidArgument", "MultiGraph", "ParseError", "Solution",
    "bent_end_resistance", "bent_forest", "count_2forests", "count_trees", "fib",
    "find_2separators", "find_cut_vertices", "gen_bent", "gen_sierpinski", "gen_straight",
    "graph", "lucas", "resistance", "resistance_identified", "resistance_pinv",
    "resistance_separated", "sierpinski_corner_forests", "sierpinski_corner_resistance",
    "sierpinski_trees", "solve", "straight_forest", "straight_resistance", "straight_trees",
]


def _frac(pair):
    return Fraction(int(pair[0]), int(pair[1]))


def graph(n, edges):
    """Build a multigraph on 1..n from (u, v) or (u, v, mult) tuples."""
    return MultiGraph(n, [(e[0], e[1], e[2] if len(e) > 2 else 1) for e in edges])


def count_trees(g, method="det"):
    if method == "det":
        return int(_twosep.count_trees_det(g))
    if method == "enumerate":
        return int(_twosep.enumerate_trees(g))
    if method == "reduce":
        return solve(g).value
    raise ValueError(f"unknown method {method!r}")


def count_2forests(g, u, v, w=None, method="det"):
    """F(u,v), or F(u,{v,w}) when w is given."""
    if method == "reduce":
        return solve(g, u, v, w).value
    if w is not None:
        if method != "det":
            raise ValueError("pair queries support det and reduce only")
        return int(_twosep.count_2forests_pair(g, u, v, w))
    if method == "det":
        return int(_twosep.count_2forests_det(g, u, v))
    if method == "enumerate":
        return int(_twosep.enumerate_2forests(g, u, v))
    raise ValueError(f"unknown method {method!r}")


class Solution:
    def __init__(self, value, trace_json, trace_text):
        self.value = int(value)
        self.trace = json.loads(trace_json)
        self.trace_text = trace_text

    def __repr__(self):
        return f"Solution(value={self.value})"


def solve(g, u=None, v=None, w=None, threshold=8, order="balanced"):
    return Solution(*_twosep.solve(g, u, v, w, threshold, order))


def resistance(g, u, v):
    return _frac(_twosep.resistance(g, u, v))


def resistance_identified(g, i, j, u, v):
    return _frac(_twosep.resistance_identified(g, i, j, u, v))


def resistance_separated(g, i, j, u, v):
    """Resistance through the 2-separation at {i, j}."""
    return _frac(_twosep.resistance_separated(g, i, j, u, v))


def fib(p):
    return int(_twosep.fib(p))


def lucas(q):
    return int(_twosep.lucas(q))


def straight_trees(n):
    return int(_twosep.straight_trees(n))


def straight_forest(u, v, n):
    return int(_twosep.straight_forest_closed(u, v, n))


def straight_resistance(j, k, n):
    return _frac(_twosep.straight_resistance_closed(j, k, n))


def bent_forest(u, v, n, k):
    return int(_twosep.bent_forest(u, v, n, k))


def bent_end_resistance(n, k):
    return _frac(_twosep.bent_end_resistance(n, k))


def sierpinski_trees(n):
    return int(_twosep.sierpinski_trees(n))


def sierpinski_corner_forests(n):
    return int(_twosep.sierpinski_corner_forests(n))


def sierpinski_corner_resistance(n):
    return _frac(_twosep.sierpinski_corner_resistance(n))

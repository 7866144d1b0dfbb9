"""Burnt pancake graphs and internally disjoint S-trees."""

from ._bpn import (
    ConstructionDefect,
    Graph,
    ParseError,
    build_idsts,
    gamma_neighbour,
    max_idsts,
    out_neighbour,
    prefix_reversal,
    upper_bound_kappa4,
    verify,
)

__all__ = [
    "ConstructionDefect",
    "Graph",
    "ParseError",
    "build_idsts",
    "gamma_neighbour",
    "max_idsts",
    "out_neighbour",
    "prefix_reversal",
    "upper_bound_kappa4",
    "verify",
]

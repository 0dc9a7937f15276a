"""Signed interval graph algorithms: balance and switching, maximum S-cliques,
exact signed chromatic numbers, minimum signatures and the hardness gadget."""

__version__ = "0.1.0"

from .graph import Graph, complement, connected_components, edge_cut  # noqa: E402
from .intervals import (  # noqa: E402
    Interval,
    IntervalRepresentation,
    MaximalCliqueOrdering,
    graph_from_intervals,
    maximal_clique_ordering,
)
from .signed import SignedGraph, is_balanced, resign, switching_equivalent  # noqa: E402
from .sclique import SignedIntervalInstance, max_s_clique  # noqa: E402
from .chromatic import signed_chromatic_number  # noqa: E402
from .signature import min_signature_exact  # noqa: E402
from .gadgets import build_gadget, gadget_analysis  # noqa: E402

__all__ = [
    "Graph",
    "complement",
    "connected_components",
    "edge_cut",
    "Interval",
    "IntervalRepresentation",
    "MaximalCliqueOrdering",
    "graph_from_intervals",
    "maximal_clique_ordering",
    "SignedGraph",
    "is_balanced",
    "resign",
    "switching_equivalent",
    "SignedIntervalInstance",
    "max_s_clique",
    "signed_chromatic_number",
    "min_signature_exact",
    "build_gadget",
    "gadget_analysis",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Named forbidden graphs accepted on the command line.

    path:t      P_t, t vertices
    cycle:t     C_t, t vertices
    star:t      S_t, t vertices and t - 1 leaves (so star:4 is S_4 = K_{1,3})
    matching:t  M_{2t}, t independent edges
    clique:t    K_t

Anything else is read as a graph6 string.
"""

# Built-in modules
from typing import Callable

# Internal modules
from spexlab.errors import ParseError
from spexlab.graphs.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    matching_graph,
    path_graph,
    star_graph,
)
from spexlab.graphs.graph6 import graph6_decode

NAMED_FAMILIES: dict[str, tuple[Callable[[int], Graph], int]] = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 3),
    "star": (star_graph, 1),
    "matching": (matching_graph, 0),
    "clique": (complete_graph, 0),
}


###############################################################################
def parse_graph(token: str) -> Graph:
    token = token.strip()
    name, sep, arg = token.partition(":")
    if not sep:
        return graph6_decode(token)
    if name not in NAMED_FAMILIES:
        raise ParseError(
            f"unknown family {name!r}, expected one of {', '.join(NAMED_FAMILIES)}"
        )
    build, smallest = NAMED_FAMILIES[name]
    try:
        t = int(arg)
    except ValueError:
        raise ParseError(f"{token!r}: the size after ':' must be an integer")
    if t < smallest:
        raise ParseError(f"{token!r}: {name} needs t >= {smallest}")
    return build(t)

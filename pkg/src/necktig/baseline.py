"""Fully greedy necklace builder used as the comparison baseline.

A depth-first search from the smallest unvisited node claims every tree edge
into an unvisited node. The search path down to the first dead end becomes
the necklace root; everything else in the search tree hangs off it as
pendants. A root whose tail has an edge back to its head is closed.
"""

from __future__ import annotations

from .debruijn import NodeGraph
from .necklace import Necklace, NecklaceCover


def greedy_baseline_cover(g: NodeGraph) -> NecklaceCover:
    visited = [False] * g.n
    necklaces = []
    for s in range(g.n):
        if visited[s]:
            continue
        visited[s] = True
        parent: dict[int, int] = {}
        spine: list[int] | None = None
        stack = [(s, iter(g.successors(s)))]
        while stack:
            u, it = stack[-1]
            for v in it:
                if not visited[v]:
                    visited[v] = True
                    parent[v] = u
                    stack.append((v, iter(g.successors(v))))
                    break
            else:
                if spine is None:
                    spine = [x for x, _ in stack]
                stack.pop()
        assert spine is not None
        for v in spine[1:]:
            del parent[v]
        closed = g.has_edge(spine[-1], spine[0])
        necklaces.append(Necklace(spine, closed, parent))
    return NecklaceCover(necklaces, g.n)

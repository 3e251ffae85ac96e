"""Necklace covers built from a PC cover.

A necklace is a connected subgraph in which every node has at most one
parent: a root cycle (closed necklace) or a root path (open necklace) with
arborescences (pendants) hanging off it. The cover is grown greedily:

1. primitive paths become open-necklace roots,
2. cycles of the PC cover become closed-necklace roots,
3. leftover paths are fused into new cycles found among themselves,

and after each root is placed, every remaining path whose head is an
out-neighbour of a necklace node is attached to it as a pendant, recursively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .debruijn import NodeGraph
from .errors import InvariantViolation
from .pc_cover import PCCover, close_obvious_cycles, require_valid_cover


@dataclass
class Necklace:
    root: list[int]
    closed: bool
    parent: dict[int, int] = field(default_factory=dict)

    @property
    def kind(self) -> str:
        return "closed" if self.closed else "open"

    def nodes(self) -> list[int]:
        return self.root + list(self.parent)

    def __len__(self) -> int:
        return len(self.root) + len(self.parent)

    def edges(self) -> Iterator[tuple[int, int]]:
        """The edges of F inside this necklace, as ``(parent, child)``."""
        r = self.root
        for a, b in zip(r, r[1:]):
            yield a, b
        if self.closed:
            yield r[-1], r[0]
        for child, par in self.parent.items():
            yield par, child

    def children(self) -> dict[int, list[int]]:
        """Pendant children of each node (root successors excluded)."""
        out: dict[int, list[int]] = {}
        for child, par in self.parent.items():
            out.setdefault(par, []).append(child)
        return out

    @property
    def n_leaves(self) -> int:
        """Pendant nodes without pendant children."""
        has_child = set(self.parent.values())
        return sum(1 for v in self.parent if v not in has_child)


@dataclass
class NecklaceCover:
    necklaces: list[Necklace]
    n_nodes: int

    @property
    def closed(self) -> list[Necklace]:
        return [n for n in self.necklaces if n.closed]

    @property
    def open(self) -> list[Necklace]:
        return [n for n in self.necklaces if not n.closed]

    @property
    def n_open(self) -> int:
        return sum(1 for n in self.necklaces if not n.closed)

    @property
    def n_closed(self) -> int:
        return sum(1 for n in self.necklaces if n.closed)

    @property
    def n_leaves(self) -> int:
        return sum(n.n_leaves for n in self.necklaces)

    def edges(self) -> Iterator[tuple[int, int]]:
        for n in self.necklaces:
            yield from n.edges()

    def parent_array(self) -> list[int]:
        """``F`` as a parent array (-1 for the head of each open root)."""
        par = [-1] * self.n_nodes
        for u, v in self.edges():
            par[v] = u
        return par


class _Builder:
    """Mutable state shared by the three phases.

    ``paths`` holds the unconsumed non-primitive paths as ``[nodes, start]``
    pairs so prefixes can be dropped without copying; ``head_of`` maps the
    current head node of each remaining path to its index.
    """

    def __init__(self, g: NodeGraph, non_primitive: Sequence[list[int]]):
        self.g = g
        self.paths: list[list] = [[p, 0] for p in non_primitive]
        self.alive = [True] * len(self.paths)
        self.head_of = {p[0]: i for i, p in enumerate(non_primitive)}
        self.remaining = len(self.paths)

    def _consume(self, idx: int) -> list[int]:
        nodes, start = self.paths[idx]
        del self.head_of[nodes[start]]
        self.alive[idx] = False
        self.remaining -= 1
        return nodes[start:] if start else nodes

    def grow(self, necklace: Necklace, anchors: Sequence[int]) -> None:
        """Attach remaining paths below ``anchors`` and, recursively, below them.

        Nodes are visited depth-first in the same order as the recursive
        formulation, but with an explicit stack.
        """
        succ = self.g.successors
        head_of = self.head_of
        parent = necklace.parent
        # frame: [node sequence, position, iterator over successors of seq[position]]
        stack: list[list] = [[anchors, 0, iter(succ(anchors[0]))]] if anchors else []
        while stack:
            frame = stack[-1]
            seq, i, it = frame
            for u in it:
                if u in head_of:
                    path = self._consume(head_of[u])
                    parent[u] = seq[i]
                    for a, b in zip(path, path[1:]):
                        parent[b] = a
                    stack.append([path, 0, iter(succ(path[0]))])
                    break
            else:
                i += 1
                if i == len(seq):
                    stack.pop()
                else:
                    frame[1] = i
                    frame[2] = iter(succ(seq[i]))

    def truncate(self, pieces: list[tuple[int, int]]) -> None:
        """Drop the prefix ``[start, h]`` of each path taking part in a new cycle."""
        for idx, h in pieces:
            nodes, start = self.paths[idx]
            del self.head_of[nodes[start]]
            if h + 1 >= len(nodes):
                self.alive[idx] = False
                self.remaining -= 1
            else:
                self.paths[idx][1] = h + 1
                self.head_of[nodes[h + 1]] = idx


def _path_cycle(b: _Builder) -> list[tuple[int, int]]:
    """Depth-first search for a cycle in the graph of remaining paths.

    There is an arc ``P -> Q`` when some node of ``P`` (at position ``h``)
    has an edge to the head of ``Q``. A cycle ``P_1 -> ... -> P_m -> P_1``
    yields a cycle of the de Bruijn graph made of the prefixes
    ``P_i[start..h_i]``. Returns ``[(path index, h), ...]`` in cycle order.
    """
    succ = b.g.successors
    head_of = b.head_of
    white, gray, black = 0, 1, 2
    color = [white] * len(b.paths)
    for s in range(len(b.paths)):
        if not b.alive[s] or color[s] != white:
            continue
        # frame: [path index, position, neighbour iterator]
        start = b.paths[s][1]
        stack = [[s, start, iter(succ(b.paths[s][0][start]))]]
        on_stack = {s: 0}
        color[s] = gray
        while stack:
            frame = stack[-1]
            idx, pos, it = frame
            nodes = b.paths[idx][0]
            descended = False
            while True:
                u = next(it, None)
                if u is None:
                    pos += 1
                    if pos >= len(nodes):
                        break
                    frame[1] = pos
                    it = frame[2] = iter(succ(nodes[pos]))
                    continue
                q = head_of.get(u)
                if q is None:
                    continue
                if color[q] == gray:
                    j = on_stack[q]
                    return [(f[0], f[1]) for f in stack[j:]]
                if color[q] == white:
                    color[q] = gray
                    on_stack[q] = len(stack)
                    qs = b.paths[q][1]
                    stack.append([q, qs, iter(succ(b.paths[q][0][qs]))])
                    descended = True
                    break
            if not descended:
                color[idx] = black
                del on_stack[idx]
                stack.pop()
    raise InvariantViolation("no cycle among the remaining non-primitive paths")


def find_new_cycle(remaining: Sequence[list[int]], g: NodeGraph) -> list[int]:
    """Find a cycle of ``g`` whose nodes all lie on ``remaining`` paths.

    Such a cycle always exists once no remaining path can be attached to an
    already built necklace: every head then has all its in-neighbours on
    remaining paths. Raises :class:`InvariantViolation` otherwise.
    """
    b = _Builder(g, remaining)
    pieces = _path_cycle(b)
    cycle = []
    for idx, h in pieces:
        nodes, start = b.paths[idx]
        cycle.extend(nodes[start : h + 1])
    return cycle


def necklace_cover(g: NodeGraph, cover: PCCover) -> NecklaceCover:
    """Transform a PC cover into a necklace cover.

    With a cover that has the minimum number of paths the result has the
    fewest symbols under the ``$``-marker cost model.
    """
    cover = close_obvious_cycles(cover, g)
    require_valid_cover(cover, g)
    in_deg = g.in_deg_list
    primitive = [p for p in cover.paths if in_deg[p[0]] == 0]
    non_primitive = [p for p in cover.paths if in_deg[p[0]] != 0]
    b = _Builder(g, non_primitive)
    necklaces = []

    for p in primitive:
        n = Necklace(list(p), closed=False)
        b.grow(n, p)
        necklaces.append(n)

    for c in cover.cycles:
        n = Necklace(list(c), closed=True)
        b.grow(n, c)
        necklaces.append(n)

    while b.remaining:
        before = b.remaining
        pieces = _path_cycle(b)
        root = []
        for idx, h in pieces:
            nodes, start = b.paths[idx]
            root.extend(nodes[start : h + 1])
        b.truncate(pieces)
        n = Necklace(root, closed=True)
        b.grow(n, root)
        necklaces.append(n)
        if b.remaining >= before:
            raise InvariantViolation("new cycle did not consume any path")

    return NecklaceCover(necklaces, g.n)

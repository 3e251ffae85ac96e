"""Path-and-cycle (PC) covers of the node-centric de Bruijn graph.

A PC cover partitions the nodes into vertex-disjoint paths and cycles. The
matching-based cover has the fewest paths of any PC cover: a maximum
bipartite matching between out-copies and in-copies of the nodes selects at
most one successor and one predecessor per node, and every unmatched
in-copy starts a path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from .debruijn import NodeGraph
from .errors import OracleSizeError, PreconditionError


@dataclass(frozen=True)
class MatchingStats:
    matching_size: int
    open_paths: int
    type_counts: dict[str, int]


@dataclass
class PCCover:
    paths: list[list[int]] = field(default_factory=list)
    cycles: list[list[int]] = field(default_factory=list)
    stats: MatchingStats | None = None

    @property
    def n_paths(self) -> int:
        return len(self.paths)

    @property
    def n_cycles(self) -> int:
        return len(self.cycles)

    def dump(self, fh: TextIO, g: NodeGraph) -> None:
        """One line per element: ``P:``/``C:`` followed by the textual k-mers."""
        for p in self.paths:
            fh.write("P: " + " ".join(g.kmer(v) for v in p) + "\n")
        for c in self.cycles:
            fh.write("C: " + " ".join(g.kmer(v) for v in c) + "\n")


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[list[int], list[int]]:
    """Maximum bipartite matching; ``adj[u]`` lists right vertices of left vertex ``u``.

    Returns ``(match_left, match_right)`` with -1 for unmatched vertices.
    Neighbours are scanned in the order given, so sorted adjacency lists give
    a deterministic matching.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    inf = n_left + 1

    while True:
        # BFS layering from free left vertices
        dist = [inf] * n_left
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
        found = inf
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    if found == inf:
                        found = dist[u] + 1
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if found == inf:
            break

        # iterative DFS along the layered graph
        ptr = [0] * n_left
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                nbrs = adj[u]
                advanced = False
                while ptr[u] < len(nbrs):
                    v = nbrs[ptr[u]]
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == found:
                            # augment along the stack
                            for x in reversed(stack):
                                nxt = match_l[x]
                                match_l[x] = v
                                match_r[v] = x
                                v = nxt
                            stack = []
                            advanced = True
                            break
                        ptr[u] += 1
                    elif dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                    else:
                        ptr[u] += 1
                if not stack:
                    break
                if not advanced:
                    dist[u] = inf
                    stack.pop()
                    if stack:
                        ptr[stack[-1]] += 1
    return match_l, match_r


def decompose(succ: Sequence[int], pred: Sequence[int]) -> PCCover:
    """Split a subgraph with in/out-degree <= 1 into paths and cycles.

    Paths are listed by ascending head id; each cycle starts at its smallest id.
    """
    n = len(succ)
    seen = [False] * n
    paths = []
    for v in range(n):
        if pred[v] == -1:
            path = []
            u = v
            while u != -1:
                seen[u] = True
                path.append(u)
                u = succ[u]
            paths.append(path)
    cycles = []
    for v in range(n):
        if not seen[v]:
            cyc = []
            u = v
            while not seen[u]:
                seen[u] = True
                cyc.append(u)
                u = succ[u]
            cycles.append(cyc)
    return PCCover(paths, cycles)


def matching_pc_cover(g: NodeGraph) -> PCCover:
    """PC cover with the minimum number of paths, via maximum bipartite matching."""
    match_l, match_r = hopcroft_karp(g.out_adj, g.n)
    cover = decompose(match_l, match_r)
    counts = {"LR": 0, "LX": 0, "XR": 0, "XX": 0}
    for v in range(g.n):
        key = ("L" if match_l[v] != -1 else "X") + ("R" if match_r[v] != -1 else "X")
        counts[key] += 1
    size = sum(1 for v in match_l if v != -1)
    cover.stats = MatchingStats(size, counts["LX"] + counts["XX"], counts)
    return cover


def greedy_pc_cover(g: NodeGraph) -> PCCover:
    """Fast PC cover: each node keeps its smallest still-unclaimed successor."""
    succ = [-1] * g.n
    pred = [-1] * g.n
    for u in range(g.n):
        for v in g.successors(u):
            if pred[v] == -1:
                succ[u] = v
                pred[v] = u
                break
    return close_obvious_cycles(decompose(succ, pred), g)


def close_obvious_cycles(cover: PCCover, g: NodeGraph) -> PCCover:
    """Turn every path whose tail has an edge back to its head into a cycle."""
    paths, cycles = [], [list(c) for c in cover.cycles]
    for p in cover.paths:
        if g.has_edge(p[-1], p[0]):
            cycles.append(list(p))
        else:
            paths.append(list(p))
    return PCCover(paths, cycles, cover.stats)


def eulertigs_pc_cover(g: NodeGraph) -> PCCover:
    """PC cover read off the Eulertigs strings, with obvious cycles closed."""
    from .eulertigs import eulertigs

    result = eulertigs(g.spectrum)
    spec = g.spectrum
    k = g.k
    paths = []
    for s in result.strings:
        paths.append([spec.id_of(s[i : i + k]) for i in range(len(s) - k + 1)])
    return close_obvious_cycles(PCCover(paths, []), g)


def classify_paths(cover: PCCover, g: NodeGraph) -> tuple[list[list[int]], list[list[int]]]:
    """Split paths into primitive (head has no in-neighbour) and non-primitive."""
    in_deg = g.in_deg_list
    primitive, non_primitive = [], []
    for p in cover.paths:
        (primitive if in_deg[p[0]] == 0 else non_primitive).append(p)
    return primitive, non_primitive


def check_pc_cover(cover: PCCover, g: NodeGraph, require_unclosable: bool = False) -> list[str]:
    """Return a list of problems; empty means ``cover`` is a valid PC cover of ``g``."""
    problems = []
    count = [0] * g.n
    for kind, seqs in (("path", cover.paths), ("cycle", cover.cycles)):
        for idx, seq in enumerate(seqs):
            if not seq:
                problems.append(f"empty {kind} #{idx}")
                continue
            for v in seq:
                if not 0 <= v < g.n:
                    problems.append(f"{kind} #{idx} has unknown node {v}")
                    continue
                count[v] += 1
            for a, b in zip(seq, seq[1:]):
                if 0 <= a < g.n and not g.has_edge(a, b):
                    problems.append(f"{kind} #{idx}: missing edge {a}->{b}")
            if kind == "cycle" and 0 <= seq[-1] < g.n and not g.has_edge(seq[-1], seq[0]):
                problems.append(f"cycle #{idx}: missing closing edge")
            if kind == "path" and require_unclosable and g.has_edge(seq[-1], seq[0]):
                problems.append(f"path #{idx} can be closed into a cycle")
    for v, c in enumerate(count):
        if c != 1:
            problems.append(f"node {v} covered {c} times")
    return problems


def require_valid_cover(cover: PCCover, g: NodeGraph) -> None:
    problems = check_pc_cover(cover, g, require_unclosable=True)
    if problems:
        raise PreconditionError("invalid PC cover: " + "; ".join(problems[:5]))


BRUTE_PATHS_LIMIT = 12


def brute_min_paths(g: NodeGraph) -> int:
    """Fewest paths over all PC covers, by exhaustive search (|V| <= 12).

    Every choice of at most one successor per node, injective on successors,
    is a PC cover whose path count is ``|V| - (#chosen edges)``.
    """
    if g.n > BRUTE_PATHS_LIMIT:
        raise OracleSizeError(f"brute_min_paths refuses graphs with more than {BRUTE_PATHS_LIMIT} nodes")
    adj = [list(g.successors(u)) for u in range(g.n)]
    taken = [False] * g.n
    best = 0

    def search(u: int, chosen: int) -> None:
        nonlocal best
        if chosen + (g.n - u) <= best:
            return
        if u == g.n:
            best = chosen
            return
        for v in adj[u]:
            if not taken[v]:
                taken[v] = True
                search(u + 1, chosen + 1)
                taken[v] = False
        search(u + 1, chosen)

    search(0, 0)
    return g.n - best

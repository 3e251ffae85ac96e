"""Minimum-weight SPSS baseline via Eulerian tours of the edge-centric graph.

Each weakly connected component is balanced by adding unlabeled breaking
edges from nodes with surplus in-degree to nodes with surplus out-degree;
a Hierholzer tour started on a breaking edge is then cut at every breaking
edge. A component that is already balanced gives one string: its circuit
spelled linearly, repeating ``k-1`` symbols.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .debruijn import EdgeGraph
from .kmers import ALPHABET, Spectrum


@dataclass
class EulertigsResult:
    strings: list[str]
    b: int
    k: int
    n_k: int
    cycles: list[str] = field(default_factory=list)

    @property
    def weight(self) -> int:
        return sum(len(s) for s in self.strings) + sum(len(c) for c in self.cycles)

    @property
    def n_strings(self) -> int:
        return len(self.strings)

    def write_fasta(self, fh: TextIO) -> None:
        for i, s in enumerate(self.strings):
            fh.write(f">e{i}\n{s}\n")
        for i, c in enumerate(self.cycles):
            fh.write(f">c{i} circular\n{c}\n")

    def stats(self) -> dict:
        return {"n_k": self.n_k, "b": self.b, "strings": self.n_strings, "weight": self.weight}


def _components(eg: EdgeGraph) -> tuple[int, np.ndarray]:
    n = eg.n_nodes
    adj = coo_matrix((np.ones(eg.n_edges, dtype=np.int8), (eg.src, eg.dst)), shape=(n, n))
    return connected_components(adj, directed=True, connection="weak")


def _tour(start: int, out_edges: list[list[int]], head: list[int]) -> list[int]:
    """Hierholzer's algorithm over edge ids; returns the circuit as an edge list."""
    ptr = {}
    stack = [(start, -1)]
    circuit = []
    while stack:
        v, e = stack[-1]
        i = ptr.get(v, 0)
        edges = out_edges[v]
        if i < len(edges):
            ptr[v] = i + 1
            eid = edges[i]
            stack.append((head[eid], eid))
        else:
            stack.pop()
            if e != -1:
                circuit.append(e)
    circuit.reverse()
    return circuit


def eulertigs(spectrum: Spectrum, circuits_as_cycles: bool = False) -> EulertigsResult:
    """Eulertigs of ``spectrum``; components are emitted by ascending smallest node id.

    With ``circuits_as_cycles`` a balanced component is reported in ``cycles``
    as a circular string (one symbol per k-mer) instead of a linear string.
    """
    eg = EdgeGraph(spectrum)
    k = spectrum.k
    n_nodes = eg.n_nodes
    n_real = eg.n_edges
    _, comp = _components(eg)
    excess = (eg.out_deg - eg.in_deg).tolist()
    src = eg.src.tolist()
    dst = eg.dst.tolist()
    labels = eg.labels.tolist()
    kmer_text = spectrum.strings()

    # components in order of their smallest node id
    comp = comp.tolist()
    order, seen = [], set()
    for v in range(n_nodes):
        if comp[v] not in seen:
            seen.add(comp[v])
            order.append(comp[v])
    members: dict[int, list[int]] = {c: [] for c in order}
    for v in range(n_nodes):
        members[comp[v]].append(v)

    out_edges: list[list[int]] = [[] for _ in range(n_nodes)]
    for eid in range(n_real):
        out_edges[src[eid]].append(eid)
    head = list(dst)
    is_break = [False] * n_real

    strings: list[str] = []
    cycles: list[str] = []
    b_total = 0
    for c in order:
        nodes = members[c]
        sinks, sources = [], []
        for v in nodes:
            if excess[v] < 0:
                sinks.extend([v] * -excess[v])
            elif excess[v] > 0:
                sources.extend([v] * excess[v])
        breaks = []
        for u, v in zip(sinks, sources):
            eid = len(head)
            head.append(v)
            is_break.append(True)
            out_edges[u].append(eid)
            breaks.append(eid)
        b_total += len(breaks)

        # balanced: every node has an out-edge; otherwise leave through a breaking edge
        start = sinks[0] if breaks else nodes[0]
        circuit = _tour(start, out_edges, head)
        if breaks:
            first = next(i for i, e in enumerate(circuit) if is_break[e])
            circuit = circuit[first:] + circuit[:first]
            cur: list[str] | None = None
            for e in circuit:
                if is_break[e]:
                    if cur is not None:
                        strings.append("".join(cur))
                    cur = None
                elif cur is None:
                    cur = [kmer_text[e]]
                else:
                    cur.append(ALPHABET[labels[e]])
            if cur is not None:
                strings.append("".join(cur))
        else:
            letters = [ALPHABET[labels[e]] for e in circuit]
            if circuits_as_cycles:
                cycles.append("".join(letters))
            else:
                first = kmer_text[circuit[0]]
                strings.append(first + "".join(letters[1:]))
    return EulertigsResult(strings, b_total, k, len(spectrum), cycles)


def spell_path(kmers: list[str]) -> str:
    """String spelled by a sequence of overlapping k-mers."""
    return kmers[0] + "".join(x[-1] for x in kmers[1:])


__all__ = ["EulertigsResult", "eulertigs", "spell_path"]

"""Node-centric and edge-centric de Bruijn graphs over a :class:`Spectrum`."""

from __future__ import annotations

from functools import cached_property
from typing import Iterator, TextIO

import numpy as np

from .errors import EmptySpectrumError
from .kmers import ALPHABET, Spectrum, decode_kmer


class NodeGraph:
    """k-mers as nodes; ``u -> v`` whenever the (k-1)-suffix of u is the (k-1)-prefix of v.

    All overlap edges are present, not only those witnessed in the input.
    Because ids follow packed order, the successors of ``u`` form the
    contiguous id range ``[lo[u], hi[u])``: the bucket of k-mers whose prefix
    equals u's suffix.
    """

    def __init__(self, spectrum: Spectrum):
        if len(spectrum) == 0:
            raise EmptySpectrumError("cannot build a graph from an empty spectrum")
        self.spectrum = spectrum
        self.k = spectrum.k
        self.n = len(spectrum)
        kmers = spectrum.kmers
        two = np.uint64(2)
        suffix_mask = np.uint64((1 << (2 * (self.k - 1))) - 1)
        bucket = (kmers & suffix_mask) << two
        self.lo = np.searchsorted(kmers, bucket, side="left")
        self.hi = np.searchsorted(kmers, bucket | np.uint64(3), side="right")
        counts = self.hi - self.lo
        self.indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(counts, out=self.indptr[1:])
        # expand ranges [lo, hi) into a flat successor array
        starts = np.repeat(self.lo - self.indptr[:-1], counts)
        self.indices = starts + np.arange(self.indptr[-1], dtype=np.int64)
        self.in_deg = np.bincount(self.indices, minlength=self.n)
        self._lo = self.lo.tolist()
        self._hi = self.hi.tolist()

    @property
    def n_edges(self) -> int:
        return int(self.indptr[-1])

    @property
    def out_deg(self) -> np.ndarray:
        return self.hi - self.lo

    def successors(self, u: int) -> range:
        return range(self._lo[u], self._hi[u])

    @cached_property
    def out_adj(self) -> list[range]:
        return [range(a, b) for a, b in zip(self._lo, self._hi)]

    @cached_property
    def in_adj(self) -> list[list[int]]:
        """Inverse adjacency, sorted ascending; materialized on first use."""
        order = np.argsort(self.indices, kind="stable")
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.out_deg)[order]
        bounds = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.in_deg, out=bounds[1:])
        flat = src.tolist()
        b = bounds.tolist()
        return [flat[b[v] : b[v + 1]] for v in range(self.n)]

    @cached_property
    def in_deg_list(self) -> list[int]:
        return self.in_deg.tolist()

    def has_edge(self, u: int, v: int) -> bool:
        return self._lo[u] <= v < self._hi[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(self._lo[u], self._hi[u]):
                yield u, v

    def label(self, v: int) -> str:
        return self.spectrum.label(v)

    def kmer(self, v: int) -> str:
        return self.spectrum.kmer(v)

    def dump(self, fh: TextIO) -> None:
        """Write one ``u_kmer v_kmer`` line per edge."""
        for u, v in self.edges():
            fh.write(f"{self.kmer(u)} {self.kmer(v)}\n")

    def __repr__(self) -> str:
        return f"NodeGraph(k={self.k}, n={self.n}, edges={self.n_edges})"


def build_node_dbg(spectrum: Spectrum) -> NodeGraph:
    return NodeGraph(spectrum)


class EdgeGraph:
    """(k-1)-mers as nodes and one labelled edge ``(u, v, c)`` per k-mer ``uc``.

    Edge ``i`` corresponds to k-mer id ``i`` of the spectrum.
    """

    def __init__(self, spectrum: Spectrum):
        if len(spectrum) == 0:
            raise EmptySpectrumError("cannot build a graph from an empty spectrum")
        self.spectrum = spectrum
        self.k = spectrum.k
        kmers = spectrum.kmers
        prefixes = kmers >> np.uint64(2)
        suffixes = kmers & np.uint64((1 << (2 * (self.k - 1))) - 1)
        self.nodes = np.unique(np.concatenate([prefixes, suffixes]))
        self.src = np.searchsorted(self.nodes, prefixes)
        self.dst = np.searchsorted(self.nodes, suffixes)
        self.labels = (kmers & np.uint64(3)).astype(np.int64)
        self.out_deg = np.bincount(self.src, minlength=self.nodes.size)
        self.in_deg = np.bincount(self.dst, minlength=self.nodes.size)

    @property
    def n_nodes(self) -> int:
        return int(self.nodes.size)

    @property
    def n_edges(self) -> int:
        return int(self.src.size)

    def node(self, i: int) -> str:
        return decode_kmer(int(self.nodes[i]), self.k - 1)

    def edges(self) -> Iterator[tuple[int, int, str]]:
        for u, v, c in zip(self.src.tolist(), self.dst.tolist(), self.labels.tolist()):
            yield u, v, ALPHABET[c]

    def __repr__(self) -> str:
        return f"EdgeGraph(k={self.k}, nodes={self.n_nodes}, edges={self.n_edges})"


def build_edge_dbg(spectrum: Spectrum) -> EdgeGraph:
    return EdgeGraph(spectrum)

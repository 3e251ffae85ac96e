"""Exactness checks and brute-force oracles."""

from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .debruijn import NodeGraph
from .errors import OracleSizeError
from .kmers import ALPHABET, Spectrum
from .necklace import NecklaceCover

SEED_ENV = "NECKTIG_SEED"
BRUTE_NECKLACE_LIMIT = 10


@dataclass
class SpssReport:
    spectrum_equal: bool
    missing: list[str]
    extra: list[str]
    repeated: list[str]
    weight: int

    @property
    def ok(self) -> bool:
        return self.spectrum_equal and not self.repeated

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "spectrum_equal": self.spectrum_equal,
            "missing": len(self.missing),
            "extra": len(self.extra),
            "repeated": len(self.repeated),
            "weight": self.weight,
        }


def check_spss(strings: Iterable[str], k: int, spec: Spectrum, circular: Iterable[str] = ()) -> SpssReport:
    """Compare the k-mers of ``strings`` (and circular ``circular``) with ``spec``."""
    counts: Counter[str] = Counter()
    weight = 0
    for s in strings:
        weight += len(s)
        counts.update(s[i : i + k] for i in range(len(s) - k + 1))
    for s in circular:
        weight += len(s)
        t = s + s[: k - 1] * ((k - 1) // max(len(s), 1) + 1)
        counts.update(t[i : i + k] for i in range(len(s)))
    expected = set(spec.strings())
    got = set(counts)
    return SpssReport(
        spectrum_equal=got == expected,
        missing=sorted(expected - got),
        extra=sorted(got - expected),
        repeated=sorted(x for x, c in counts.items() if c > 1),
        weight=weight,
    )


@dataclass
class CoverReport:
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def check_necklace_cover(nc: NecklaceCover, g: NodeGraph) -> CoverReport:
    """Structural validation of a necklace cover against its graph."""
    rep = CoverReport()
    p = rep.problems
    owner = [-1] * g.n
    for idx, neck in enumerate(nc.necklaces):
        if not neck.root:
            p.append(f"necklace #{idx}: empty root")
            continue
        for v in neck.nodes():
            if not 0 <= v < g.n:
                p.append(f"necklace #{idx}: unknown node {v}")
            elif owner[v] != -1:
                p.append(f"node {v} in necklaces #{owner[v]} and #{idx}")
            else:
                owner[v] = idx
    for v, o in enumerate(owner):
        if o == -1:
            p.append(f"node {v} not covered")
    if p:
        return rep

    for idx, neck in enumerate(nc.necklaces):
        members = set(neck.nodes())
        indeg: Counter[int] = Counter()
        for u, v in neck.edges():
            indeg[v] += 1
            if not g.has_edge(u, v):
                p.append(f"necklace #{idx}: {u}->{v} is not an edge")
            if u not in members:
                p.append(f"necklace #{idx}: parent {u} of {v} lies outside")
        over = [v for v, d in indeg.items() if d > 1]
        if over:
            p.append(f"necklace #{idx}: nodes with in-degree > 1: {sorted(over)}")
        roots = [v for v in members if indeg[v] == 0]
        if neck.closed and roots:
            p.append(f"necklace #{idx}: closed but {len(roots)} node(s) have no parent")
        if not neck.closed and roots != [neck.root[0]]:
            p.append(f"necklace #{idx}: open root head must be the only parentless node")
        # connectivity: every node reaches the root by parent links
        root_set = set(neck.root)
        for v in neck.parent:
            seen = set()
            u = v
            while u not in root_set:
                if u in seen or u not in neck.parent:
                    p.append(f"necklace #{idx}: node {v} does not hang off the root")
                    break
                seen.add(u)
                u = neck.parent[u]
        if set(neck.parent) & root_set:
            p.append(f"necklace #{idx}: root node listed as pendant")
        if len(set(neck.root)) != len(neck.root):
            p.append(f"necklace #{idx}: repeated root node")
    return rep


def brute_min_necklace_cost(g: NodeGraph, k: int | None = None, chunk: int = 1 << 18) -> int:
    """Fewest ``$``-mode symbols over all necklace covers of ``g`` (|V| <= 10).

    Every choice of at most one in-edge per node is a necklace cover: each
    weak component holds at most one cycle, so it is either a closed
    necklace or an arborescence (an open necklace whose root path runs to a
    leaf). Parentless nodes are therefore the open roots and the pendant
    leaves are the nodes without children minus one per open necklace, so
    the cost of a choice is ``N + (k-1)*free + 2*(sinks - free) + 1``.
    All choices are enumerated.
    """
    if g.n > BRUTE_NECKLACE_LIMIT:
        raise OracleSizeError(f"brute_min_necklace_cost refuses graphs with more than {BRUTE_NECKLACE_LIMIT} nodes")
    k = g.k if k is None else k
    n = g.n
    options = [[-1] + list(g.in_adj[v]) for v in range(n)]
    radix = np.array([len(o) for o in options], dtype=np.int64)
    total = int(np.prod(radix))
    place = np.ones(n, dtype=np.int64)
    place[1:] = np.cumprod(radix[:-1])
    best = None
    for lo in range(0, total, chunk):
        idx = np.arange(lo, min(total, lo + chunk), dtype=np.int64)
        digits = (idx[:, None] // place[None, :]) % radix[None, :]
        free = (digits == 0).sum(axis=1)
        is_parent = np.zeros((idx.size, n), dtype=bool)
        for v in range(n):
            for j, u in enumerate(options[v][1:], start=1):
                is_parent[:, u] |= digits[:, v] == j
        sinks = n - is_parent.sum(axis=1)
        cost = n + (k - 1) * free + 2 * (sinks - free) + 1
        m = int(cost.min())
        best = m if best is None else min(best, m)
    return best


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get(SEED_ENV)
    return int(raw) if raw not in (None, "") else default


def random_strings(rng: random.Random, min_len: int = 8, max_len: int = 30, count: int | None = None) -> list[str]:
    count = rng.randint(1, 3) if count is None else count
    return ["".join(rng.choice(ALPHABET) for _ in range(rng.randint(min_len, max_len))) for _ in range(count)]


def random_instance(
    rng: random.Random,
    ks: tuple[int, ...] = (3, 4, 5),
    max_nodes: int | None = None,
    min_len: int = 8,
    max_len: int = 30,
) -> tuple[list[str], int]:
    """Random input strings and a k; with ``max_nodes`` the strings are trimmed to fit.

    Trimming keeps the longest prefix of each string (in turn) whose k-mers
    still fit in the ``max_nodes`` budget, dropping strings that add nothing.
    """
    k = rng.choice(ks)
    strings = random_strings(rng, min_len, max_len)
    if max_nodes is None:
        return strings, k
    seen: set[str] = set()
    kept = []
    for s in strings:
        end = k - 1
        for i in range(len(s) - k + 1):
            x = s[i : i + k]
            if x not in seen:
                if len(seen) == max_nodes:
                    break
                seen.add(x)
            end = i + k
        if end >= k:
            kept.append(s[:end])
        if len(seen) == max_nodes:
            break
    return kept, k

"""Balanced-parenthesis serialization of necklace covers.

Each necklace becomes one string over ``ACGT()``. The root is spelled first:
an open root path as its full string, a closed root cycle as one symbol per
node starting at its lexicographically smallest rotation. Every pendant
subtree is inserted, in parentheses, right after the symbol that ends its
anchor k-mer. Inside a pendant each node writes its label, then its
children in ascending label order; all children but the last are wrapped in
parentheses. One parenthesis pair is thus emitted per pendant leaf.

Two container formats are supported:

``dollar``
    one record per necklace, closed ones first, plus a ``$`` record at the
    block boundary. Costs ``N_k + (k-1)*N_O + 2*N_L + 1`` symbols.
``separator``
    a single string: the records joined by ``|`` with one empty record as
    the boundary (``c1|c2||o1``). Costs ``N_k + k*N_O + 2*N_L + N_C``.
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass
from typing import Sequence, TextIO

import numpy as np

from .errors import (
    DecodeError,
    DuplicateKmerError,
    EncodingError,
    InvalidSymbolError,
    UnbalancedParenthesesError,
)
from .kmers import ALPHABET, Spectrum, check_k, encode_kmer
from .necklace import Necklace, NecklaceCover

DOLLAR = "dollar"
SEPARATOR = "separator"
MODES = (DOLLAR, SEPARATOR)

_SIGMA = frozenset(ALPHABET)
_RECORD_OK = re.compile(r"[ACGT()]+")
_HEADER = re.compile(r"#necktig v1 k=(\d+) mode=(dollar|separator)\s*$")


def minimal_rotation(s: str) -> int:
    """Start index of the lexicographically least rotation (Booth's algorithm)."""
    n = len(s)
    if n == 0:
        return 0
    ss = s + s
    fail = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = fail[j - best - 1]
        while i != -1 and c != ss[best + i + 1]:
            if c < ss[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if i == -1 and c != ss[best + i + 1]:
            if c < ss[best + i + 1]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    return best


def encode_necklace(necklace: Necklace, spectrum: Spectrum) -> str:
    """Parenthesis string of one necklace (see the module docstring)."""
    k = spectrum.k
    n_k = len(spectrum)
    try:
        labels = {v: spectrum.label(v) for v in necklace.nodes() if 0 <= v < n_k}
    except IndexError as exc:  # pragma: no cover - guarded below
        raise EncodingError(str(exc)) from exc
    if len(labels) != len(necklace):
        raise EncodingError("necklace contains a node outside the spectrum")

    root = list(necklace.root)
    if necklace.closed:
        letters = "".join(labels[v] for v in root)
        shift = minimal_rotation(letters)
        root = root[shift:] + root[:shift]
        out = [labels[v] for v in root]
    else:
        out = list(spectrum.kmer(root[0])) + [labels[v] for v in root[1:]]

    children = necklace.children()
    for kids in children.values():
        kids.sort(key=labels.__getitem__)

    # insertion points: after the symbol ending each anchor k-mer
    offset = 0 if necklace.closed else k - 1
    pieces: list[str] = []
    cursor = 0
    for i, v in enumerate(root):
        kids = children.get(v)
        if not kids:
            continue
        end = offset + i + 1
        pieces.append("".join(out[cursor:end]))
        cursor = end
        for c in kids:
            pieces.append("(")
            pieces.append(_encode_subtree(c, children, labels))
            pieces.append(")")
    pieces.append("".join(out[cursor:]))
    return "".join(pieces)


def _encode_subtree(top: int, children: dict[int, list[int]], labels: dict[int, str]) -> str:
    out: list[str] = []
    # stack items: a literal string, or a node id to expand
    stack: list = [top]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(labels[item])
        kids = children.get(item)
        if not kids:
            continue
        stack.append(kids[-1])
        for c in reversed(kids[:-1]):
            stack.append(")")
            stack.append(c)
            stack.append("(")
    return "".join(out)


@dataclass(frozen=True)
class Encoded:
    """Serialized cover: per-necklace records, closed block first."""

    mode: str
    k: int
    closed: tuple[str, ...]
    open: tuple[str, ...]

    def records(self) -> list[str]:
        return list(self.closed) + list(self.open)

    @property
    def payload(self) -> str:
        """Dollar mode: newline-joined records with a ``$`` line; separator mode: one string."""
        if self.mode == DOLLAR:
            return "\n".join(list(self.closed) + ["$"] + list(self.open))
        return "|".join(list(self.closed) + [""] + list(self.open))

    @property
    def symbol_count(self) -> int:
        """Counted payload symbols; record boundaries in dollar mode are free."""
        body = sum(len(r) for r in self.closed) + sum(len(r) for r in self.open)
        if self.mode == DOLLAR:
            return body + 1
        return len(self.payload)

    @property
    def sigma_paren_count(self) -> int:
        """Symbols over ``ACGT()`` only (markers and separators excluded)."""
        return sum(len(r) for r in self.closed) + sum(len(r) for r in self.open)

    @property
    def paren_count(self) -> int:
        return sum(r.count("(") + r.count(")") for r in self.records())

    def to_text(self) -> str:
        return f"#necktig v1 k={self.k} mode={self.mode}\n{self.payload}\n"

    @classmethod
    def from_text(cls, text: str) -> "Encoded":
        lines = text.splitlines()
        if not lines:
            raise DecodeError("empty encoded file")
        m = _HEADER.match(lines[0].strip())
        if m is None:
            raise DecodeError(f"bad header line: {lines[0]!r}")
        k, mode = int(m.group(1)), m.group(2)
        body = [ln.strip() for ln in lines[1:] if ln.strip()]
        if mode == DOLLAR:
            if body.count("$") != 1:
                raise DecodeError("dollar-mode payload needs exactly one '$' record")
            cut = body.index("$")
            return cls(mode, k, tuple(body[:cut]), tuple(body[cut + 1 :]))
        if len(body) != 1:
            raise DecodeError("separator-mode payload must be a single line")
        return cls.from_separator(body[0], k)

    @classmethod
    def from_separator(cls, payload: str, k: int) -> "Encoded":
        parts = payload.split("|")
        empties = [i for i, p in enumerate(parts) if p == ""]
        if len(empties) != 1:
            raise DecodeError("separator payload needs exactly one empty boundary record")
        cut = empties[0]
        return cls(SEPARATOR, k, tuple(parts[:cut]), tuple(parts[cut + 1 :]))


def encode_cover(cover: NecklaceCover, spectrum: Spectrum, mode: str = DOLLAR) -> Encoded:
    if mode not in MODES:
        raise EncodingError(f"unknown mode {mode!r}")
    closed = tuple(encode_necklace(n, spectrum) for n in cover.necklaces if n.closed)
    opened = tuple(encode_necklace(n, spectrum) for n in cover.necklaces if not n.closed)
    return Encoded(mode, spectrum.k, closed, opened)


def write_encoded(encoded: Encoded, fh: TextIO) -> None:
    fh.write(encoded.to_text())


def read_encoded(fh: TextIO) -> Encoded:
    return Encoded.from_text(fh.read())


def _validate_record(record: str) -> None:
    if not record or _RECORD_OK.fullmatch(record) is None:
        bad = next((c for c in record if c not in "ACGT()"), None)
        if bad is None:
            raise DecodeError("empty necklace record")
        raise InvalidSymbolError(f"symbol {bad!r} outside ACGT()")
    if record[0] not in _SIGMA:
        raise DecodeError("necklace record must start with a symbol of ACGT")
    depth = 0
    prev = ""
    for c in record:
        if c == "(":
            depth += 1
        elif c == ")":
            if prev == "(":
                raise UnbalancedParenthesesError("empty parenthesis pair")
            depth -= 1
            if depth < 0:
                raise UnbalancedParenthesesError("unmatched ')'")
        prev = c
    if depth:
        raise UnbalancedParenthesesError("unmatched '('")


def decode_necklace(record: str, k: int, closed: bool) -> list[tuple[int, str]]:
    """All ``(position, k-mer)`` pairs spelled by one necklace record.

    Forward scan keeping the last ``k-1`` ancestor symbols; ``(`` saves the
    context and ``)`` restores it.
    """
    _validate_record(record)
    if closed:
        root = [c for c, d in zip(record, _depths(record)) if d == 0 and c in _SIGMA]
        m = len(root)
        ctx = "".join(root[(m - (k - 1) + t) % m] for t in range(k - 1))
    else:
        ctx = ""
    saved: list[str] = []
    out = []
    for pos, c in enumerate(record):
        if c == "(":
            if len(ctx) < k - 1:
                raise DecodeError(f"branch at position {pos} precedes the first full k-mer")
            saved.append(ctx)
        elif c == ")":
            ctx = saved.pop()
        else:
            if len(ctx) == k - 1:
                out.append((pos, ctx + c))
                ctx = ctx[1:] + c if k > 1 else ""
            else:
                ctx += c
    if not closed and not out:
        raise DecodeError("open necklace record shorter than k")
    return out


def _depths(record: str) -> list[int]:
    d = 0
    out = []
    for c in record:
        if c == "(":
            d += 1
            out.append(d)
        elif c == ")":
            out.append(d)
            d -= 1
        else:
            out.append(d)
    return out


def decode_cover(encoded: Encoded) -> Spectrum:
    """Spectrum spelled by an encoded cover; every k-mer must appear exactly once."""
    check_k(encoded.k)
    k = encoded.k
    values: list[int] = []
    for closed, records in ((True, encoded.closed), (False, encoded.open)):
        for rec in records:
            values.extend(encode_kmer(km) for _, km in decode_necklace(rec, k, closed))
    arr = np.array(values, dtype=np.uint64)
    uniq = np.unique(arr)
    if uniq.size != arr.size:
        raise DuplicateKmerError(f"{arr.size - uniq.size} repeated k-mer occurrence(s)")
    return Spectrum(k, uniq)


def kmer_at(record: str, i: int, k: int, closed: bool = False) -> str:
    """k-mer ending at Σ-position ``i`` of a necklace record, by backward scanning.

    Each step to the parent skips back over whole ``(...)`` groups of earlier
    siblings and over the ``(`` opening the current group, stopping at the
    first letter. In a closed record the outermost layer wraps around.
    """
    n = len(record)
    if not 0 <= i < n or record[i] not in _SIGMA:
        raise DecodeError(f"position {i} does not hold a symbol of ACGT")
    letters = [record[i]]
    pos = i
    while len(letters) < k:
        j = pos - 1
        while True:
            if j < 0:
                if not closed:
                    raise DecodeError(f"position {i} has fewer than {k - 1} ancestors")
                j += n
            c = record[j]
            if c in _SIGMA:
                break
            if c == "(":
                j -= 1
            elif c == ")":
                depth = 1
                j -= 1
                while depth:
                    if j < 0:
                        raise UnbalancedParenthesesError("unmatched ')'")
                    if record[j] == ")":
                        depth += 1
                    elif record[j] == "(":
                        depth -= 1
                    j -= 1
            else:
                raise InvalidSymbolError(f"symbol {c!r} outside ACGT()")
        letters.append(record[j])
        pos = j
    return "".join(reversed(letters))


@dataclass(frozen=True)
class CostReport:
    n_k: int
    n_o: int
    n_c: int
    n_l: int
    k: int

    @property
    def cost_dollar(self) -> int:
        return self.n_k + (self.k - 1) * self.n_o + 2 * self.n_l + 1

    @property
    def cost_separator(self) -> int:
        return self.n_k + self.k * self.n_o + 2 * self.n_l + self.n_c

    @property
    def spss_weight_equivalent(self) -> int:
        """Weight of the same k-mers as plain strings: one string per root and per leaf branch."""
        return self.n_k + (self.k - 1) * (self.n_o + self.n_c + self.n_l)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.update(
            cost_dollar=self.cost_dollar,
            cost_separator=self.cost_separator,
            spss_weight_equivalent=self.spss_weight_equivalent,
        )
        return d


def cost_report(cover: NecklaceCover, k: int) -> CostReport:
    return CostReport(
        n_k=cover.n_nodes,
        n_o=cover.n_open,
        n_c=cover.n_closed,
        n_l=cover.n_leaves,
        k=k,
    )


def positions(record: str) -> Sequence[int]:
    """Indices of the ACGT symbols of a record."""
    return [i for i, c in enumerate(record) if c in _SIGMA]

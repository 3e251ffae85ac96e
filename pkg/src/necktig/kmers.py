"""FASTA ingestion, 2-bit k-mer packing and spectrum extraction.

Symbols are packed A=0, C=1, G=2, T=3 with the first symbol in the most
significant position, so sorting packed values sorts k-mers lexicographically.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, TextIO, Union

import numpy as np

from .errors import EmptySpectrumError, FastaParseError, InvalidParameterError

ALPHABET = "ACGT"
MAX_K = 31

_CODE = {c: i for i, c in enumerate(ALPHABET)}
_LOOKUP = np.full(256, 255, dtype=np.uint8)
for _i, _c in enumerate(ALPHABET):
    _LOOKUP[ord(_c)] = _i
_RUNS = re.compile(r"[ACGT]+")


@dataclass(frozen=True)
class SeqSet:
    """Named DNA sequences; each entry is a maximal A/C/G/T run of some record."""

    records: list[tuple[str, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def sequences(self) -> list[str]:
        return [bases for _, bases in self.records]

    @property
    def total_bases(self) -> int:
        return sum(len(b) for _, b in self.records)

    @classmethod
    def from_strings(cls, strings: Iterable[str], prefix: str = "s") -> "SeqSet":
        records = []
        for i, s in enumerate(strings):
            for run in _RUNS.findall(s.upper()):
                records.append((f"{prefix}{i}", run))
        return cls(records)


def _split_runs(name: str, chunks: list[str], out: list[tuple[str, str]]) -> None:
    for run in _RUNS.findall("".join(chunks).upper()):
        out.append((name, run))


def parse_fasta(source: Union[bytes, str, BinaryIO, TextIO]) -> SeqSet:
    """Parse FASTA text into a :class:`SeqSet`.

    Sequence data is upper-cased and split at every character outside
    ``ACGT`` (``N`` included); empty pieces are dropped. Data appearing before
    the first ``>`` header raises :class:`FastaParseError`.
    """
    if isinstance(source, bytes):
        source = source.decode("ascii", errors="replace")
    if isinstance(source, str):
        lines: Iterable = io.StringIO(source)
    else:
        lines = source

    records: list[tuple[str, str]] = []
    name = None
    chunks: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if name is not None:
                _split_runs(name, chunks, records)
            name = line[1:].strip()
            chunks = []
        elif name is None:
            raise FastaParseError("sequence data before the first '>' header", lineno)
        else:
            chunks.append(line)
    if name is not None:
        _split_runs(name, chunks, records)
    return SeqSet(records)


def read_fasta(path: str) -> SeqSet:
    """Read FASTA from ``path``; ``"-"`` means standard input."""
    if path == "-":
        import sys

        return parse_fasta(sys.stdin)
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        return parse_fasta(fh)


def write_fasta(records: Iterable[tuple[str, str]], fh: TextIO) -> None:
    for name, seq in records:
        fh.write(f">{name}\n{seq}\n")


def encode_kmer(kmer: str) -> int:
    value = 0
    for c in kmer:
        value = (value << 2) | _CODE[c]
    return value


def decode_kmer(value: int, k: int) -> str:
    out = []
    for _ in range(k):
        out.append(ALPHABET[value & 3])
        value >>= 2
    return "".join(reversed(out))


def check_k(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 2 or k > MAX_K:
        raise InvalidParameterError(f"k must be an integer in [2, {MAX_K}], got {k!r}")


def _window_values(seq: str, k: int) -> np.ndarray:
    codes = _LOOKUP[np.frombuffer(seq.encode("ascii"), dtype=np.uint8)].astype(np.uint64)
    n = len(codes) - k + 1
    values = np.zeros(n, dtype=np.uint64)
    for j in range(k):
        values = (values << np.uint64(2)) | codes[j : j + n]
    return values


class Spectrum:
    """Deduplicated k-mer set with dense ids in ascending packed order.

    ``kmers[i]`` is the packed value of the k-mer with id ``i``.
    """

    def __init__(self, k: int, kmers: np.ndarray):
        check_k(k)
        self.k = int(k)
        arr = np.asarray(kmers, dtype=np.uint64)
        if arr.size and np.any(arr[1:] <= arr[:-1]):
            arr = np.unique(arr)
        arr.setflags(write=False)
        self.kmers = arr
        self._values: list[int] | None = None

    @classmethod
    def from_strings(cls, kmers: Iterable[str], k: int | None = None) -> "Spectrum":
        kmers = list(kmers)
        if k is None:
            if not kmers:
                raise InvalidParameterError("k is required for an empty k-mer list")
            k = len(kmers[0])
        if any(len(s) != k for s in kmers):
            raise InvalidParameterError("all k-mers must have length k")
        return cls(k, np.unique(np.array([encode_kmer(s) for s in kmers], dtype=np.uint64)))

    def __len__(self) -> int:
        return int(self.kmers.size)

    @property
    def n_k(self) -> int:
        return len(self)

    @property
    def values(self) -> list[int]:
        """Packed values as Python ints (cached; fast for scalar loops)."""
        if self._values is None:
            self._values = self.kmers.tolist()
        return self._values

    def id_of(self, kmer: Union[int, str]) -> int:
        value = encode_kmer(kmer) if isinstance(kmer, str) else int(kmer)
        i = int(np.searchsorted(self.kmers, np.uint64(value)))
        if i >= len(self) or int(self.kmers[i]) != value:
            raise KeyError(kmer)
        return i

    def __contains__(self, kmer: Union[int, str]) -> bool:
        try:
            self.id_of(kmer)
        except (KeyError, ValueError):
            return False
        return True

    def kmer(self, i: int) -> str:
        return decode_kmer(self.values[i], self.k)

    def strings(self) -> list[str]:
        return [decode_kmer(v, self.k) for v in self.values]

    def label(self, i: int) -> str:
        """Last symbol of k-mer ``i`` (the label of every edge entering it)."""
        return ALPHABET[self.values[i] & 3]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.kmers, other.kmers)

    def __repr__(self) -> str:
        return f"Spectrum(k={self.k}, n_k={len(self)})"


def extract_spectrum(seqs: Union[SeqSet, Iterable[str]], k: int) -> Spectrum:
    """Collect every distinct k-mer of ``seqs``; sequences shorter than ``k`` are skipped."""
    check_k(k)
    if isinstance(seqs, SeqSet):
        strings = seqs.sequences
    else:
        strings = list(seqs)
    parts = []
    for s in strings:
        if len(s) < k:
            continue
        if _RUNS.fullmatch(s) is None:
            raise InvalidParameterError("sequences must contain only A, C, G, T")
        parts.append(_window_values(s, k))
    if not parts:
        raise EmptySpectrumError(f"no sequence of length >= {k}")
    return Spectrum(k, np.unique(np.concatenate(parts)))

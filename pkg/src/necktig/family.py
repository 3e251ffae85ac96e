"""Input family where necklaces beat every SPSS by a factor close to 4/(k+1).

The input is a de Bruijn cycle of (k-1)-overlapping k-mers with one extra
k-mer hanging off every cycle node. Any SPSS must start a new string for
each hanging k-mer, while a necklace stores it in four symbols.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .kmers import ALPHABET, MAX_K, SeqSet

MAX_ORDER = 8


def de_bruijn_sequence(m: int, alphabet: str = ALPHABET) -> str:
    """Cyclic sequence holding every length-``m`` word exactly once (Lyndon-word concatenation)."""
    if not 1 <= m <= MAX_ORDER:
        raise InvalidParameterError(f"order must be in [1, {MAX_ORDER}], got {m}")
    q = len(alphabet)
    a = [0] * (m + 1)
    out: list[int] = []
    # iterative FKM: generate Lyndon words in lexicographic order
    t = 1
    while True:
        if m % t == 0:
            out.extend(a[1 : t + 1])
        t = m
        while t > 0 and a[t] == q - 1:
            t -= 1
        if t == 0:
            break
        a[t] += 1
        for j in range(t + 1, m + 1):
            a[j] = a[j - t]
    return "".join(alphabet[i] for i in out)


def is_de_bruijn_sequence(s: str, m: int, alphabet: str = ALPHABET) -> bool:
    n = len(alphabet) ** m
    if len(s) != n:
        return False
    t = s + s[: m - 1]
    return len({t[i : i + m] for i in range(n)}) == n


@dataclass(frozen=True)
class FamilySpec:
    k: int
    n: int
    x: str
    pendants: tuple[str, ...]

    def seqset(self) -> SeqSet:
        return SeqSet(tuple([("X", self.x)] + [(f"p{i}", p) for i, p in enumerate(self.pendants)]))


def family_spec(k: int, sequence: str | None = None) -> FamilySpec:
    """Build the family for ``k``; ``sequence`` overrides the default de Bruijn sequence."""
    if not 4 <= k <= min(MAX_ORDER + 2, MAX_K):
        raise InvalidParameterError(f"k must be in [4, {MAX_ORDER + 2}], got {k}")
    m = k - 2
    s = de_bruijn_sequence(m) if sequence is None else sequence.upper()
    if not is_de_bruijn_sequence(s, m):
        raise InvalidParameterError(f"not a de Bruijn sequence of order {m}")
    n = len(s)
    x = s + s[:k]
    pendants = []
    for i in range(n):
        a = x[i + k]
        b = next(c for c in ALPHABET if c != a)
        pendants.append(x[i : i + k] + b)
    return FamilySpec(k, n, x, tuple(pendants))


def gen_family(k: int, sequence: str | None = None) -> SeqSet:
    return family_spec(k, sequence).seqset()

"""
Permutations of [n] in one-line notation, with 1-based positions and values.

>>> s = Permutation([3, 1, 2])
>>> s.length
2
>>> sorted(inversions(s))
[(3, 1), (3, 2)]
>>> inverse(s)
Permutation(2,3,1)
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterable, Iterator, Sequence

from .errors import PermutationError

__all__ = [
    "Permutation", "parse_permutation", "identity", "longest_element",
    "length", "inversions", "inverse", "right_multiply_transposition",
    "right_multiply_simple", "left_multiply_simple", "contains_pattern",
    "avoids_132", "parabolic_max", "lehmer_code", "all_permutations",
    "avoiding_132",
]


class Permutation(tuple):
    """An immutable one-line word `w_1 ... w_n`, a bijection on {1, ..., n}."""

    __slots__ = ()

    def __new__(cls, word: Iterable[int]) -> "Permutation":
        word = tuple(word)
        _check_bijection(word)
        return tuple.__new__(cls, word)

    @classmethod
    def _trusted(cls, word: Iterable[int]) -> "Permutation":
        # caller guarantees `word` is a bijection
        return tuple.__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def length(self) -> int:
        return length(self)

    def __repr__(self) -> str:
        return f"Permutation({','.join(map(str, self))})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def compact(self) -> str:
        """Concatenated form like `56732418`, for n <= 9 only."""
        if len(self) > 9:
            return str(self)
        return "".join(map(str, self))


def _check_bijection(word: Sequence[int]) -> None:
    n = len(word)
    if n == 0:
        raise PermutationError("empty permutation")
    counts = Counter(word)
    dupes = sorted(v for v, c in counts.items() if c > 1)
    outside = sorted(v for v in counts if not (isinstance(v, int) and 1 <= v <= n))
    missing = sorted(set(range(1, n + 1)) - set(counts))
    if dupes or outside or missing:
        parts = []
        if dupes:
            parts.append("duplicated " + ", ".join(map(str, dupes)))
        if outside:
            parts.append(f"out of range 1..{n}: " + ", ".join(map(str, outside)))
        if missing:
            parts.append("missing " + ", ".join(map(str, missing)))
        raise PermutationError(f"not a permutation of 1..{n}: " + "; ".join(parts))


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation such as ``5,6,7,3,2,4,1,8``."""
    fields = [f.strip() for f in text.strip().split(",")]
    if not fields or any(not f for f in fields):
        raise PermutationError(f"malformed permutation {text!r}: empty field")
    try:
        word = [int(f) for f in fields]
    except ValueError:
        raise PermutationError(f"malformed permutation {text!r}: non-integer entry") from None
    return Permutation(word)


def _as_perm(sigma) -> Permutation:
    return sigma if isinstance(sigma, Permutation) else Permutation(sigma)


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("n must be positive")
    return Permutation._trusted(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("n must be positive")
    return Permutation._trusted(range(n, 0, -1))


def length(sigma: Sequence[int]) -> int:
    """Coxeter length: number of pairs i < j with sigma_i > sigma_j."""
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def inversions(sigma: Sequence[int]) -> frozenset[tuple[int, int]]:
    """Inversion set as value pairs (a, b), a > b, with a left of b."""
    n = len(sigma)
    return frozenset(
        (sigma[i], sigma[j])
        for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )


def inverse(sigma: Sequence[int]) -> Permutation:
    inv = [0] * len(sigma)
    for pos, val in enumerate(sigma, start=1):
        inv[val - 1] = pos
    return Permutation._trusted(inv)


def right_multiply_transposition(sigma: Sequence[int], i: int, j: int) -> Permutation:
    """sigma * t_ij: swap the entries at positions i < j."""
    n = len(sigma)
    if not 1 <= i < j <= n:
        raise PermutationError(f"need 1 <= i < j <= {n}, got i={i}, j={j}")
    w = list(sigma)
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return Permutation._trusted(w)


def right_multiply_simple(sigma: Sequence[int], i: int) -> Permutation:
    """sigma * s_i: swap positions i and i+1."""
    return right_multiply_transposition(sigma, i, i + 1)


def left_multiply_simple(sigma: Sequence[int], i: int) -> Permutation:
    """s_i * sigma: swap the values i and i+1."""
    n = len(sigma)
    if not 1 <= i < n:
        raise PermutationError(f"need 1 <= i < {n}, got {i}")
    swap = {i: i + 1, i + 1: i}
    return Permutation._trusted(swap.get(v, v) for v in sigma)


def contains_pattern(sigma: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of sigma is order-isomorphic to `pattern`."""
    k = len(pattern)
    if k > len(sigma):
        return False
    order = sorted(range(k), key=lambda t: pattern[t])
    for positions in itertools.combinations(range(len(sigma)), k):
        vals = [sigma[p] for p in positions]
        if all(vals[order[t]] < vals[order[t + 1]] for t in range(k - 1)):
            return True
    return False


def avoids_132(sigma: Sequence[int]) -> bool:
    """Quadratic check for positions a < b < c with sigma_a < sigma_c < sigma_b."""
    n = len(sigma)
    prefix_min = sigma[0]
    for b in range(1, n - 1):
        hi = sigma[b]
        if prefix_min < hi:
            for c in range(b + 1, n):
                if prefix_min < sigma[c] < hi:
                    return False
        prefix_min = min(prefix_min, hi)
    return True


def parabolic_max(n: int, J: Iterable[int]) -> Permutation:
    """
    The longest permutation that ascends at every position in J.

    Positions joined by J form blocks; each block is an increasing run and the
    blocks take the largest remaining values from left to right.
    """
    if n < 1:
        raise PermutationError("n must be positive")
    J = set(J)
    bad = sorted(i for i in J if not (isinstance(i, int) and 1 <= i <= n - 1))
    if bad:
        raise PermutationError(f"invalid simple reflection indices for n={n}: {bad}")
    blocks, size = [], 1
    for i in range(1, n):
        if i in J:
            size += 1
        else:
            blocks.append(size)
            size = 1
    blocks.append(size)
    word, top = [], n
    for size in blocks:
        word.extend(range(top - size + 1, top + 1))
        top -= size
    return Permutation._trusted(word)


def lehmer_code(sigma: Sequence[int]) -> tuple[int, ...]:
    """c_i = #{j > i : sigma_j < sigma_i}."""
    n = len(sigma)
    return tuple(
        sum(1 for j in range(i + 1, n) if sigma[j] < sigma[i]) for i in range(n)
    )


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(w)


def avoiding_132(n: int) -> Iterator[Permutation]:
    """132-avoiding permutations of [n], lexicographic."""
    return (p for p in all_permutations(n) if avoids_132(p))

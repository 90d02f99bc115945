"""
Weak and strong Bruhat order, and the weak-order interval [e, pi]_R as an
explicit ranked poset.
"""

from __future__ import annotations

import functools
import json
import os
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import IntervalTooLargeError, Non132AvoidingError, PermutationError
from .perm import Permutation, avoids_132, identity, inverse, length

__all__ = [
    "DEFAULT_MAX_INTERVAL", "default_max_interval", "weak_leq",
    "weak_up_covers", "strong_up_covers", "WeakInterval", "build_interval",
    "hasse_export",
]

DEFAULT_MAX_INTERVAL = 500_000
MAX_INTERVAL_ENV = "BRUHAT_SL2_MAX_INTERVAL"


def default_max_interval() -> int:
    value = os.environ.get(MAX_INTERVAL_ENV)
    if value:
        return int(value)
    return DEFAULT_MAX_INTERVAL


def weak_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """u <= v in right weak order, i.e. inv(u) is a subset of inv(v)."""
    if len(u) != len(v):
        raise PermutationError(f"size mismatch: {len(u)} vs {len(v)}")
    pos_v = inverse(v)
    n = len(u)
    # every inversion (u_a, u_b) of u must also have u_a left of u_b in v
    for a in range(n):
        for b in range(a + 1, n):
            if u[a] > u[b] and pos_v[u[a] - 1] > pos_v[u[b] - 1]:
                return False
    return True


def weak_up_covers(sigma: Sequence[int]) -> list[tuple[int, Permutation]]:
    """(i, sigma*s_i) for each ascent i of sigma."""
    out = []
    for i in range(1, len(sigma)):
        if sigma[i - 1] < sigma[i]:
            w = list(sigma)
            w[i - 1], w[i] = w[i], w[i - 1]
            out.append((i, Permutation._trusted(w)))
    return out


def strong_up_covers(sigma: Sequence[int]) -> list[tuple[int, int, Permutation]]:
    """
    (i, j, sigma*t_ij) for every strong-order cover of sigma: sigma_i < sigma_j
    with no intermediate position holding a value strictly between them.
    """
    n = len(sigma)
    out = []
    for i in range(n - 1):
        lo = sigma[i]
        # smallest value above lo seen so far in positions i+1..j-1
        ceiling = n + 1
        for j in range(i + 1, n):
            v = sigma[j]
            if lo < v < ceiling:
                w = list(sigma)
                w[i], w[j] = v, lo
                out.append((i + 1, j + 1, Permutation._trusted(w)))
                ceiling = v
    return out


@dataclass(frozen=True, eq=False)
class WeakInterval:
    """
    The interval [e, pi]_R with canonical element order (length, then word).

    `weak_up[x]` lists (i, y) with elements[y] = elements[x]*s_i; `strong_up[x]`
    lists (i, j, y) with elements[y] = elements[x]*t_ij.  All covers stay inside
    the interval.
    """

    pi: Permutation
    elements: tuple[Permutation, ...]
    index_of: dict
    ranks: tuple[tuple[int, ...], ...]
    weak_up: tuple[tuple[tuple[int, int], ...], ...]
    strong_up: tuple[tuple[tuple[int, int, int], ...], ...]

    @property
    def n(self) -> int:
        return len(self.pi)

    @property
    def top_rank(self) -> int:
        return len(self.ranks) - 1

    @property
    def rank_sizes(self) -> list[int]:
        return [len(r) for r in self.ranks]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, sigma) -> bool:
        return tuple(sigma) in self.index_of

    def rank_of(self, idx: int) -> int:
        return length(self.elements[idx])

    def weak_down(self) -> list[list[tuple[int, int]]]:
        """Per element, (i, x) with elements[x] = element * s_i lower by one."""
        down = [[] for _ in self.elements]
        for x, covers in enumerate(self.weak_up):
            for i, y in covers:
                down[y].append((i, x))
        for d in down:
            d.sort()
        return down


def build_interval(pi: Sequence[int], max_elements: int | None = None) -> WeakInterval:
    pi = pi if isinstance(pi, Permutation) else Permutation(pi)
    if not avoids_132(pi):
        raise Non132AvoidingError(pi)
    if max_elements is None:
        max_elements = default_max_interval()
    return _build_interval(pi, max_elements)


@functools.lru_cache(maxsize=256)
def _build_interval(pi: Permutation, max_elements: int) -> WeakInterval:
    n = len(pi)
    pos_pi = inverse(pi)
    # sigma*s_i stays below pi iff the new inversion (sigma_{i+1}, sigma_i) is one of pi's
    seen = {identity(n)}
    queue = deque(seen)
    while queue:
        sigma = queue.popleft()
        for i in range(n - 1):
            a, b = sigma[i], sigma[i + 1]
            if a < b and pos_pi[b - 1] < pos_pi[a - 1]:
                w = list(sigma)
                w[i], w[i + 1] = b, a
                tau = Permutation._trusted(w)
                if tau not in seen:
                    seen.add(tau)
                    if len(seen) > max_elements:
                        raise IntervalTooLargeError(pi, max_elements)
                    queue.append(tau)

    keyed = sorted((length(s), s) for s in seen)
    elements = tuple(s for _, s in keyed)
    index_of = {s: k for k, s in enumerate(elements)}
    top = length(pi)
    ranks = [[] for _ in range(top + 1)]
    for k, (r, _) in enumerate(keyed):
        ranks[r].append(k)

    weak_up, strong_up = [], []
    for sigma in elements:
        weak_up.append(tuple(
            (i, index_of[tau]) for i, tau in weak_up_covers(sigma) if tau in index_of
        ))
        strong_up.append(tuple(
            (i, j, index_of[tau]) for i, j, tau in strong_up_covers(sigma) if tau in index_of
        ))
    return WeakInterval(
        pi=pi,
        elements=elements,
        index_of=index_of,
        ranks=tuple(tuple(r) for r in ranks),
        weak_up=tuple(weak_up),
        strong_up=tuple(strong_up),
    )


def _edges(interval: WeakInterval, which: str):
    if which == "weak":
        for src, covers in enumerate(interval.weak_up):
            for i, dst in sorted(covers, key=lambda c: c[1]):
                yield src, dst, {"i": i}
    elif which == "strong":
        for src, covers in enumerate(interval.strong_up):
            for i, j, dst in sorted(covers, key=lambda c: c[2]):
                yield src, dst, {"i": i, "j": j}
    else:
        raise ValueError(f"unknown order {which!r}; expected 'weak' or 'strong'")


def hasse_export(interval: WeakInterval, which: str = "weak", fmt: str = "json") -> str:
    """Serialize the Hasse diagram of the weak or strong order on the interval."""
    edges = list(_edges(interval, which))
    if fmt == "json":
        doc = {
            "pi": str(interval.pi),
            "n": interval.n,
            "elements": [str(s) for s in interval.elements],
            "rank_sizes": interval.rank_sizes,
            "edges": [{"src": s, "dst": d, "label": lab} for s, d, lab in edges],
        }
        return json.dumps(doc)
    if fmt == "dot":
        lines = [f'digraph "{which}_{interval.pi.compact()}" {{', "  rankdir=BT;"]
        for k, sigma in enumerate(interval.elements):
            lines.append(f'  {k} [label="{sigma.compact()}"];')
        for s, d, lab in edges:
            text = str(lab["i"]) if which == "weak" else f"({lab['i']},{lab['j']})"
            lines.append(f'  {s} -> {d} [label="{text}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected 'json' or 'dot'")

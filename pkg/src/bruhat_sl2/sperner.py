"""
Strong Sperner certification for weak intervals.

The certificate uses Stanley's criterion: if the lowering operator F maps
rank r-i isomorphically onto rank i under F^(r-2i) for every i < r/2, the
poset is strongly Sperner.  Two order-theoretic oracles (maximum antichains
via bipartite matching and exhaustive k-antichain search) cross-check it on
small instances.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .errors import (
    InexactDivisionError, IntervalTooLargeError, RankSizeMismatchError,
    TooLargeForBruteForceError,
)
from .linop import LinearOperator
from .orders import WeakInterval, build_interval
from .perm import Permutation
from .sl2 import build_F

__all__ = [
    "exact_rank", "fpower_restricted", "SpernerCertificate", "certify_sperner",
    "max_antichain_oracle", "k_sperner_bruteforce", "BRUTE_FORCE_LIMIT",
]

BRUTE_FORCE_LIMIT = 24


def exact_rank(matrix: Sequence[Sequence[int]]) -> int:
    """
    Rank over Q by fraction-free (Bareiss) elimination.  The pivot in each
    column is the entry of smallest nonzero magnitude.
    """
    m = [list(row) for row in matrix]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = None
        for p in range(r, nrows):
            v = m[p][c]
            if v and (best is None or abs(v) < abs(m[best][c])):
                best = p
        if best is None:
            continue
        m[r], m[best] = m[best], m[r]
        pivot_row = m[r]
        piv = pivot_row[c]
        for p in range(r + 1, nrows):
            row = m[p]
            f = row[c]
            if f:
                for q in range(c + 1, ncols):
                    num = piv * row[q] - f * pivot_row[q]
                    val, rem = divmod(num, prev)
                    if rem:
                        raise InexactDivisionError("Bareiss step left a remainder")
                    row[q] = val
            else:
                for q in range(c + 1, ncols):
                    val, rem = divmod(piv * row[q], prev)
                    if rem:
                        raise InexactDivisionError("Bareiss step left a remainder")
                    row[q] = val
            row[c] = 0
        prev = piv
        r += 1
    return r


def fpower_restricted(
    interval: WeakInterval, F: LinearOperator, i: int
) -> list[list[int]]:
    """
    Matrix of F^(r-2i) from rank r-i (columns) to rank i (rows), bases in
    canonical order.
    """
    r = interval.top_rank
    if not 0 <= 2 * i <= r:
        raise ValueError(f"rank index {i} outside 0..{r // 2}")
    src, dst = interval.ranks[r - i], interval.ranks[i]
    if len(src) != len(dst):
        raise RankSizeMismatchError(
            f"ranks {r - i} and {i} of the interval below {interval.pi} have sizes {len(src)} and {len(dst)}"
        )
    cols = F.columns()
    row_pos = {x: k for k, x in enumerate(dst)}
    out = [[0] * len(src) for _ in dst]
    for c, x in enumerate(src):
        vec = {x: 1}
        for _ in range(r - 2 * i):
            nxt: dict[int, int] = {}
            for y, a in vec.items():
                for z, b in cols.get(y, {}).items():
                    nxt[z] = nxt.get(z, 0) + a * b
            vec = nxt
        for y, a in vec.items():
            if a:
                out[row_pos[y]][c] = a
    return out


@dataclass
class SpernerCertificate:
    pi: Permutation
    verdict: str
    rank_sizes: list[int] = field(default_factory=list)
    fpower_ranks: list[int] = field(default_factory=list)
    fpower_full_rank: list[bool] = field(default_factory=list)
    oracle_results: dict | None = None
    detail: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"

    def to_dict(self) -> dict:
        doc = {
            "pi": str(self.pi),
            "verdict": self.verdict,
            "rank_sizes": self.rank_sizes,
            "fpower_full_rank": self.fpower_full_rank,
        }
        if self.oracle_results is not None:
            doc["oracle"] = self.oracle_results
        if self.detail:
            doc["detail"] = self.detail
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def certify_sperner(
    pi: Sequence[int], max_elements: int | None = None, oracle: bool = False
) -> SpernerCertificate:
    """
    Certify [e, pi]_R strongly Sperner.  The verdict is 'certified' when every
    restricted F-power has full rank, 'refuted' when one does not (or mirrored
    ranks differ in size), and 'inconclusive' when the interval exceeds
    `max_elements`.
    """
    pi = Permutation(pi)
    try:
        interval = build_interval(pi, max_elements)
    except IntervalTooLargeError as exc:
        return SpernerCertificate(pi, "inconclusive", detail=str(exc))
    sizes = interval.rank_sizes
    F = build_F(interval)
    r = interval.top_rank
    ranks, full = [], []
    verdict, detail = "certified", ""
    for i in range(r // 2 + 1):
        try:
            m = fpower_restricted(interval, F, i)
        except RankSizeMismatchError as exc:
            verdict, detail = "refuted", str(exc)
            break
        k = exact_rank(m)
        ranks.append(k)
        full.append(k == len(m))
        if k != len(m):
            verdict = "refuted"
            detail = detail or f"F^{r - 2 * i} from rank {r - i} to rank {i} has rank {k} < {len(m)}"
    cert = SpernerCertificate(pi, verdict, sizes, ranks, full, detail=detail)
    if oracle:
        cert.oracle_results = oracle_report(interval)
    return cert


def oracle_report(interval: WeakInterval) -> dict:
    sizes = sorted(interval.rank_sizes, reverse=True)
    doc = {
        "max_rank_size": sizes[0],
        "max_antichain_weak": max_antichain_oracle(interval, "weak"),
        "max_antichain_strong": max_antichain_oracle(interval, "strong"),
    }
    if len(interval) <= BRUTE_FORCE_LIMIT:
        doc["k_sperner"] = [
            {"k": k, "bruteforce": k_sperner_bruteforce(interval, k), "top_k_ranks": sum(sizes[:k])}
            for k in range(1, len(sizes) + 1)
        ]
    doc["agree"] = doc["max_antichain_weak"] == doc["max_rank_size"] and all(
        row["bruteforce"] == row["top_k_ranks"] for row in doc.get("k_sperner", [])
    )
    return doc


def _up_closure(interval: WeakInterval, order: str) -> list[int]:
    """Bitmask of all elements strictly above each element."""
    if order == "weak":
        covers = [[y for _, y in c] for c in interval.weak_up]
    elif order == "strong":
        covers = [[y for _, _, y in c] for c in interval.strong_up]
    else:
        raise ValueError(f"unknown order {order!r}")
    above = [0] * len(interval)
    for x in range(len(interval) - 1, -1, -1):
        mask = 0
        for y in covers[x]:
            mask |= (1 << y) | above[y]
        above[x] = mask
    return above


def max_antichain_oracle(interval: WeakInterval, order: str = "weak") -> int:
    """
    Width of the chosen order on the interval: element count minus a maximum
    matching in the comparability bipartite graph (Dilworth via Konig).
    """
    above = _up_closure(interval, order)
    g = nx.Graph()
    left = [("L", x) for x in range(len(interval))]
    g.add_nodes_from(left)
    g.add_nodes_from(("R", x) for x in range(len(interval)))
    for x, mask in enumerate(above):
        y = 0
        while mask:
            if mask & 1:
                g.add_edge(("L", x), ("R", y))
            mask >>= 1
            y += 1
    matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    return len(interval) - len(matching) // 2


def k_sperner_bruteforce(interval: WeakInterval, k: int, limit: int = BRUTE_FORCE_LIMIT) -> int:
    """
    Largest union of k antichains in the weak order on the interval, i.e. the
    largest subset with no chain of k+1 elements.  Every subset is considered,
    with states memoized on the chain heights they impose on later elements.
    """
    size = len(interval)
    if size > limit:
        raise TooLargeForBruteForceError(f"{size} elements exceed the brute-force limit {limit}")
    if k < 1:
        raise ValueError("k must be positive")
    above = _up_closure(interval, "weak")
    # elements are in a linear extension, so everything below z precedes z.
    # state[t] = tallest chain among chosen elements below element x + t
    @functools.lru_cache(maxsize=None)
    def best_from(x: int, state: tuple[int, ...]) -> int:
        if x == size:
            return 0
        rest = state[1:]
        best = best_from(x + 1, rest)
        h = state[0] + 1
        if h <= k:
            mask = above[x]
            lifted = tuple(
                max(s, h) if mask >> z & 1 else s
                for z, s in enumerate(rest, start=x + 1)
            )
            best = max(best, 1 + best_from(x + 1, lifted))
        return best

    return best_from(0, (0,) * size)

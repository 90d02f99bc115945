"""
Combinatorial structures behind the diagonal and off-diagonal entries of
[E, F]: forbidden swaps, sign grids, permutation paths and strong/weak
diamonds.  Each builder checks its own structural lemmas and raises
InvariantViolation if one fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import InvariantViolation, NotBelowPiError, PermutationError
from .orders import strong_up_covers, weak_leq
from .perm import Permutation, inverse, length, right_multiply_simple
from .sl2 import set_A, set_B, weight

__all__ = [
    "forbidden_swaps", "SignGrid", "sign_grid", "PermutationPath",
    "permutation_path", "diamond_complete", "diamond_candidates", "diamond_weights",
]


def _require_below(sigma, pi):
    if len(sigma) != len(pi) or not weak_leq(sigma, pi):
        raise NotBelowPiError(Permutation(sigma), Permutation(pi))


def forbidden_swaps(sigma: Sequence[int], pi: Sequence[int]) -> tuple[int, ...]:
    """Positions i with sigma*s_i outside [e, pi]_R, in increasing order."""
    sigma, pi = Permutation(sigma), Permutation(pi)
    _require_below(sigma, pi)
    out = []
    for i in range(1, len(sigma)):
        up = right_multiply_simple(sigma, i)
        if weak_leq(up, pi):
            continue
        if length(up) != length(sigma) + 1:
            raise InvariantViolation(f"forbidden s_{i} lowers length at {sigma}")
        if set_A(sigma, i) or set_B(sigma, i, pi):
            raise InvariantViolation(f"forbidden s_{i} has nonempty A or B at {sigma}")
        out.append(i)
    return tuple(out)


@dataclass(frozen=True)
class SignGrid:
    """Rows 1..n-1, columns 0..n; `cells[i-1][j]` holds S_ij in {-1, 0, 1}."""

    n: int
    cells: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.cells[i - 1][j]

    def nonzero(self) -> dict[tuple[int, int], int]:
        return {
            (i, j): v
            for i, row in enumerate(self.cells, start=1)
            for j, v in enumerate(row) if v
        }

    def weighted_sum(self) -> int:
        """sum_{i,j} i * S_ij."""
        return sum(i * v for i, row in enumerate(self.cells, start=1) for v in row)

    def column_sum(self, j: int) -> int:
        return sum(i * row[j] for i, row in enumerate(self.cells, start=1))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "row_labels": list(range(1, self.n)),
            "col_labels": list(range(self.n + 1)),
            "cells": [list(r) for r in self.cells],
        }

    def render(self) -> str:
        width = 3
        head = " " * width + "".join(f"{j:>{width}}" for j in range(self.n + 1))
        lines = [head]
        for i, row in enumerate(self.cells, start=1):
            body = "".join(f"{('+1' if v > 0 else '-1') if v else '.':>{width}}" for v in row)
            lines.append(f"{i:>{width}}" + body)
        return "\n".join(lines)


def sign_grid(sigma: Sequence[int], pi: Sequence[int]) -> SignGrid:
    sigma, pi = Permutation(sigma), Permutation(pi)
    n = len(sigma)
    forbidden = set(forbidden_swaps(sigma, pi))
    rows = []
    for i in range(1, n):
        row = [0] * (n + 1)
        if i in forbidden:
            row[0] = 1
        else:
            lam = 1 if sigma[i - 1] < sigma[i] else -1
            A, B = set_A(sigma, i), set_B(sigma, i, pi)
            for v in A - B:
                row[v] = lam
            for v in B - A:
                row[v] = -lam
        rows.append(tuple(row))
    grid = SignGrid(n, tuple(rows))
    if grid.weighted_sum() != comb(n, 2) - length(pi):
        raise InvariantViolation(f"sign grid sum identity fails at sigma={sigma}, pi={pi}")
    return grid


@dataclass(frozen=True)
class PermutationPath:
    """
    Points (sigma_i, pi^-1 sigma_i) for i < k, where sigma_k = column, and
    the pivot (sigma_k, pi^-1 sigma_k) whose lines x = sigma_k and
    y = pi^-1 sigma_k cut the plane into quadrants I..IV, numbered
    counterclockwise from the top right.  Steps run from point i to point
    i+1; the last step ends at the pivot.
    """

    column: int
    k: int
    points: tuple[tuple[int, int], ...]
    pivot: tuple[int, int]
    quadrants: tuple[int, ...]

    @property
    def steps(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        seq = list(self.points) + [self.pivot]
        return list(zip(seq, seq[1:]))

    def quadrant_count(self, q: int) -> int:
        return self.quadrants.count(q)

    def to_dict(self) -> dict:
        return {
            "column": self.column,
            "k": self.k,
            "points": [list(p) for p in self.points],
            "pivot_lines": {"x": self.pivot[0], "y": self.pivot[1]},
            "quadrants": list(self.quadrants),
        }

    def check(self, grid: SignGrid, forbidden: Sequence[int]) -> list[str]:
        """
        Return descriptions of every failed path property (empty when all
        hold).  `grid` and `forbidden` must come from the same (sigma, pi).
        """
        bad = []
        j = self.column
        forbidden = set(forbidden)
        if 1 in self.quadrants:
            bad.append("point in the interior of quadrant I")
        quads = list(self.quadrants) + [None]
        for i, ((x0, y0), (x1, y1)) in enumerate(self.steps, start=1):
            dx, dy = x1 - x0, y1 - y0
            if dx < 0 and dy < 0:
                bad.append(f"step {i} points down-left")
            if (dx > 0 and dy > 0) != (i in forbidden):
                bad.append(f"step {i}: up-right iff forbidden fails")
            q0, q1 = quads[i - 1], quads[i]
            if q1 is None:
                continue
            s = grid[i, j]
            if i in forbidden and q0 != q1:
                bad.append(f"forbidden step {i} changes quadrant")
            expected = {
                (2, 3): ("down-right", -1), (3, 2): ("up-left", 1),
                (4, 3): ("up-left", -1), (3, 4): ("down-right", 1),
            }.get((q0, q1))
            if expected:
                direction = "down-right" if dx > 0 and dy < 0 else "up-left" if dx < 0 and dy > 0 else "other"
                if (direction, s) != expected:
                    bad.append(f"step {i} crossing {q0}->{q1} is {direction} with sign {s}")
            elif q0 == q1 or {q0, q1} == {2, 4}:
                if s != 0:
                    bad.append(f"step {i} within quadrants {q0}->{q1} has sign {s}")
        correction = (self.k - 1) * grid[self.k - 1, 0] if self.k > 1 else 0
        if grid.column_sum(j) != self.quadrant_count(3) - correction:
            bad.append("column sum differs from quadrant III count minus correction")
        return bad


def _quadrant(point, pivot) -> int:
    (x, y), (px, py) = point, pivot
    if x > px:
        return 1 if y > py else 4
    return 2 if y > py else 3


def permutation_path(sigma: Sequence[int], pi: Sequence[int], column: int) -> PermutationPath:
    sigma, pi = Permutation(sigma), Permutation(pi)
    _require_below(sigma, pi)
    n = len(sigma)
    if not 1 <= column <= n:
        raise PermutationError(f"column {column} outside 1..{n}")
    pos = inverse(pi)
    k = sigma.index(column) + 1
    pts = tuple((v, pos[v - 1]) for v in sigma[: k - 1])
    pivot = (column, pos[column - 1])
    return PermutationPath(
        column=column,
        k=k,
        points=pts,
        pivot=pivot,
        quadrants=tuple(_quadrant(p, pivot) for p in pts),
    )


def diamond_candidates(sigma, tau, pi):
    """
    All alpha = sigma*s_m covering sigma in weak order and strongly covering
    tau, and all beta = tau*s_m covered by tau in weak order and strongly
    covered by sigma; both lists restricted to [e, pi]_R.
    """
    alphas, betas = [], []
    tau_up = {t for _, _, t in strong_up_covers(tau)}
    for m in range(1, len(sigma)):
        if sigma[m - 1] < sigma[m]:
            alpha = right_multiply_simple(sigma, m)
            if alpha in tau_up and weak_leq(alpha, pi):
                alphas.append((m, alpha))
        if tau[m - 1] > tau[m]:
            beta = right_multiply_simple(tau, m)
            if any(s == sigma for _, _, s in strong_up_covers(beta)):
                betas.append((m, beta))
    return alphas, betas


def diamond_complete(sigma: Sequence[int], tau: Sequence[int], pi: Sequence[int]):
    """
    The pair (alpha, beta) with tau -< alpha, sigma < alpha = sigma*s_m (weak)
    and beta = tau*s_m < tau (weak), beta -< sigma, all inside [e, pi]_R; or
    None when no such alpha (equivalently, no such beta) exists.
    """
    sigma, tau, pi = Permutation(sigma), Permutation(tau), Permutation(pi)
    if sigma == tau:
        raise PermutationError("sigma and tau must differ")
    if length(sigma) != length(tau):
        raise PermutationError("sigma and tau must have equal length")
    _require_below(sigma, pi)
    _require_below(tau, pi)
    alphas, betas = diamond_candidates(sigma, tau, pi)
    if len(alphas) > 1 or len(betas) > 1:
        raise InvariantViolation(f"diamond not unique for sigma={sigma}, tau={tau}")
    if bool(alphas) != bool(betas):
        raise InvariantViolation(f"alpha exists iff beta exists fails for sigma={sigma}, tau={tau}")
    if not alphas:
        return None
    (m, alpha), (m2, beta) = alphas[0], betas[0]
    if m != m2:
        raise InvariantViolation(f"diamond sides use different swaps s_{m}, s_{m2}")
    return alpha, beta


def _transposition_of(x, y):
    diff = [p for p in range(len(x)) if x[p] != y[p]]
    return diff[0] + 1, diff[1] + 1


def diamond_weights(sigma, tau, pi):
    """
    (alpha, beta, up weight beta -> sigma, up weight tau -> alpha, m) for a
    completed diamond, or None.  Both down weights equal m, and the two up
    weights agree whenever pi avoids 132.
    """
    found = diamond_complete(sigma, tau, pi)
    if found is None:
        return None
    alpha, beta = found
    i, j = _transposition_of(beta, sigma)
    p, q = _transposition_of(tau, alpha)
    m = _transposition_of(sigma, alpha)[0]
    return alpha, beta, weight(beta, i, j, pi), weight(tau, p, q, pi), m

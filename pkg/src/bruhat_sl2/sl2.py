"""
Raising, lowering and weight operators on the span of a 132-avoiding weak
interval [e, pi]_R, and an exact check of the sl2 relations

    [E, F] = H,   [H, E] = 2E,   [H, F] = -2F.

E sums over strong-order covers inside the interval with integer weights, F
over weak-order down covers with weight equal to the position of the swap,
and H is diagonal with eigenvalue 2*l(sigma) - l(pi).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotACoverError, NotBelowPiError, PermutationError
from .linop import LinearOperator, commutator
from .orders import WeakInterval, build_interval, weak_leq
from .perm import Permutation, inverse, length

__all__ = [
    "set_A", "set_B", "weight", "build_E", "build_F", "build_H",
    "commutator", "Sl2Report", "verify_sl2", "MAX_REPORTED_VIOLATIONS",
]

MAX_REPORTED_VIOLATIONS = 10


def _check_row(sigma: Sequence[int], i: int) -> None:
    if not 1 <= i <= len(sigma) - 1:
        raise PermutationError(f"row index {i} outside 1..{len(sigma) - 1}")


def set_A(sigma: Sequence[int], i: int) -> frozenset[int]:
    """Values right of position i+1 lying strictly between sigma_i and sigma_{i+1}."""
    _check_row(sigma, i)
    lo, hi = sorted((sigma[i - 1], sigma[i]))
    return frozenset(v for v in sigma[i + 1:] if lo < v < hi)


def set_B(sigma: Sequence[int], i: int, pi: Sequence[int]) -> frozenset[int]:
    """As `set_A`, with betweenness measured by positions in pi."""
    _check_row(sigma, i)
    pos = inverse(pi)
    lo, hi = sorted((pos[sigma[i - 1] - 1], pos[sigma[i] - 1]))
    return frozenset(v for v in sigma[i + 1:] if lo < pos[v - 1] < hi)


def _weight(sigma: Sequence[int], i: int, j: int, pos_pi: Sequence[int]) -> int:
    # 0-based i, j; pos_pi is pi^{-1} as a 0-indexed list of 1-based positions
    a, b = sigma[i], sigma[j]
    pa, pb = pos_pi[a - 1], pos_pi[b - 1]
    w = 1
    for v in sigma[j + 1:]:
        if a < v < b:
            w += 1
        if pb < pos_pi[v - 1] < pa:
            w += 1
    return w


def weight(sigma: Sequence[int], i: int, j: int, pi: Sequence[int]) -> int:
    """
    Up-weight of the strong cover sigma -> sigma*t_ij inside [e, pi]_R:

        1 + #{k > j : sigma_i < sigma_k < sigma_j}
          + #{k > j : pi^-1(sigma_j) < pi^-1(sigma_k) < pi^-1(sigma_i)}

    Raises NotACoverError unless sigma*t_ij strongly covers sigma, and
    NotBelowPiError unless both ends lie in the interval.
    """
    n = len(sigma)
    if not 1 <= i < j <= n:
        raise PermutationError(f"need 1 <= i < j <= {n}, got i={i}, j={j}")
    a, b = sigma[i - 1], sigma[j - 1]
    if not a < b or any(a < sigma[k] < b for k in range(i, j - 1)):
        raise NotACoverError(f"{Permutation(sigma)} * t_{i}{j} is not a strong cover")
    tau = list(sigma)
    tau[i - 1], tau[j - 1] = b, a
    for x in (sigma, tau):
        if not weak_leq(x, pi):
            raise NotBelowPiError(Permutation(x), Permutation(pi))
    return _weight(sigma, i - 1, j - 1, inverse(pi))


def build_E(interval: WeakInterval) -> LinearOperator:
    E = LinearOperator(len(interval))
    pos_pi = inverse(interval.pi)
    for col, sigma in enumerate(interval.elements):
        for i, j, row in interval.strong_up[col]:
            E.add_to(row, col, _weight(sigma, i - 1, j - 1, pos_pi))
    return E


def build_F(interval: WeakInterval) -> LinearOperator:
    F = LinearOperator(len(interval))
    for row, covers in enumerate(interval.weak_up):
        # element `col` = element `row` * s_i lies one rank up; F sends it back with weight i
        for i, col in covers:
            F.add_to(row, col, i)
    return F


def build_H(interval: WeakInterval) -> LinearOperator:
    top = length(interval.pi)
    return LinearOperator(
        len(interval),
        (((k, k), 2 * length(s) - top) for k, s in enumerate(interval.elements)),
    )


@dataclass
class Sl2Report:
    pi: Permutation
    relations: dict[str, str]
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v == "pass" for v in self.relations.values())

    def to_dict(self) -> dict:
        return {
            "pi": str(self.pi),
            "relations": dict(self.relations),
            "violations": list(self.violations),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _diff(name, actual, expected, elements, sink):
    diff = actual - expected
    for (r, c), _ in diff.items():
        if len(sink) >= MAX_REPORTED_VIOLATIONS:
            break
        sink.append({
            "relation": name,
            "row": str(elements[r]),
            "col": str(elements[c]),
            "expected": expected[r, c],
            "actual": actual[r, c],
        })
    return "pass" if diff.is_zero() else "fail"


def verify_sl2(pi: Sequence[int], max_elements: int | None = None) -> Sl2Report:
    """Build E, F, H on [e, pi]_R and test the three relations entrywise."""
    interval = build_interval(pi, max_elements)
    E, F, H = build_E(interval), build_F(interval), build_H(interval)
    els = interval.elements
    violations: list[dict] = []
    relations = {
        "HE": _diff("HE", commutator(H, E), 2 * E, els, violations),
        "HF": _diff("HF", commutator(H, F), -2 * F, els, violations),
        "EF": _diff("EF", commutator(E, F), H, els, violations),
    }
    return Sl2Report(interval.pi, relations, violations)

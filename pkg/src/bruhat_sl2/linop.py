"""Sparse square matrices over the integers, stored row-major."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import DimensionMismatchError


class LinearOperator:
    """
    A dim x dim integer matrix.  Zero entries are never stored, and iteration
    is always in (row, column) order.
    """

    __slots__ = ("dim", "_rows")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], int] | Iterable = ()):
        self.dim = dim
        self._rows: dict[int, dict[int, int]] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (r, c), v in items:
            self.add_to(r, c, v)

    def add_to(self, r: int, c: int, value: int) -> None:
        if not (0 <= r < self.dim and 0 <= c < self.dim):
            raise IndexError(f"entry ({r}, {c}) outside {self.dim}x{self.dim}")
        if value == 0:
            return
        row = self._rows.setdefault(r, {})
        new = row.get(c, 0) + value
        if new:
            row[c] = new
        else:
            del row[c]
            if not row:
                del self._rows[r]

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self._rows.get(r, {}).get(c, 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def row(self, r: int) -> dict[int, int]:
        return dict(self._rows.get(r, {}))

    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def _check(self, other: "LinearOperator") -> None:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dimensions differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        self._check(other)
        out = LinearOperator(self.dim, self.items())
        for (r, c), v in other.items():
            out.add_to(r, c, v)
        return out

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(self.dim, (((r, c), -v) for (r, c), v in self.items()))

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "LinearOperator":
        return LinearOperator(self.dim, (((r, c), scalar * v) for (r, c), v in self.items()))

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        self._check(other)
        out = LinearOperator(self.dim)
        for r, row in self._rows.items():
            acc: dict[int, int] = {}
            for k, a in row.items():
                for c, b in other._rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a * b
            for c, v in acc.items():
                if v:
                    out._rows.setdefault(r, {})[c] = v
        return out

    def apply(self, vec: Mapping[int, int]) -> dict[int, int]:
        """Matrix times a sparse column vector {index: coefficient}."""
        # column-wise access is needed; build it on demand
        cols = self.columns()
        out: dict[int, int] = {}
        for c, x in vec.items():
            for r, a in cols.get(c, {}).items():
                out[r] = out.get(r, 0) + a * x
        return {r: v for r, v in out.items() if v}

    def columns(self) -> dict[int, dict[int, int]]:
        cols: dict[int, dict[int, int]] = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                cols.setdefault(c, {})[r] = v
        return cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._rows

    def to_dense(self) -> list[list[int]]:
        m = [[0] * self.dim for _ in range(self.dim)]
        for (r, c), v in self.items():
            m[r][c] = v
        return m

    def __repr__(self) -> str:
        return f"LinearOperator(dim={self.dim}, nnz={self.nnz()})"


def commutator(x: LinearOperator, y: LinearOperator) -> LinearOperator:
    """[X, Y] = XY - YX."""
    x._check(y)
    return x @ y - y @ x

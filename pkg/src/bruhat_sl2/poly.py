"""Integer polynomials stored as exponent-vector -> coefficient maps."""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import PaddingViolationError

__all__ = ["MultiPolynomial", "PaddedPolynomial"]


def _add_term(terms: dict, exp: tuple, coeff: int) -> None:
    new = terms.get(exp, 0) + coeff
    if new:
        terms[exp] = new
    else:
        terms.pop(exp, None)


def _format_monomial(exp, names) -> str:
    parts = []
    for k, e in enumerate(exp, start=1):
        if e:
            parts.append(f"{names}{k}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


class MultiPolynomial:
    """A polynomial in x_1..x_nvars with integer coefficients; zeros never stored."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, int] | Iterable = ()):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
            _add_term(self.terms, exp, c)

    @classmethod
    def monomial(cls, exp, coeff: int = 1) -> "MultiPolynomial":
        return cls(len(exp), {tuple(exp): coeff})

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        out = MultiPolynomial(self.nvars, self.terms)
        for exp, c in other.terms.items():
            _add_term(out.terms, exp, c)
        return out

    def __neg__(self) -> "MultiPolynomial":
        return MultiPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "MultiPolynomial":
        return MultiPolynomial(self.nvars, {e: scalar * c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _add_term(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return MultiPolynomial(self.nvars, out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def evaluate(self, point: Iterable) -> int:
        point = list(point)
        total = 0
        for exp, c in self.terms.items():
            term = c
            for x, e in zip(point, exp):
                term *= x ** e
            total += term
        return total

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def swap_variables(self, i: int) -> "MultiPolynomial":
        """s_i f: exchange x_i and x_{i+1} (1-based)."""
        out = {}
        for exp, c in self.terms.items():
            e = list(exp)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return MultiPolynomial(self.nvars, out)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: Mapping) -> "MultiPolynomial":
        return cls(doc["nvars"], ((tuple(t["exp"]), int(t["coeff"])) for t in doc["terms"]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = _format_monomial(exp, "x")
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPolynomial({self.nvars}, {self.terms!r})"


class PaddedPolynomial:
    """
    Polynomial in x and y homogenized against a fixed exponent vector beta:
    the stored exponent alpha stands for x^alpha * y^(beta - alpha).
    """

    __slots__ = ("beta", "terms")

    def __init__(self, beta, terms: Mapping[tuple, int] | Iterable = ()):
        self.beta = tuple(beta)
        self.terms: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for alpha, c in items:
            alpha = tuple(alpha)
            if len(alpha) != len(self.beta) or any(a > b or a < 0 for a, b in zip(alpha, self.beta)):
                raise PaddingViolationError(f"exponent {alpha} is not below {self.beta}")
            _add_term(self.terms, alpha, c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PaddedPolynomial):
            return NotImplemented
        return self.beta == other.beta and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "PaddedPolynomial") -> "PaddedPolynomial":
        if other.beta != self.beta:
            raise ValueError("padding vectors differ")
        out = PaddedPolynomial(self.beta, self.terms)
        for a, c in other.terms.items():
            _add_term(out.terms, a, c)
        return out

    def __rmul__(self, scalar: int) -> "PaddedPolynomial":
        return PaddedPolynomial(self.beta, {a: scalar * c for a, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def y_exponent(self, alpha) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(alpha, self.beta))

    def bidegrees(self) -> set[tuple[int, int]]:
        total = sum(self.beta)
        return {(sum(a), total - sum(a)) for a in self.terms}

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for alpha, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(m for m in (
                _format_monomial(alpha, "x"), _format_monomial(self.y_exponent(alpha), "y")
            ) if m)
            out.append(mono if c == 1 and mono else f"{c}*{mono}" if mono else str(c))
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"PaddedPolynomial({self.beta}, {self.terms!r})"

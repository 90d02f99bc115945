"""
Schubert polynomials and their principal specializations.

Indexing convention: S_{w0} = x^rho with rho = (n-1, ..., 1, 0), and
S_{s_i sigma} = N_i S_sigma whenever s_i sigma is shorter than sigma, where
s_i sigma swaps the *values* i and i+1.  Under this convention S_{312} = x1*x2
and S_{231} = x1^2 (the inverse of the more common labelling).

Three routes to S_sigma(1, ..., 1) are provided and must agree:
coefficient sums of the divided-difference polynomial, the reduced-word sum,
and weighted strong-order chains inside any 132-avoiding weak interval
above sigma.
"""

from __future__ import annotations

import threading
from math import factorial
from typing import Iterator, Sequence

from .errors import (
    InexactDivisionError, Non132AvoidingError, NotBelowPiError, PaddingViolationError,
)
from .orders import build_interval, weak_leq
from .perm import (
    Permutation, avoids_132, inverse, left_multiply_simple, lehmer_code, length,
    right_multiply_simple,
)
from .poly import MultiPolynomial, PaddedPolynomial
from .sl2 import _weight

__all__ = [
    "divided_difference", "schubert", "principal_specialization",
    "reduced_words", "macdonald_sum", "pi_beta", "beta_convention", "pad",
    "nabla", "delta", "chain_totals", "chain_sum",
]


def divided_difference(f: MultiPolynomial, i: int) -> MultiPolynomial:
    """N_i f = (f - s_i f) / (x_i - x_{i+1}), evaluated monomial by monomial."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"N_{i} undefined on {f.nvars} variables")
    p, q = i - 1, i
    out: dict[tuple[int, ...], int] = {}
    for exp, c in f.terms.items():
        a, b = exp[p], exp[q]
        if a == b:
            continue
        # x^a y^b - x^b y^a over x - y: a geometric sum of a - b (or b - a) terms
        if a > b:
            sign, hi, lo = 1, a, b
        else:
            sign, hi, lo = -1, b, a
        e = list(exp)
        for t in range(hi - lo):
            if sign > 0:
                e[p], e[q] = hi - 1 - t, lo + t
            else:
                e[p], e[q] = lo + t, hi - 1 - t
            key = tuple(e)
            v = out.get(key, 0) + sign * c
            if v:
                out[key] = v
            else:
                del out[key]
    return MultiPolynomial(f.nvars, out)


_memo: dict[Permutation, MultiPolynomial] = {}
_memo_lock = threading.Lock()


def _left_ascent(sigma: Sequence[int]) -> int | None:
    """Smallest i with value i left of value i+1, so that s_i sigma is longer."""
    pos = inverse(sigma)
    for i in range(1, len(sigma)):
        if pos[i - 1] < pos[i]:
            return i
    return None


def schubert(sigma: Sequence[int]) -> MultiPolynomial:
    """S_sigma in x_1..x_n, memoized per permutation."""
    sigma = sigma if isinstance(sigma, Permutation) else Permutation(sigma)
    cached = _memo.get(sigma)
    if cached is not None:
        return cached
    # walk up through left ascents to w0, then come back down
    chain = []
    cur = sigma
    while cur not in _memo:
        i = _left_ascent(cur)
        if i is None:
            n = len(cur)
            poly = MultiPolynomial.monomial(tuple(range(n - 1, -1, -1)))
            with _memo_lock:
                poly = _memo.setdefault(cur, poly)
            break
        chain.append((cur, i))
        cur = left_multiply_simple(cur, i)
    poly = _memo[cur]
    for below, i in reversed(chain):
        poly = divided_difference(poly, i)
        with _memo_lock:
            poly = _memo.setdefault(below, poly)
    return poly


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def principal_specialization(sigma: Sequence[int]) -> int:
    return schubert(sigma).coefficient_sum()


def reduced_words(sigma: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """
    All reduced words (i_1, ..., i_l) with s_{i_1} ... s_{i_l} = sigma, built
    right to left by peeling off right descents.
    """
    sigma = Permutation(sigma)

    def walk(w, suffix):
        descents = [i for i in range(1, len(w)) if w[i - 1] > w[i]]
        if not descents:
            yield suffix
            return
        for i in descents:
            yield from walk(right_multiply_simple(w, i), (i,) + suffix)

    return walk(sigma, ())


def macdonald_sum(sigma: Sequence[int]) -> int:
    """(1 / l!) * sum over reduced words of the product of their letters."""
    sigma = Permutation(sigma)
    total = 0
    for word in reduced_words(sigma):
        prod = 1
        for letter in word:
            prod *= letter
        total += prod
    q, r = divmod(total, factorial(length(sigma)))
    if r:
        raise InexactDivisionError(f"reduced-word sum {total} not divisible by {length(sigma)}! at {sigma}")
    return q


def pi_beta(pi: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector beta with S_pi = x^beta; pi must avoid 132."""
    pi = Permutation(pi)
    if not avoids_132(pi):
        raise Non132AvoidingError(pi)
    poly = schubert(pi)
    if len(poly) != 1 or next(iter(poly.terms.values())) != 1:
        raise PaddingViolationError(f"S_{pi} is not a single monic monomial: {poly}")
    return next(iter(poly.terms))


def beta_convention(pi: Sequence[int]) -> list[str]:
    """
    Which Lehmer-code reading reproduces beta for this pi: 'code' for the
    code of pi, 'inverse_code' for the code of pi^-1 (both when they agree).
    """
    beta = pi_beta(pi)
    out = []
    if lehmer_code(pi) == beta:
        out.append("code")
    if lehmer_code(inverse(pi)) == beta:
        out.append("inverse_code")
    return out


def pad(sigma: Sequence[int], pi: Sequence[int]) -> PaddedPolynomial:
    """The pi-padded polynomial x^alpha -> x^alpha y^(beta - alpha) of S_sigma."""
    sigma, pi = Permutation(sigma), Permutation(pi)
    beta = pi_beta(pi)
    if len(sigma) != len(pi) or not weak_leq(sigma, pi):
        raise NotBelowPiError(sigma, pi)
    return PaddedPolynomial(beta, schubert(sigma).terms)


def nabla(p: PaddedPolynomial) -> PaddedPolynomial:
    """sum_i y_i d/dx_i."""
    out: list[tuple[tuple[int, ...], int]] = []
    for alpha, c in p.terms.items():
        for k, a in enumerate(alpha):
            if a:
                e = list(alpha)
                e[k] -= 1
                out.append((tuple(e), c * a))
    return PaddedPolynomial(p.beta, out)


def delta(p: PaddedPolynomial) -> PaddedPolynomial:
    """sum_i x_i d/dy_i."""
    out: list[tuple[tuple[int, ...], int]] = []
    for alpha, c in p.terms.items():
        for k, (a, b) in enumerate(zip(alpha, p.beta)):
            if b > a:
                e = list(alpha)
                e[k] += 1
                out.append((tuple(e), c * (b - a)))
    return PaddedPolynomial(p.beta, out)


def chain_totals(pi: Sequence[int], max_elements: int | None = None) -> dict[Permutation, int]:
    """
    For every sigma in [e, pi]_R, the sum over saturated strong-order chains
    sigma -> pi inside the interval of the product of the cover weights.
    """
    interval = build_interval(pi, max_elements)
    pos_pi = inverse(interval.pi)
    total = [0] * len(interval)
    # canonical order is by length, so a reverse sweep sees every cover target first
    for x in range(len(interval) - 1, -1, -1):
        sigma = interval.elements[x]
        covers = interval.strong_up[x]
        if not covers:
            total[x] = 1
            continue
        total[x] = sum(_weight(sigma, i - 1, j - 1, pos_pi) * total[y] for i, j, y in covers)
    return dict(zip(interval.elements, total))


def chain_sum(sigma: Sequence[int], pi: Sequence[int], max_elements: int | None = None) -> int:
    """S_sigma(1, ..., 1) from weighted chains up to a 132-avoiding pi above sigma."""
    sigma, pi = Permutation(sigma), Permutation(pi)
    if not avoids_132(pi):
        raise Non132AvoidingError(pi)
    if len(sigma) != len(pi) or not weak_leq(sigma, pi):
        raise NotBelowPiError(sigma, pi)
    total = chain_totals(pi, max_elements)[sigma]
    steps = length(pi) - length(sigma)
    q, r = divmod(total, factorial(steps))
    if r:
        raise InexactDivisionError(f"chain total {total} not divisible by {steps}! for {sigma} under {pi}")
    return q

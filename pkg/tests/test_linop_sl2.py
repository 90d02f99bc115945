import pytest
from hypothesis import given, settings, strategies as st

from bruhat_sl2.errors import DimensionMismatchError, NotACoverError, NotBelowPiError
from bruhat_sl2.linop import LinearOperator, commutator
from bruhat_sl2.orders import build_interval
from bruhat_sl2.perm import Permutation, avoiding_132, inverse, length, longest_element
from bruhat_sl2.sl2 import build_E, build_F, build_H, set_A, set_B, verify_sl2, weight

small = st.integers(1, 5)


@st.composite
def dense(draw, dim):
    return [[draw(st.integers(-4, 4)) for _ in range(dim)] for _ in range(dim)]


def to_op(m):
    return LinearOperator(len(m), (((r, c), v) for r, row in enumerate(m) for c, v in enumerate(row)))


def matmul(a, b):
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


@settings(max_examples=50)
@given(st.integers(1, 5).flatmap(lambda d: st.tuples(dense(d), dense(d))))
def test_operator_arithmetic_matches_dense(pair):
    a, b = pair
    A, B = to_op(a), to_op(b)
    assert (A @ B).to_dense() == matmul(a, b)
    assert (A + B).to_dense() == [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]
    assert (3 * A).to_dense() == [[3 * x for x in r] for r in a]
    ab, ba = matmul(a, b), matmul(b, a)
    assert commutator(A, B).to_dense() == [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]
    assert (A - A).is_zero()
    vec = {k: k + 1 for k in range(len(a))}
    assert A.apply(vec) == {r: v for r, v in enumerate(
        sum(a[r][c] * (c + 1) for c in range(len(a))) for r in range(len(a))) if v}


def test_zero_entries_not_stored():
    op = LinearOperator(2)
    op.add_to(0, 1, 3)
    op.add_to(0, 1, -3)
    assert op.nnz() == 0 and op.is_zero()
    with pytest.raises(DimensionMismatchError):
        op + LinearOperator(3)


def test_sets_A_and_B():
    sigma, pi = Permutation([3, 2, 5, 6, 4, 1, 7, 8]), Permutation([5, 6, 7, 3, 2, 4, 1, 8])
    assert set_A(sigma, 2) == {4}
    assert set_B(sigma, 2, pi) == {6, 7}
    assert set_A(Permutation([1, 3, 2]), 1) == {2}


def test_weights_for_231():
    pi = Permutation([2, 3, 1])
    assert weight((1, 2, 3), 1, 2, pi) == 2
    assert weight((2, 1, 3), 2, 3, pi) == 1
    with pytest.raises(NotACoverError):
        weight((1, 2, 3), 1, 3, pi)
    with pytest.raises(NotBelowPiError):
        weight((1, 2, 3), 2, 3, pi)


def _brute_weight(sigma, i, j, pi):
    pos = inverse(pi)
    a, b = sigma[i - 1], sigma[j - 1]
    return 1 + sum(1 for v in sigma[j:] if a < v < b) + sum(
        1 for v in sigma[j:] if pos[b - 1] < pos[v - 1] < pos[a - 1])


def _brute_operators(pi):
    iv = build_interval(pi)
    els = iv.elements
    idx = {w: k for k, w in enumerate(els)}
    d = len(els)
    E = [[0] * d for _ in range(d)]
    F = [[0] * d for _ in range(d)]
    for c, w in enumerate(els):
        n = len(w)
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                t = list(w)
                t[i - 1], t[j - 1] = t[j - 1], t[i - 1]
                t = tuple(t)
                if t in idx and length(t) == length(w) + 1:
                    E[idx[t]][c] = _brute_weight(w, i, j, pi)
                    if j == i + 1:
                        F[c][idx[t]] = i
    H = [[(2 * length(w) - length(pi)) if r == c else 0 for c in range(d)] for r, w in enumerate(els)]
    return iv, E, F, H


@pytest.mark.parametrize("pi", [p for n in range(1, 5) for p in avoiding_132(n)])
def test_operators_match_brute_force(pi):
    iv, E, F, H = _brute_operators(pi)
    assert build_E(iv).to_dense() == E
    assert build_F(iv).to_dense() == F
    assert build_H(iv).to_dense() == H


def test_f_cubed_on_top():
    iv = build_interval(longest_element(3))
    F = build_F(iv)
    top = len(iv) - 1
    assert (F @ F @ F)[0, top] == 6
    iv = build_interval(Permutation([2, 3, 1]))
    F = build_F(iv)
    assert (F @ F)[0, len(iv) - 1] == 2


@pytest.mark.parametrize("pi", [p for n in range(1, 6) for p in avoiding_132(n)])
def test_sl2_relations_small(pi):
    report = verify_sl2(pi)
    assert report.passed, report.to_json()
    assert set(report.relations) == {"HE", "HF", "EF"}


def test_relations_fail_for_wrong_weights():
    # a perturbed E must be caught by the same checks verify_sl2 runs
    iv = build_interval(longest_element(3))
    E, F, H = build_E(iv), build_F(iv), build_H(iv)
    assert commutator(E, F) == H
    E.add_to(len(iv) - 1, len(iv) - 2, 1)
    assert commutator(E, F) != H

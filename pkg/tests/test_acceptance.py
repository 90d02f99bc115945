"""
End-to-end acceptance checks.  Each test records one PASS/FAIL line, shown in
the "acceptance criteria" section at the end of the pytest run.
"""

import random
import time
from math import comb

from bruhat_sl2.diagnostics import (
    diamond_candidates, forbidden_swaps, permutation_path, sign_grid,
)
from bruhat_sl2.orders import build_interval
from bruhat_sl2.perm import Permutation, all_permutations, avoiding_132, avoids_132, inverse
from bruhat_sl2.schubert import (
    chain_sum, delta, macdonald_sum, nabla, pad, principal_specialization, schubert,
)
from bruhat_sl2.sl2 import build_E, build_F, set_A, set_B, verify_sl2
from bruhat_sl2.sperner import BRUTE_FORCE_LIMIT, certify_sperner, k_sperner_bruteforce
from bruhat_sl2.poly import PaddedPolynomial

PI8 = Permutation([5, 6, 7, 3, 2, 4, 1, 8])
SIGMA8 = Permutation([3, 2, 5, 6, 4, 1, 7, 8])


def tops(lo, hi):
    return [pi for n in range(lo, hi + 1) for pi in avoiding_132(n)]


def test_criterion_1_sl2_relations(report):
    start = time.perf_counter()
    all_tops = tops(1, 6)
    failed = [str(pi) for pi in all_tops if not verify_sl2(pi).passed]
    ok = len(all_tops) == 196 and not failed
    report(1, "sl2 relations on every 132-avoiding top, n <= 6", ok,
           f"{len(all_tops)} tops, {len(failed)} failing, {time.perf_counter() - start:.1f}s")
    assert ok, failed[:5]


def test_criterion_2_reference_grid_and_path(report):
    grid = sign_grid(SIGMA8, PI8)
    cells_ok = grid.nonzero() == {
        (2, 4): 1, (2, 6): -1, (2, 7): -1, (3, 0): 1, (4, 7): 1, (7, 0): 1,
    }
    path = permutation_path(SIGMA8, PI8, 7)
    path_ok = (
        path.points == ((3, 4), (2, 5), (5, 1), (6, 2), (4, 6), (1, 7))
        and path.pivot == (7, 3)
    )
    ok = cells_ok and path_ok
    report(2, "sign grid and permutation path reproduction", ok,
           f"grid {'match' if cells_ok else 'mismatch'}, path {'match' if path_ok else 'mismatch'}")
    assert ok


def test_criterion_3_sperner(report):
    start = time.perf_counter()
    small = tops(1, 5)
    sampled = random.Random(20).sample(list(avoiding_132(6)), 20)
    bad = [str(pi) for pi in small + sampled if not certify_sperner(pi).certified]
    brute_checked, brute_bad = 0, []
    for pi in tops(1, 6):
        iv = build_interval(pi)
        if len(iv) > BRUTE_FORCE_LIMIT:
            continue
        sizes = sorted(iv.rank_sizes, reverse=True)
        for k in range(1, len(sizes) + 1):
            if k_sperner_bruteforce(iv, k) != sum(sizes[:k]):
                brute_bad.append((str(pi), k))
        brute_checked += 1
    ok = not bad and not brute_bad
    report(3, "Sperner certificates and k-Sperner brute force", ok,
           f"{len(small) + len(sampled)} certified, {brute_checked} brute-forced intervals, "
           f"{time.perf_counter() - start:.1f}s")
    assert ok, (bad[:5], brute_bad[:5])


def test_criterion_4_three_way_specialization(report):
    start = time.perf_counter()
    mismatches = []
    pairs = 0
    spec = {}
    for n in range(1, 6):
        for sigma in all_permutations(n):
            s = principal_specialization(sigma)
            spec[sigma] = s
            if s != macdonald_sum(sigma):
                mismatches.append(("macdonald", str(sigma)))
        for pi in avoiding_132(n):
            # agreement with spec[sigma] for every pi above sigma is pi-independence
            for sigma in build_interval(pi).elements:
                pairs += 1
                if chain_sum(sigma, pi) != spec[sigma]:
                    mismatches.append(("chain", str(sigma), str(pi)))
    ok = not mismatches
    report(4, "specialization = reduced-word sum = chain sum, n <= 5", ok,
           f"{len(spec)} permutations, {pairs} (sigma, pi) pairs, {time.perf_counter() - start:.1f}s")
    assert ok, mismatches[:5]


def _column_image(op, padded, column):
    out = PaddedPolynomial(padded[0].beta)
    for (r, c), v in op.items():
        if c == column:
            out = out + v * padded[r]
    return out


def test_criterion_5_operator_polynomial_correspondence(report):
    bad = []
    pairs = 0
    for pi in tops(1, 5):
        iv = build_interval(pi)
        padded = [pad(w, pi) for w in iv.elements]
        E, F = build_E(iv), build_F(iv)
        for k, p in enumerate(padded):
            pairs += 1
            if delta(p) != _column_image(E, padded, k):
                bad.append(("delta", str(iv.elements[k]), str(pi)))
            if nabla(p) != _column_image(F, padded, k):
                bad.append(("nabla", str(iv.elements[k]), str(pi)))
    ok = not bad
    report(5, "nabla acts as F and delta as E on padded polynomials, n <= 5", ok, f"{pairs} pairs")
    assert ok, bad[:5]


def test_criterion_6_exactness(report):
    # every factorial division raises InexactDivisionError on a remainder,
    # so completing these sweeps is the tripwire
    for n in range(1, 6):
        for sigma in all_permutations(n):
            macdonald_sum(sigma)
        for pi in avoiding_132(n):
            for sigma in build_interval(pi).elements:
                chain_sum(sigma, pi)
    not_one = [str(s) for s in tops(1, 6) if principal_specialization(s) != 1]
    ok = not not_one
    report(6, "exact divisions; specialization 1 on 132-avoiding permutations, n <= 6", ok,
           f"{len(not_one)} exceptions")
    assert ok, not_one[:5]


def test_criterion_7_structural_invariants(report):
    problems = []
    for pi in tops(1, 6):
        sizes = build_interval(pi).rank_sizes
        if sizes != sizes[::-1]:
            problems.append(f"rank sizes of {pi} not palindromic")
    for n in range(1, 7):
        for w in all_permutations(n):
            if (len(schubert(w)) == 1) != avoids_132(w):
                problems.append(f"monomial test fails at {w}")
    catalan = [comb(2 * n, n) // (n + 1) for n in range(9)]
    for n in range(1, 9):
        if sum(1 for _ in avoiding_132(n)) != catalan[n]:
            problems.append(f"count of 132-avoiding permutations wrong at n={n}")
    for pi in tops(2, 5):
        iv = build_interval(pi)
        pos = inverse(pi)
        for sigma in iv.elements:
            forb = forbidden_swaps(sigma, pi)
            if any(set_A(sigma, i) or set_B(sigma, i, pi) for i in forb):
                problems.append(f"forbidden swap with nonempty A or B at {sigma}, {pi}")
            grid = sign_grid(sigma, pi)
            for j in range(1, len(pi) + 1):
                path = permutation_path(sigma, pi, j)
                if 1 in path.quadrants:
                    problems.append(f"quadrant I visited at {sigma}, {pi}, column {j}")
                for i, ((x0, y0), (x1, y1)) in enumerate(path.steps, start=1):
                    if x1 < x0 and y1 < y0:
                        problems.append(f"down-left step at {sigma}, {pi}, column {j}")
                    if (x1 > x0 and y1 > y0) != (i in forb):
                        problems.append(f"up-right step mismatch at {sigma}, {pi}, column {j}")
                q3 = sum(1 for v in range(1, j) if pos[v - 1] < pos[j - 1])
                if path.quadrant_count(3) != q3:
                    problems.append(f"quadrant III count wrong at {sigma}, {pi}, column {j}")
                k = path.k
                correction = (k - 1) * grid[k - 1, 0] if k > 1 else 0
                if grid.column_sum(j) != q3 - correction:
                    problems.append(f"column sum wrong at {sigma}, {pi}, column {j}")
        for rank in iv.ranks:
            for s in rank:
                for t in rank:
                    if s != t:
                        alphas, betas = diamond_candidates(iv.elements[s], iv.elements[t], pi)
                        if bool(alphas) != bool(betas) or len(alphas) > 1 or len(betas) > 1:
                            problems.append(f"diamond fails at {iv.elements[s]}, {iv.elements[t]}, {pi}")
    ok = not problems
    report(7, "palindromic ranks, monomial test, Catalan counts, grid/path/diamond lemmas", ok,
           f"{len(problems)} problems")
    assert ok, problems[:5]

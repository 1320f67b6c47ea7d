"""Acceptance gate: the eight exit criteria, one pass/fail line each.

Every criterion runs at its stated range with exact comparisons (the one
logarithmic bound carries its stated 1e-9 slack).  Residue-count vectors
for shapes up to size 25 are computed once via the q-hook route and shared
across criteria.
"""

import math
import time

import pytest

from modmaj.characters import mn_character, rect_character
from modmaj.modular import (
    amod_by_character_formula,
    binomial_lower_bound_check,
    dist_check,
    equidistribution_check,
    fl_bound_check,
    fl_log_bound,
    n_cubed_criterion,
    phi_d_check,
    small_dimension_census,
    verify_main_theorem,
    zero_residues,
)
from modmaj.numtheory import (
    divisors,
    ramanujan_matrix_square,
    ramanujan_sum,
    ramanujan_sum_oracle,
)
from modmaj.partitions import (
    DiagOrder,
    Partition,
    capped_excess,
    conjugate,
    diag_compare,
    diagonal_fibers,
    dimension,
    ell_core,
    hook_lengths,
    opposite_hook_lengths,
    partitions_of,
    removable_ribbons,
    staircase_peak,
)
from modmaj.qpoly import amod_by_qhook
from modmaj.tableaux import amod_by_enumeration

P = Partition


def report(number: int, description: str, ok: bool) -> None:
    print(f"[criterion {number}] {description}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} failed: {description}"


@pytest.fixture(scope="module")
def qhook_vectors():
    vectors = {}
    for n in range(1, 26):
        for lam in partitions_of(n):
            vectors[lam] = amod_by_qhook(lam)
    return vectors


def test_criterion_1_classification(qhook_vectors):
    started = time.time()
    verified = verify_main_theorem(25, jobs=2)
    elapsed = time.time() - started
    mismatches = [
        lam for lam, vec in qhook_vectors.items()
        if vec.zero_residues() != zero_residues(lam)
    ]
    ok = verified.ok and not mismatches and elapsed < 120
    report(1, f"zero classification for n <= 25 ({elapsed:.1f}s)", ok)


def test_criterion_2_small_dimension_census():
    started = time.time()
    census = small_dimension_census(33)
    total = sum(census.values())
    elapsed = time.time() - started
    ok = total == 688 and elapsed < 300
    report(2, f"688 shapes with dimension below n^3 for n <= 33 (got {total}, {elapsed:.1f}s)", ok)


def test_criterion_3_three_method_agreement(qhook_vectors):
    agree = True
    for n in range(1, 13):
        shift = math.comb(n, 2)
        for lam in partitions_of(n):
            vec = qhook_vectors[lam]
            agree &= amod_by_enumeration(lam) == vec
            agree &= amod_by_character_formula(lam) == vec
            for r in range(n):
                agree &= vec[r] == vec[math.gcd(n, r) % n]
                agree &= vec[r] == qhook_vectors[conjugate(lam)][(shift - r) % n]
    report(3, "enumeration = q-hook = formula for n <= 12, with gcd and transpose laws", agree)


def test_criterion_4_residue_zero_case(qhook_vectors):
    ok = True
    for n in range(1, 26):
        expected = set()
        if n > 1:
            expected.add((n - 1, 1))
            if n % 2:
                expected.add((2,) + (1,) * (n - 2))
            else:
                expected.add((1,) * n)
        zero_shapes = {
            lam.parts for lam in partitions_of(n) if qhook_vectors[lam][0] == 0
        }
        ok &= zero_shapes == expected
    report(4, "residue-0 vanishing shapes for n <= 25", ok)


def test_criterion_5_character_routes_and_equivalences():
    ok = True
    for n in range(1, 19):
        for lam in partitions_of(n):
            hooks = hook_lengths(lam)
            for ell in divisors(n):
                s = n // ell
                chi = rect_character(lam, ell)
                ok &= chi == mn_character(lam, P((ell,) * s))
                if ell == 1:
                    continue
                conditions = [
                    chi != 0,
                    not ell_core(lam, ell),
                    sum(1 for h in hooks if h % ell == 0) == s,
                    all(
                        sum(1 for h in hooks if h % ell in {a, (-a) % ell})
                        == s * len({a % ell, (-a) % ell})
                        for a in range(ell)
                    ),
                ]
                ok &= len(set(conditions)) == 1
    report(5, "hook-quotient character equals rim-hook recursion for n <= 18, with the nonvanishing equivalences", ok)


def test_criterion_6_bound_suites(qhook_vectors):
    ok = True
    for n in range(1, 26):
        for lam in partitions_of(n):
            vec = qhook_vectors[lam]
            f = dimension(lam)
            ok &= equidistribution_check(lam, vec)
            ok &= dist_check(lam, vec) is not False
            ok &= phi_d_check(lam, 1, vec) is not False
            ok &= phi_d_check(lam, 2, vec) is not False
            ok &= (not n_cubed_criterion(lam)) or not vec.zero_residues()
            ok &= binomial_lower_bound_check(lam)
            for ell in divisors(n):
                ok &= fl_bound_check(lam, ell)
                if n <= 18 and ell > 1:
                    chi = abs(rect_character(lam, ell))
                    if chi:
                        ok &= math.log(chi / f) <= fl_log_bound(n, ell, f) + 1e-9
    report(6, "inequality suites hold exactly (n <= 25; log form n <= 18)", ok)


def test_criterion_7_structural_laws():
    ok = True
    for n in range(1, 26):
        for lam in partitions_of(n):
            hooks = hook_lengths(lam)
            opposite = opposite_hook_lengths(lam)
            hook_product = math.prod(hooks)
            opposite_product = math.prod(opposite)
            ok &= opposite_product >= hook_product
            ok &= (opposite_product == hook_product) == (len(set(lam.parts)) == 1)
            fibers = diagonal_fibers(lam)
            peak = staircase_peak(lam)
            ok &= fibers[:peak] == tuple(range(1, peak + 1))
            tail = (peak,) + fibers[peak:]
            ok &= all(x >= y for x, y in zip(tail, tail[1:]))
            if n <= 20:
                cap = capped_excess(lam)
                hook_shape = P((n - cap,) + (1,) * cap)
                ok &= diag_compare(lam, hook_shape) in (
                    DiagOrder.LESS_OR_EQUAL,
                    DiagOrder.EQUIVALENT,
                )
                for ell in divisors(n):
                    if ell == 1 or ell_core(lam, ell):
                        continue
                    s = n // ell
                    ok &= all(
                        sum(1 for h in hooks if h % ell in {a, (-a) % ell})
                        == s * len({a % ell, (-a) % ell})
                        for a in range(ell)
                    )
            if n <= 16:
                for ell in range(1, n + 1):
                    for step in removable_ribbons(lam, ell):
                        small = hook_lengths(step.shape)
                        for a in range(ell):
                            residues = {a % ell, (-a) % ell}
                            ok &= sum(1 for h in hooks if h % ell in residues) - sum(
                                1 for h in small if h % ell in residues
                            ) == len(residues)
    report(7, "hook-product, fiber, and ribbon-step laws (n <= 25/20/16)", ok)


def test_criterion_8_ramanujan_identities():
    ok = True
    for j in range(1, 61):
        for s in range(-2 * j, 2 * j + 1):
            ok &= ramanujan_sum(j, s) == ramanujan_sum_oracle(j, s)
    for n in range(1, 61):
        square = ramanujan_matrix_square(n)
        for i, row in enumerate(square):
            for j, value in enumerate(row):
                ok &= value == (n if i == j else 0)
    report(8, "Ramanujan sum two-formula agreement (j <= 60) and matrix identity (n <= 60)", ok)

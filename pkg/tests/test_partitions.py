"""Shapes, hooks, ribbons, cores, and the diagonal preorder.

The brute-force oracles live here: hook lengths recounted from the raw
cell set, ribbon removals re-derived from subshape containment plus the
ribbon test, and cores recomputed by greedy removal.
"""

import math
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from modmaj.partitions import (
    DiagOrder,
    Partition,
    beta_numbers,
    capped_excess,
    cells,
    conjugate,
    diag_compare,
    diagonal_excess,
    diagonal_fibers,
    dimension,
    ell_core,
    hook_lengths,
    is_ribbon,
    opposite_hook_lengths,
    partitions_of,
    removable_ribbons,
    staircase_peak,
)

P = Partition


def partition_strategy(max_n=24):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.sampled_from([lam.parts for lam in partitions_of(n)])
    ).map(P)


# ------------------------------------------------------------ construction


def test_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert P(()).n == 0 and not P(())


def test_parse():
    assert P.parse("4,2,1") == P((4, 2, 1))
    assert P.parse("2^3,1") == P((2, 2, 2, 1))
    assert P.parse("5") == P((5,))
    with pytest.raises(ValueError):
        P.parse("1,2")


def test_ordering_is_lexicographic():
    shapes = sorted(partitions_of(5))
    assert [s.parts for s in shapes] == [
        (1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,),
    ]


def test_partition_counts():
    # p(n) for n = 0..12
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    for n, count in enumerate(expected):
        assert sum(1 for _ in partitions_of(n)) == count


# ------------------------------------------------------------ conjugation


@pytest.mark.parametrize(
    "parts,expected",
    [((2, 2), (2, 2)), ((3, 1), (2, 1, 1)), ((5,), (1, 1, 1, 1, 1)), ((), ())],
)
def test_conjugate_values(parts, expected):
    assert conjugate(P(parts)) == P(expected)


@given(partition_strategy())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam


# ------------------------------------------------------------ hooks


def brute_hooks(lam):
    cell_set = set(cells(lam))
    out = []
    for (a, b) in cell_set:
        arm = sum(1 for (x, y) in cell_set if y == b and x >= a)
        leg = sum(1 for (x, y) in cell_set if x == a and y >= b)
        out.append(arm + leg - 1)
    return sorted(out)


@pytest.mark.parametrize(
    "parts,expected",
    [((2, 2), [3, 2, 2, 1]), ((1,), [1]), ((3, 1), [4, 2, 1, 1])],
)
def test_hook_values(parts, expected):
    assert sorted(hook_lengths(P(parts))) == sorted(expected)


def test_hooks_against_cell_count_oracle():
    for n in range(1, 11):
        for lam in partitions_of(n):
            assert sorted(hook_lengths(lam)) == brute_hooks(lam), lam


@pytest.mark.parametrize(
    "parts,expected",
    [((1,), [1]), ((2, 2), [1, 2, 2, 3]), ((3, 1), [1, 2, 3, 2])],
)
def test_opposite_hook_values(parts, expected):
    assert sorted(opposite_hook_lengths(P(parts))) == sorted(expected)


def test_rectangle_hook_multisets_coincide():
    for rows in range(1, 6):
        for width in range(1, 6):
            lam = P((width,) * rows)
            assert sorted(hook_lengths(lam)) == sorted(opposite_hook_lengths(lam))


def test_hook_sums_agree():
    for n in range(1, 26):
        for lam in partitions_of(n):
            assert sum(hook_lengths(lam)) == sum(opposite_hook_lengths(lam)), lam


def test_opposite_product_dominates_with_rectangle_equality():
    for n in range(1, 26):
        for lam in partitions_of(n):
            hp = math.prod(hook_lengths(lam))
            op = math.prod(opposite_hook_lengths(lam))
            assert op >= hp, lam
            is_rect = len(set(lam.parts)) == 1
            assert (op == hp) == is_rect, lam


def test_product_switch_inequality():
    # prod(x_i + y_i) <= prod(x_i + y_{m-i+1}) exhaustively for m <= 6,
    # entries <= 4.  The pairing condition (each index pair has x_i =
    # x_{m-i+1} or y_i = y_{m-i+1}) forces equality; the converse holds
    # only when the aligned product is nonzero, since a shared zero factor
    # can collapse both sides, e.g. x = (1,0,0,0), y = (1,1,0,0).
    for m in range(1, 7):
        seqs = sorted(
            {
                tuple(sorted(combo, reverse=True))
                for combo in combinations_with_replacement(range(5), m)
            }
        )
        for xs in seqs:
            for ys in seqs:
                aligned = math.prod(x + y for x, y in zip(xs, ys))
                crossed = math.prod(x + y for x, y in zip(xs, reversed(ys)))
                assert aligned <= crossed, (xs, ys)
                tight = all(
                    xs[i] == xs[m - 1 - i] or ys[i] == ys[m - 1 - i] for i in range(m)
                )
                if tight:
                    assert aligned == crossed, (xs, ys)
                elif aligned > 0:
                    assert aligned < crossed, (xs, ys)


# ------------------------------------------------------------ dimension


@pytest.mark.parametrize("parts,expected", [((2, 2), 2), ((6, 1), 6), ((1,), 1), ((3, 2), 5)])
def test_dimension_values(parts, expected):
    assert dimension(P(parts)) == expected


# ------------------------------------------------------------ ribbons


def brute_removable_ribbons(lam, ell):
    if lam.n < ell:
        return set()
    out = set()
    for mu in partitions_of(lam.n - ell):
        if lam.contains(mu) and is_ribbon(lam, mu):
            padded_mu = mu.parts + (0,) * (len(lam.parts) - len(mu.parts))
            height = sum(1 for a, b in zip(lam.parts, padded_mu) if a != b) - 1
            out.add((mu.parts, height))
    return out


def test_removable_ribbons_examples():
    steps = removable_ribbons(P((2, 2)), 2)
    assert {(s.shape.parts, s.height) for s in steps} == {((2,), 0), ((1, 1), 1)}
    assert removable_ribbons(P((2, 1)), 2) == []
    steps = removable_ribbons(P((4,)), 4)
    assert [(s.shape.parts, s.height) for s in steps] == [((), 0)]


def test_removable_ribbons_against_subshape_oracle():
    for n in range(1, 13):
        for lam in partitions_of(n):
            for ell in range(1, n + 1):
                produced = {
                    (s.shape.parts, s.height) for s in removable_ribbons(lam, ell)
                }
                assert produced == brute_removable_ribbons(lam, ell), (lam, ell)


def test_is_ribbon():
    assert is_ribbon(P((2, 2)), P((2,)))
    assert not is_ribbon(P((2, 2)), P(()))
    assert not is_ribbon(P((2, 2)), P((2, 2)))
    assert is_ribbon(P((2, 1)), P(()))
    assert is_ribbon(P((3, 3)), P((3, 1)))
    # disconnected skew: (3,1)/(2) leaves cells (3,1) and (1,2)
    assert not is_ribbon(P((3, 1)), P((2,)))
    with pytest.raises(ValueError):
        is_ribbon(P((2, 2)), P((3,)))


# ------------------------------------------------------------ cores


def greedy_core(lam, ell):
    while True:
        steps = removable_ribbons(lam, ell)
        if not steps:
            return lam
        lam = steps[0].shape


def test_core_examples():
    assert ell_core(P((2, 2)), 2) == P(())
    assert ell_core(P((2, 1)), 2) == P((2, 1))
    for n in (1, 3, 6):
        for lam in partitions_of(n):
            assert ell_core(lam, 1) == P(())


def test_core_against_greedy_removal():
    for n in range(1, 17):
        for lam in partitions_of(n):
            for ell in range(1, 7):
                assert ell_core(lam, ell) == greedy_core(lam, ell), (lam, ell)


def test_core_independent_of_removal_order():
    # remove from every possible first step and land on the same core
    for n in range(1, 13):
        for lam in partitions_of(n):
            for ell in range(2, 6):
                cores = {greedy_core(step.shape, ell) for step in removable_ribbons(lam, ell)}
                assert len(cores) <= 1, (lam, ell)


def test_fiber_pair_law():
    # empty ell-core forces balanced hook residue classes: the count of
    # hooks congruent to +-a is (n / ell) * #{a, -a mod ell}
    for n in range(1, 21):
        for lam in partitions_of(n):
            hooks = hook_lengths(lam)
            for ell in range(2, n + 1):
                if n % ell or ell_core(lam, ell):
                    continue
                s = n // ell
                for a in range(ell):
                    residues = {a % ell, (-a) % ell}
                    count = sum(1 for h in hooks if h % ell in residues)
                    assert count == s * len(residues), (lam, ell, a)


def test_ribbon_step_law():
    # removing one length-ell ribbon drops the +-a hook count by exactly
    # #{a, -a mod ell}, for every a
    for n in range(1, 17):
        for lam in partitions_of(n):
            hooks = hook_lengths(lam)
            for ell in range(1, n + 1):
                for step in removable_ribbons(lam, ell):
                    small = hook_lengths(step.shape)
                    for a in range(ell):
                        residues = {a % ell, (-a) % ell}
                        big_count = sum(1 for h in hooks if h % ell in residues)
                        small_count = sum(1 for h in small if h % ell in residues)
                        assert big_count - small_count == len(residues), (lam, ell, a)


# ------------------------------------------------------------ diagonal data


def test_diagonal_fibers_examples():
    assert diagonal_fibers(P((4, 4, 4, 4))) == (1, 2, 3, 4, 3, 2, 1)
    assert diagonal_fibers(P((1,))) == (1,)
    assert diagonal_fibers(P((5, 1, 1))) == (1, 2, 2, 1, 1)


def test_diagonal_excess_examples():
    assert diagonal_excess(P((3, 3))) == 2
    assert diagonal_excess(P((6,))) == 0
    assert diagonal_excess(P((4, 4, 4, 4))) == 9
    assert capped_excess(P((4, 4, 4, 4))) == 7


def test_fibers_unimodal_with_staircase_prefix():
    # fibers climb 1, 2, ..., m and then weakly decrease
    for n in range(1, 26):
        for lam in partitions_of(n):
            fibers = diagonal_fibers(lam)
            m = staircase_peak(lam)
            assert fibers[:m] == tuple(range(1, m + 1)), lam
            tail = (m,) + fibers[m:]
            assert all(x >= y for x, y in zip(tail, tail[1:])), lam


def test_staircase_peak_matches_containment():
    def largest_staircase(lam):
        best = 0
        for m in range(1, len(lam.parts) + 1):
            if all(lam.parts[i] >= m - i for i in range(m)):
                best = m
        return best

    assert staircase_peak(P((4, 4, 4, 4))) == 4
    assert staircase_peak(P((1,))) == 1
    assert staircase_peak(P((5, 1))) == 2
    for n in range(1, 19):
        for lam in partitions_of(n):
            assert staircase_peak(lam) == largest_staircase(lam), lam


def test_diag_compare_examples():
    assert diag_compare(P((3, 1)), P((2, 2))) == DiagOrder.EQUIVALENT
    assert diag_compare(P((2, 1, 1)), P((2, 2))) == DiagOrder.EQUIVALENT
    assert diag_compare(P((1,)), P((1,))) == DiagOrder.EQUIVALENT
    # opposite hooks are transpose-invariant, so conjugates are equivalent
    assert diag_compare(P((1, 1)), P((2,))) == DiagOrder.EQUIVALENT
    assert diag_compare(P((3, 1)), P((4,))) == DiagOrder.LESS_OR_EQUAL
    assert diag_compare(P((4,)), P((3, 1))) == DiagOrder.GREATER_OR_EQUAL
    # (2,2,1) has five cells but none past diagonal 3, (1^4) reaches diagonal 4
    assert diag_compare(P((2, 2, 1)), P((1, 1, 1, 1))) == DiagOrder.INCOMPARABLE


def test_diag_compare_implies_opposite_product_order():
    for n in range(1, 15):
        shapes = list(partitions_of(n))
        for lam in shapes:
            lam_prod = math.prod(opposite_hook_lengths(lam))
            for mu in shapes:
                verdict = diag_compare(lam, mu)
                mu_prod = math.prod(opposite_hook_lengths(mu))
                if verdict in (DiagOrder.LESS_OR_EQUAL, DiagOrder.EQUIVALENT):
                    assert lam_prod <= mu_prod, (lam, mu)
                if verdict in (DiagOrder.GREATER_OR_EQUAL, DiagOrder.EQUIVALENT):
                    assert lam_prod >= mu_prod, (lam, mu)


def test_hook_is_diagonal_maximal():
    # every shape sits below the hook with the same capped excess
    for n in range(1, 21):
        for lam in partitions_of(n):
            cap = capped_excess(lam)
            hook = P((n - cap,) + (1,) * cap)
            assert diag_compare(lam, hook) in (
                DiagOrder.LESS_OR_EQUAL,
                DiagOrder.EQUIVALENT,
            ), lam


def test_binomial_dimension_bound():
    # f >= binom(n, M) / (M+1) for all M up to the capped excess
    for n in range(1, 26):
        for lam in partitions_of(n):
            f = dimension(lam)
            for m in range(capped_excess(lam) + 1):
                assert (m + 1) * f >= math.comb(n, m), (lam, m)


def test_beta_numbers_are_first_column_hooks():
    from modmaj.partitions import hook_length_table

    for n in range(1, 13):
        for lam in partitions_of(n):
            column = [row[0] for row in hook_length_table(lam)]
            assert sorted(beta_numbers(lam), reverse=True) == sorted(column, reverse=True)

"""Character values: rim-hook recursion vs the rectangular fast path."""

import math

import pytest

from modmaj.characters import (
    mn_character,
    rect_character,
    rect_character_magnitude,
    rect_character_sign,
)
from modmaj.numtheory import divisors, ramanujan_sum
from modmaj.partitions import Partition, dimension, ell_core, hook_lengths, partitions_of
from modmaj.qpoly import amod_by_qhook

P = Partition


def rectangular(ell, s):
    return P((ell,) * s)


def test_mn_examples():
    assert mn_character(P((2, 2)), P((1, 1, 1, 1))) == 2
    assert mn_character(P((2, 2)), P((2, 2))) == 2
    for mu in partitions_of(5):
        assert mn_character(P((5,)), mu) == 1
    with pytest.raises(ValueError):
        mn_character(P((2, 2)), P((3,)))


def test_mn_at_identity_is_dimension():
    for n in range(1, 11):
        identity = P((1,) * n)
        for lam in partitions_of(n):
            assert mn_character(lam, identity) == dimension(lam), lam


def test_mn_sign_representation():
    # the column shape carries the sign character
    for n in range(1, 9):
        column = P((1,) * n)
        for mu in partitions_of(n):
            sign = (-1) ** (n - len(mu.parts))
            assert mn_character(column, mu) == sign, mu


def test_rect_magnitude_examples():
    assert rect_character_magnitude(P((2, 2)), 2) == 2
    assert rect_character_magnitude(P((3, 1, 1, 1)), 2) == 2
    # (2,2) is its own 4-core, so the character at the full cycle vanishes
    assert rect_character_magnitude(P((2, 2)), 4) == 0
    with pytest.raises(ValueError):
        rect_character_magnitude(P((2, 2)), 3)


def test_rect_sign_examples():
    assert rect_character_sign(P((2, 2)), 2) == 1
    assert rect_character_sign(P((1, 1)), 2) == -1
    assert rect_character_sign(P((4,)), 4) == 1
    with pytest.raises(ValueError):
        rect_character_sign(P((2, 1)), 2)  # nonempty 2-core


def test_rect_character_examples():
    assert rect_character(P((2, 2)), 2) == 2
    # (2,1) is a single 3-ribbon spanning two rows: chi = -1, empty 3-core
    assert rect_character(P((2, 1)), 3) == -1
    assert ell_core(P((2, 1)), 3) == P(())
    for lam in partitions_of(6):
        assert rect_character(lam, 1) == dimension(lam)


def test_rect_equals_mn_small():
    for n in range(1, 15):
        for lam in partitions_of(n):
            for ell in divisors(n):
                expected = mn_character(lam, rectangular(ell, n // ell))
                assert rect_character(lam, ell) == expected, (lam, ell)


def test_greedy_sign_order_independent():
    for n in range(1, 17):
        for lam in partitions_of(n):
            for ell in divisors(n):
                if ell == 1 or ell_core(lam, ell):
                    continue
                first = rect_character_sign(lam, ell, order="first")
                last = rect_character_sign(lam, ell, order="last")
                assert first == last, (lam, ell)


def test_nonvanishing_equivalences():
    # the four conditions stand or fall together: nonzero character,
    # empty ell-core, exactly n/ell hooks divisible by ell, and the
    # balanced +-a hook residue counts
    for n in range(1, 15):
        for lam in partitions_of(n):
            hooks = hook_lengths(lam)
            for ell in divisors(n):
                if ell == 1:
                    continue
                s = n // ell
                nonzero = rect_character(lam, ell) != 0
                core_empty = not ell_core(lam, ell)
                count_match = sum(1 for h in hooks if h % ell == 0) == s
                balanced = all(
                    sum(1 for h in hooks if h % ell in {a, (-a) % ell})
                    == s * len({a % ell, (-a) % ell})
                    for a in range(ell)
                )
                assert nonzero == core_empty == count_match == balanced, (lam, ell)


def test_linear_relation_with_residue_counts():
    # chi at the rectangular type ((n/s)^s) is the Ramanujan-weighted sum
    # of the residue counts over divisors r of n
    for n in range(1, 15):
        for lam in partitions_of(n):
            vec = amod_by_qhook(lam)
            for s in divisors(n):
                chi = mn_character(lam, rectangular(n // s, s))
                weighted = sum(vec[r] * ramanujan_sum(n // r, s) for r in divisors(n))
                assert chi == weighted, (lam, s)


def test_hook_characters_binomial_and_unimodal():
    # |chi| on hooks (a+1, 1^b) at rectangular types is a binomial
    # coefficient, hence unimodal as the arm grows
    for n in range(2, 25):
        for ell in divisors(n):
            values = []
            for a in range(n):
                lam = P((a + 1,) + (1,) * (n - a - 1))
                magnitude = abs(rect_character(lam, ell))
                assert magnitude == math.comb(n // ell - 1, a // ell), (lam, ell)
                values.append(magnitude)
            rises = [i for i in range(1, n) if values[i] > values[i - 1]]
            falls = [i for i in range(1, n) if values[i] < values[i - 1]]
            assert not rises or not falls or max(rises) < min(falls), (n, ell, values)

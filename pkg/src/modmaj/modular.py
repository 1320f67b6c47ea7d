"""Residue counts by character formula, the vanishing classification, and bounds.

The centerpiece identity: with f the number of standard tableaux of shape
``lam`` (a partition of n) and chi_ell the character at the rectangular
cycle type with cycles of length ell,

    n * a_r  =  f  +  sum over ell | n, ell != 1 of  chi_ell * c_ell(r)

where ``c_ell(r)`` is a Ramanujan sum and ``a_r`` counts tableaux with
major index congruent to r mod n.  Everything stays in integer arithmetic;
divisibility by n is asserted, not assumed.

``expected_zero`` transcribes the classification of the vanishing pairs
(lam, r) as a literal case list, so the exhaustive verifier genuinely
tests that statement rather than a rederivation:

  n > 1 and one of
    lam = (2,2), r in {1,3};  lam = (2,2,2), r in {1,5};  lam = (3,3), r in {2,4};
    lam = (n-1,1), r = 0;
    lam = (2,1^(n-2)), r = 0 for odd n, r = n/2 for even n;
    lam = (n), r in {1,...,n-1};
    lam = (1^n), r in {1,...,n-1} for odd n, everything but n/2 for even n.

The inequality suite at the bottom clears denominators and raises both
sides to integer powers so every comparison except the logarithmic one is
exact; the logarithmic bound carries an explicit 1e-9 slack.
"""

import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Mapping

from .characters import mn_character, rect_character
from .numtheory import divisors, ramanujan_sum, totient
from .partitions import Partition, capped_excess, dimension, partitions_of
from .qpoly import amod_by_qhook
from .tableaux import ModularClassVector


def amod_by_character_formula(lam: Partition) -> ModularClassVector:
    """Residue counts from the character formula, all in exact integers."""
    n = lam.n
    if n < 1:
        raise ValueError("amod_by_character_formula requires a nonempty partition")
    f = dimension(lam)
    chis = {ell: rect_character(lam, ell) for ell in divisors(n) if ell != 1}
    counts = []
    for r in range(n):
        total = f + sum(chi * ramanujan_sum(ell, r) for ell, chi in chis.items())
        if total % n != 0:
            raise ArithmeticError(f"n does not divide the class sum for {lam}, r={r}")
        term = total // n
        if term < 0:
            raise ArithmeticError(f"negative count for {lam}, r={r}")
        counts.append(term)
    return ModularClassVector(n, counts)


@dataclass(frozen=True)
class ClassWeightTable:
    """Integer weight per cycle type plus the order of the inducing subgroup."""

    group_order: int
    weights: Mapping[Partition, int]


def induced_multiplicity(weights: ClassWeightTable, lam: Partition) -> int:
    """Multiplicity of the shape-lam irreducible in the induced module.

    Computes (1/|H|) * sum of weight(mu) * character(lam at mu); the
    division by the group order must be exact and the result nonnegative,
    otherwise the weight table is inconsistent.
    """
    n = lam.n
    for mu in weights.weights:
        if mu.n != n:
            raise ValueError(f"cycle type {mu} does not have size {n}")
    total = sum(
        c * mn_character(lam, mu) for mu, c in weights.weights.items() if c != 0
    )
    if total % weights.group_order != 0:
        raise ArithmeticError(f"group order does not divide the weighted sum for {lam}")
    value = total // weights.group_order
    if value < 0:
        raise ArithmeticError(f"negative multiplicity for {lam}")
    return value


def expected_zero(lam: Partition, r: int) -> bool:
    """The literal case list of vanishing (shape, residue) pairs."""
    return r % lam.n in zero_residues(lam)


def zero_residues(lam: Partition) -> frozenset[int]:
    """All residues the case list predicts to vanish for this shape."""
    n = lam.n
    if n < 1:
        raise ValueError("zero_residues requires a nonempty partition")
    if n == 1:
        return frozenset()
    parts = lam.parts
    out: set[int] = set()
    if parts == (2, 2):
        out |= {1, 3}
    if parts == (2, 2, 2):
        out |= {1, 5}
    if parts == (3, 3):
        out |= {2, 4}
    if parts == (n - 1, 1):
        out.add(0)
    if parts == (2,) + (1,) * (n - 2):
        out.add(0 if n % 2 else n // 2)
    if parts == (n,):
        out |= set(range(1, n))
    if parts == (1,) * n:
        if n % 2:
            out |= set(range(1, n))
        else:
            out |= set(range(n)) - {n // 2}
    return frozenset(out)


@dataclass(frozen=True)
class ExceptionRecord:
    """A shape together with the residues predicted to vanish."""

    shape: Partition
    residues: frozenset[int]


def predicted_exceptions(n: int) -> list[ExceptionRecord]:
    """Every shape of n with a nonempty predicted zero set, in report order."""
    records = []
    for lam in sorted(partitions_of(n)):
        residues = zero_residues(lam)
        if residues:
            records.append(ExceptionRecord(lam, residues))
    return records


@dataclass(frozen=True)
class Mismatch:
    """One shape where computed and predicted zero residues disagree."""

    shape: Partition
    computed: tuple[int, ...]
    predicted: tuple[int, ...]


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of the exhaustive zero-set verification up to n_max."""

    n_max: int
    shapes_checked: int
    mismatches: tuple[Mismatch, ...]
    small_dimension_count: int

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _classification_row(parts: tuple[int, ...]) -> tuple[tuple[int, ...], bool, tuple | None]:
    lam = Partition(parts)
    n = lam.n
    computed = tuple(sorted(amod_by_qhook(lam).zero_residues()))
    predicted = tuple(sorted(zero_residues(lam)))
    small = dimension(lam) < n**3
    mismatch = (parts, computed, predicted) if computed != predicted else None
    return parts, small, mismatch


def parallel_map(
    fn: Callable, items: Iterable, jobs: int = 1, chunksize: int = 16
) -> Iterator:
    """Ordered map over items, optionally through a worker pool."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        yield from map(fn, items)
        return
    with Pool(processes=jobs) as pool:
        yield from pool.imap(fn, items, chunksize=max(1, min(chunksize, len(items) // jobs + 1)))


def verify_classification_at(n: int, jobs: int = 1) -> ClassificationReport:
    """Check computed-vs-predicted zero residues for every shape of one n."""
    shapes = [lam.parts for lam in partitions_of(n)]
    mismatches = []
    small_count = 0
    for _, small, mismatch in parallel_map(_classification_row, shapes, jobs):
        small_count += small
        if mismatch is not None:
            parts, computed, predicted = mismatch
            mismatches.append(Mismatch(Partition(parts), computed, predicted))
    return ClassificationReport(n, len(shapes), tuple(mismatches), small_count)


def verify_main_theorem(n_max: int, jobs: int = 1) -> ClassificationReport:
    """Exhaustively verify the vanishing classification for all n up to n_max.

    The residue counts come from the q-hook route; the report carries any
    mismatches (there should be none) and the census of shapes whose
    tableau count is below n cubed.
    """
    if n_max < 1:
        raise ValueError(f"verify_main_theorem requires n_max >= 1, got {n_max}")
    shapes_checked = 0
    small_count = 0
    mismatches: list[Mismatch] = []
    for n in range(1, n_max + 1):
        report = verify_classification_at(n, jobs)
        shapes_checked += report.shapes_checked
        small_count += report.small_dimension_count
        mismatches.extend(report.mismatches)
    return ClassificationReport(n_max, shapes_checked, tuple(mismatches), small_count)


def small_dimension_census(n_max: int) -> dict[int, int]:
    """Per-n counts of shapes with fewer than n^3 standard tableaux."""
    census = {}
    for n in range(1, n_max + 1):
        census[n] = sum(
            1 for lam in partitions_of(n) if dimension(lam) < n**3
        )
    return census


def _amod(lam: Partition, amod: ModularClassVector | None) -> ModularClassVector:
    return amod_by_character_formula(lam) if amod is None else amod


def equidistribution_check(lam: Partition, amod: ModularClassVector | None = None) -> bool:
    """Every residue count is within 2 n^1.5 / sqrt(f) of uniform, squared exact form."""
    n = lam.n
    f = dimension(lam)
    vec = _amod(lam, amod)
    bound = 4 * n**5 * f * f
    return all((n * a - f) ** 2 * f <= bound for a in vec)


def dist_check(lam: Partition, amod: ModularClassVector | None = None) -> bool | None:
    """Strict 1/n^2 closeness to uniform; None when f is below n^5."""
    n = lam.n
    f = dimension(lam)
    if f < n**5:
        return None
    vec = _amod(lam, amod)
    return all(abs(n * a - f) * n < f for a in vec)


def fl_bound_check(lam: Partition, ell: int) -> bool:
    """Character magnitude bound at the rectangular type, raised to the ell-th power."""
    n = lam.n
    if ell < 1 or n % ell != 0:
        raise ValueError(f"need ell | n, got ell={ell}, n={n}")
    s = n // ell
    chi = abs(rect_character(lam, ell))
    f = dimension(lam)
    return chi**ell * math.factorial(n) <= math.factorial(s) ** ell * ell ** (s * ell) * f


def fl_log_bound(n: int, ell: int, f: int) -> float:
    """Upper bound for ln(|chi| / f) at the rectangular type, via Stirling.

    Contract: for every shape of n with f tableaux and nonzero character,
    ln(|chi| / f) <= fl_log_bound(n, ell, f) + 1e-9.
    """
    if ell < 2 or n % ell != 0:
        raise ValueError(f"need ell | n and ell >= 2, got ell={ell}, n={n}")
    return (
        (1 - 1 / ell) * (0.5 * math.log(n) - math.log(f) + math.log(math.sqrt(2 * math.pi)))
        + ell / (12 * n)
        - 0.5 * math.log(ell)
    )


def phi_d_check(lam: Partition, d: int, amod: ModularClassVector | None = None) -> bool | None:
    """Small normalized characters force 1/n^d closeness to uniform.

    Hypothesis, checked exactly for every ell | n, ell != 1:
    |chi| * n^d * phi(ell) <= f.  When it fails, returns None; when it
    holds, returns whether |a_r / f - 1/n| < 1/n^d for all r (exactly).
    """
    if d not in (1, 2):
        raise ValueError(f"d must be 1 or 2, got {d}")
    n = lam.n
    f = dimension(lam)
    nd = n**d
    for ell in divisors(n):
        if ell == 1:
            continue
        if abs(rect_character(lam, ell)) * nd * totient(ell) > f:
            return None
    vec = _amod(lam, amod)
    return all(abs(n * a - f) * nd < n * f for a in vec)


def n_cubed_criterion(lam: Partition) -> bool:
    """Whether f >= n^3, the sufficient condition for no vanishing residue."""
    return dimension(lam) >= lam.n**3


def binomial_lower_bound_check(lam: Partition) -> bool:
    """f >= binom(n, M) / (M + 1) for every M up to the capped diagonal excess."""
    n = lam.n
    f = dimension(lam)
    cap = capped_excess(lam)
    return all((m + 1) * f >= math.comb(n, m) for m in range(cap + 1))

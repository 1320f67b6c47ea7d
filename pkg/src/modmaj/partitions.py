"""Partition shapes, hooks, rim hooks, cores, and the diagonal preorder.

Conventions, fixed once here and relied on everywhere else:

* French orientation: row 1 is the longest row at the bottom, rows grow
  upward.  A cell is a 1-based pair ``(a, b)`` with ``a`` the column and
  ``b`` the row, so the cell set of ``lam`` is
  ``{(a, b) : 1 <= b <= len(lam), 1 <= a <= lam[b]}``.
* The hook length of a cell is arm + leg - 1 where arm and leg both
  include the cell itself; the opposite hook length of ``(a, b)`` is
  ``a + b - 1`` and grows by one per north or east step.
* Rim hooks (ribbons) are edge-connected skew shapes with no 2x2 block;
  the height of a ribbon is the number of rows it spans minus one.

Rim-hook removal and cores run on beta-numbers (first-column hook
lengths): removing a length-``ell`` ribbon is moving one beta value down
by ``ell`` into an unoccupied slot, and the ribbon's height is the number
of beta values jumped over.  The greedy-removal equivalence is a test
concern, not assumed here.
"""

from enum import Enum
from functools import total_ordering
from math import factorial, prod
from typing import Iterator, NamedTuple


@total_ordering
class Partition:
    """A weakly decreasing tuple of positive parts; the empty partition is allowed.

    Immutable and hashable; ordering is lexicographic on the part tuples,
    which is what report files sort by.
    """

    __slots__ = ("parts", "n")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts
        self.n = sum(parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the one-token text format: "4,2,1", with "2^3,1" meaning (2,2,2,1)."""
        parts = []
        for piece in text.split(","):
            piece = piece.strip()
            if not piece:
                raise ValueError(f"empty component in partition text {text!r}")
            if "^" in piece:
                base, _, count = piece.partition("^")
                parts.extend([int(base)] * int(count))
            else:
                parts.append(int(piece))
        return cls(parts)

    def __repr__(self):
        return f"Partition({self.parts!r})"

    def __str__(self):
        return ",".join(str(p) for p in self.parts) if self.parts else "()"

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Partition):
            return self.parts < other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def contains(self, other: "Partition") -> bool:
        """Cellwise containment: every row of other fits inside the same row of self."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))


class RibbonStep(NamedTuple):
    """One rim-hook removal: the shape left behind and the ribbon's height."""

    shape: Partition
    height: int


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest-first (descending lexicographic order)."""
    if n < 0:
        raise ValueError(f"partitions_of requires n >= 0, got {n}")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield Partition(())
        return
    for parts in rec(n, cap):
        yield Partition(parts)


def cells(lam: Partition) -> Iterator[tuple[int, int]]:
    """All cells (a, b) of the shape, 1-based, row by row from the bottom."""
    for b, row_len in enumerate(lam.parts, start=1):
        for a in range(1, row_len + 1):
            yield (a, b)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the shape: part i of the result is the length of column i."""
    parts = lam.parts
    if not parts:
        return Partition(())
    conj = [0] * parts[0]
    for p in parts:
        for i in range(p):
            conj[i] += 1
    return Partition(conj)


def hook_length_table(lam: Partition) -> list[list[int]]:
    """Hook length of every cell, as rows matching the shape (row 1 first)."""
    conj = conjugate(lam).parts
    return [
        [(row_len - a) + (conj[a] - b) - 1 for a in range(row_len)]
        for b, row_len in enumerate(lam.parts)
    ]


def hook_lengths(lam: Partition) -> list[int]:
    """The multiset of hook lengths, flattened in cell order."""
    return [h for row in hook_length_table(lam) for h in row]


def opposite_hook_length_table(lam: Partition) -> list[list[int]]:
    """Opposite hook length a + b - 1 of every cell, as rows matching the shape."""
    return [
        [a + b + 1 for a in range(row_len)]
        for b, row_len in enumerate(lam.parts)
    ]


def opposite_hook_lengths(lam: Partition) -> list[int]:
    """The multiset of opposite hook lengths, flattened in cell order."""
    return [h for row in opposite_hook_length_table(lam) for h in row]


def dimension(lam: Partition) -> int:
    """Number of standard fillings of the shape, n! over the hook product, exact."""
    if lam.n < 1:
        raise ValueError("dimension requires a nonempty partition")
    numerator = factorial(lam.n)
    hook_product = prod(hook_lengths(lam))
    if numerator % hook_product != 0:
        raise ArithmeticError(f"hook product does not divide n! for {lam}")
    return numerator // hook_product


def beta_numbers(lam: Partition) -> list[int]:
    """First-column hook lengths lam_i + (m - i), strictly decreasing, one per row."""
    m = len(lam.parts)
    return [p + (m - 1 - i) for i, p in enumerate(lam.parts)]


def _partition_from_betas(betas: list[int], m: int) -> Partition:
    betas = sorted(betas, reverse=True)
    parts = [b - (m - 1 - i) for i, b in enumerate(betas)]
    return Partition([p for p in parts if p > 0])


def removable_ribbons(lam: Partition, ell: int) -> list[RibbonStep]:
    """Every way to remove one length-ell rim hook, each with the hook's height.

    A removal moves a beta value x down to x - ell, which must be free and
    nonnegative; the height is the number of beta values strictly between.
    Steps are listed by decreasing x.
    """
    if ell < 1:
        raise ValueError(f"ribbon length must be >= 1, got {ell}")
    betas = beta_numbers(lam)
    occupied = set(betas)
    m = len(betas)
    steps = []
    for i, x in enumerate(betas):
        y = x - ell
        if y < 0 or y in occupied:
            continue
        height = sum(1 for z in betas if y < z < x)
        new_betas = betas[:i] + [y] + betas[i + 1:]
        steps.append(RibbonStep(_partition_from_betas(new_betas, m), height))
    return steps


def ell_core(lam: Partition, ell: int) -> Partition:
    """What is left after removing length-ell rim hooks until none remain.

    Computed on the abacus: within each beta residue class mod ell the
    beads slide down as far as they go.  Order-independence against greedy
    removal is exercised by the tests rather than assumed.
    """
    if ell < 1:
        raise ValueError(f"core length must be >= 1, got {ell}")
    betas = beta_numbers(lam)
    m = len(betas)
    by_residue: dict[int, int] = {}
    for x in betas:
        r = x % ell
        by_residue[r] = by_residue.get(r, 0) + 1
    packed = []
    for r, count in by_residue.items():
        packed.extend(r + ell * k for k in range(count))
    return _partition_from_betas(packed, m)


def is_ribbon(lam: Partition, mu: Partition) -> bool:
    """True when the skew shape lam minus mu is a single rim hook.

    Requires cellwise containment; the skew must be nonempty,
    edge-connected, and contain no 2x2 block.
    """
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    skew = set(cells(lam)) - set(cells(mu))
    if not skew:
        return False
    for (a, b) in skew:
        if {(a + 1, b), (a, b + 1), (a + 1, b + 1)} <= skew:
            return False
    seen = set()
    frontier = [next(iter(skew))]
    while frontier:
        a, b = frontier.pop()
        if (a, b) in seen:
            continue
        seen.add((a, b))
        for nbr in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
            if nbr in skew and nbr not in seen:
                frontier.append(nbr)
    return len(seen) == len(skew)


def max_opposite_hook(lam: Partition) -> int:
    """The largest opposite hook length: max over rows b of lam_b + b - 1."""
    if lam.n < 1:
        raise ValueError("max_opposite_hook requires a nonempty partition")
    return max(p + i for i, p in enumerate(lam.parts))


def diagonal_fibers(lam: Partition) -> tuple[int, ...]:
    """Counts of cells by opposite hook length, up to the last nonzero entry."""
    fibers = [0] * max_opposite_hook(lam)
    for row in opposite_hook_length_table(lam):
        for h in row:
            fibers[h - 1] += 1
    return tuple(fibers)


def diagonal_excess(lam: Partition) -> int:
    """n minus the largest opposite hook length."""
    return lam.n - max_opposite_hook(lam)


def capped_excess(lam: Partition) -> int:
    """The diagonal excess, capped at floor((n - 1) / 2) when it is too large."""
    n = lam.n
    excess = diagonal_excess(lam)
    if 2 * excess + 1 <= n:
        return excess
    return (n - 1) // 2


class DiagOrder(Enum):
    """Verdicts of the diagonal preorder; it is a preorder, so four outcomes."""

    LESS_OR_EQUAL = "less-or-equal"
    GREATER_OR_EQUAL = "greater-or-equal"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


def _tail_counts(lam: Partition, top: int) -> list[int]:
    fibers = diagonal_fibers(lam) if lam.n else ()
    tails = [0] * (top + 1)
    running = 0
    for i in range(top, 0, -1):
        if i <= len(fibers):
            running += fibers[i - 1]
        tails[i] = running
    return tails


def diag_compare(lam: Partition, mu: Partition) -> DiagOrder:
    """Compare two shapes by tail counts of opposite hook lengths."""
    top = max(
        lam.parts[0] + len(lam.parts) - 1 if lam else 0,
        mu.parts[0] + len(mu.parts) - 1 if mu else 0,
    )
    lam_tails = _tail_counts(lam, top)
    mu_tails = _tail_counts(mu, top)
    le = all(x <= y for x, y in zip(lam_tails, mu_tails))
    ge = all(x >= y for x, y in zip(lam_tails, mu_tails))
    if le and ge:
        return DiagOrder.EQUIVALENT
    if le:
        return DiagOrder.LESS_OR_EQUAL
    if ge:
        return DiagOrder.GREATER_OR_EQUAL
    return DiagOrder.INCOMPARABLE


def staircase_peak(lam: Partition) -> int:
    """The unique m where the diagonal fibers stop climbing 1, 2, ..., m.

    Equals the side of the largest staircase shape inside lam.
    """
    fibers = diagonal_fibers(lam)
    m = 0
    for i, count in enumerate(fibers, start=1):
        if count == i:
            m = i
        else:
            break
    return m

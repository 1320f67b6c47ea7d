"""Standard Young tableaux: enumeration, descents, major index, residue counts.

A standard tableau of shape ``lam`` is stored with its rows in French
order (``rows[0]`` is the bottom row, row 1 of the shape).  The entry
``i`` is a descent when ``i + 1`` sits in a strictly higher row; the major
index is the sum of the descents.  This descent convention is pinned by a
test comparing the enumeration histogram with the q-hook generating
polynomial, which the opposite convention fails already at shape (2, 1).

``amod_by_enumeration`` is the brute-force route to the residue counts
(how many tableaux have each value of major index mod n).  It refuses
shapes with more tableaux than its budget; callers are expected to switch
to the generating-polynomial or character-formula routes there.
"""

from typing import Iterator

from .partitions import Partition, conjugate, dimension

DEFAULT_ENUMERATION_BUDGET = 10**7


class EnumerationBudgetExceeded(RuntimeError):
    """Raised when a shape has too many tableaux to enumerate; use another method."""


class ModularClassVector:
    """The length-n vector counting tableaux by major index residue mod n."""

    __slots__ = ("n", "counts")

    def __init__(self, n: int, counts):
        counts = tuple(int(c) for c in counts)
        if n < 1 or len(counts) != n:
            raise ValueError(f"need exactly n={n} counts, got {len(counts)}")
        self.n = n
        self.counts = counts

    def __getitem__(self, r: int) -> int:
        return self.counts[r % self.n]

    def __iter__(self):
        return iter(self.counts)

    def __eq__(self, other):
        if isinstance(other, ModularClassVector):
            return self.n == other.n and self.counts == other.counts
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.counts))

    def __repr__(self):
        return f"ModularClassVector({self.n}, {self.counts!r})"

    def total(self) -> int:
        return sum(self.counts)

    def zero_residues(self) -> frozenset[int]:
        return frozenset(r for r, c in enumerate(self.counts) if c == 0)


class StandardTableau:
    """A standard filling of a partition shape by 1..n, rows bottom-up."""

    __slots__ = ("shape", "rows", "row_of")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        shape = Partition([len(row) for row in rows])
        n = shape.n
        row_of = [-1] * n
        for r, row in enumerate(rows):
            for j, v in enumerate(row):
                if not 1 <= v <= n or row_of[v - 1] != -1:
                    raise ValueError(f"entries must be a bijection onto 1..{n}")
                row_of[v - 1] = r
                if j and row[j - 1] >= v:
                    raise ValueError(f"row {r + 1} is not increasing: {row}")
                if r and rows[r - 1][j] >= v:
                    raise ValueError(f"column {j + 1} is not increasing upward")
        self.shape = shape
        self.rows = rows
        self.row_of = tuple(row_of)

    @property
    def n(self) -> int:
        return self.shape.n

    def __eq__(self, other):
        if isinstance(other, StandardTableau):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"StandardTableau({[list(r) for r in self.rows]!r})"

    def __str__(self):
        width = len(str(self.n))
        return "\n".join(
            " ".join(f"{v:>{width}}" for v in row) for row in reversed(self.rows)
        )


def _row_word_stream(parts: tuple[int, ...]) -> Iterator[list[int]]:
    """Backtracking enumeration of row words; yields a shared buffer.

    ``word[k]`` is the 0-based row receiving entry k+1.  Entry placement in
    row r needs the row below to be strictly longer so far, which is
    exactly column-strictness.  Each tableau appears once, in lexicographic
    order of the row word.
    """
    n = sum(parts)
    m = len(parts)
    filled = [0] * m
    word = [0] * n

    def place(k: int) -> Iterator[list[int]]:
        if k == n:
            yield word
            return
        for r in range(m):
            c = filled[r]
            if c < parts[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                word[k] = r
                yield from place(k + 1)
                filled[r] -= 1

    yield from place(0)


def _tableau_from_row_word(parts: tuple[int, ...], word) -> StandardTableau:
    rows: list[list[int]] = [[] for _ in parts]
    for k, r in enumerate(word, start=1):
        rows[r].append(k)
    return StandardTableau(rows)


def enumerate_syt(lam: Partition) -> Iterator[StandardTableau]:
    """Stream every standard tableau of the shape exactly once."""
    if lam.n < 1:
        raise ValueError("enumerate_syt requires a nonempty partition")
    for word in _row_word_stream(lam.parts):
        yield _tableau_from_row_word(lam.parts, word)


def descent_set(tab: StandardTableau) -> set[int]:
    """Entries i whose successor i + 1 lies in a strictly higher row."""
    row_of = tab.row_of
    return {i for i in range(1, tab.n) if row_of[i] > row_of[i - 1]}


def maj(tab: StandardTableau) -> int:
    """Major index: the sum of the descents."""
    row_of = tab.row_of
    return sum(i for i in range(1, tab.n) if row_of[i] > row_of[i - 1])


def transpose(tab: StandardTableau) -> StandardTableau:
    """The tableau of conjugate shape with rows and columns exchanged."""
    conj = conjugate(tab.shape)
    new_rows: list[list[int]] = [[] for _ in conj.parts]
    for row in tab.rows:
        for j, v in enumerate(row):
            new_rows[j].append(v)
    return StandardTableau(new_rows)


def amod_by_enumeration(
    lam: Partition, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> ModularClassVector:
    """Histogram of major index mod n over all standard tableaux of the shape."""
    n = lam.n
    if n < 1:
        raise ValueError("amod_by_enumeration requires a nonempty partition")
    count = dimension(lam)
    if count > budget:
        raise EnumerationBudgetExceeded(
            f"{lam} has {count} tableaux, above the budget of {budget}"
        )
    counts = [0] * n
    for word in _row_word_stream(lam.parts):
        total = 0
        for i in range(1, n):
            if word[i] > word[i - 1]:
                total += i
        counts[total % n] += 1
    return ModularClassVector(n, counts)

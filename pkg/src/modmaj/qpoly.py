"""Dense integer polynomials in q and the q-hook route to the residue counts.

The generating polynomial of major index over standard tableaux of shape
``lam`` is ``q^d * [n]_q! / prod([h]_q over hooks h)`` where
``d = sum((i - 1) * lam_i)`` and ``[a]_q = 1 + q + ... + q^(a-1)``.  The
quotient is computed exactly over the integers: the factorial product is
built once per n and the hook factors are divided out one long division at
a time, each asserting a zero remainder.  No root of unity is ever
evaluated; reducing mod q^n - 1 is plain exponent folding.

Coefficients are Python ints throughout; they overflow 64 bits well before
the sizes this library sweeps.
"""

from functools import lru_cache

from .partitions import Partition, hook_lengths
from .tableaux import ModularClassVector


class ExactDivisionError(ArithmeticError):
    """A polynomial division that must be exact left a remainder: a logic bug."""


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPolynomial:
    """Dense integer-coefficient polynomial; index = exponent, top coefficient nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([int(c) for c in coeffs])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_text()

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def shifted(self, d: int) -> "IntPolynomial":
        """Multiply by q^d."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * d + self.coeffs)

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def to_text(self) -> str:
        """Report form "c0 + c1*q + c2*q^2 + ..." with zero terms omitted."""
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


def q_int(a: int) -> IntPolynomial:
    """The q-analogue of a: the polynomial with a ones."""
    if a < 1:
        raise ValueError(f"q_int requires a >= 1, got {a}")
    return IntPolynomial((1,) * a)


def multiply(p: IntPolynomial, r: IntPolynomial) -> IntPolynomial:
    """Exact product."""
    if not p.coeffs or not r.coeffs:
        return IntPolynomial(())
    out = [0] * (len(p.coeffs) + len(r.coeffs) - 1)
    for i, ci in enumerate(p.coeffs):
        if ci == 0:
            continue
        for j, cj in enumerate(r.coeffs):
            out[i + j] += ci * cj
    return IntPolynomial(out)


def _divide_by_all_ones(num: list[int], h: int) -> list[int]:
    """Divide by 1 + q + ... + q^(h-1), i.e. by (q^h - 1)/(q - 1).

    Multiplies by q - 1 and then divides by the sparse binomial q^h - 1,
    which costs one addition per coefficient.  The h low-order equations
    that the top-down recurrence does not constrain are verified at the
    end; a violation means the division was not exact.
    """
    top = len(num)
    prod = [0] * (top + 1)
    for i, c in enumerate(num):
        prod[i + 1] += c
        prod[i] -= c
    quot = [0] * (top + 1 - h)
    for i in range(top, h - 1, -1):
        quot[i - h] = prod[i] + (quot[i] if i < len(quot) else 0)
    for i in range(h):
        expect = -quot[i] if i < len(quot) else 0
        if prod[i] != expect:
            raise ExactDivisionError("nonzero remainder in q-integer division")
    return quot


def exact_divide(p: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """Quotient p / d with zero remainder over the integers.

    Any nonzero remainder (or a non-integer quotient coefficient) raises
    ExactDivisionError: for the callers here it means a shape/hook mismatch
    and the computation must abort.
    """
    if not d.coeffs:
        raise ValueError("division by the zero polynomial")
    if not p.coeffs:
        return p
    if all(c == 1 for c in d.coeffs):
        return IntPolynomial(_divide_by_all_ones(list(p.coeffs), len(d.coeffs)))
    if p.degree < d.degree:
        raise ExactDivisionError("degree of dividend below degree of divisor")
    rem = list(p.coeffs)
    lead = d.coeffs[-1]
    quot = [0] * (p.degree - d.degree + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + d.degree]
        if c == 0:
            continue
        if c % lead != 0:
            raise ExactDivisionError("leading coefficient does not divide")
        factor = c // lead
        quot[i] = factor
        for j, dj in enumerate(d.coeffs):
            rem[i + j] -= factor * dj
    if any(rem):
        raise ExactDivisionError("nonzero remainder")
    return IntPolynomial(quot)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPolynomial:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    if n < 0:
        raise ValueError(f"q_factorial requires n >= 0, got {n}")
    if n == 0:
        return IntPolynomial((1,))
    return multiply(q_factorial(n - 1), q_int(n))


def min_major_index(lam: Partition) -> int:
    """sum((i - 1) * lam_i): the smallest major index attained on the shape."""
    return sum(i * p for i, p in enumerate(lam.parts))


def maj_generating_polynomial(lam: Partition) -> IntPolynomial:
    """Coefficient of q^i counts the standard tableaux with major index i."""
    if lam.n < 1:
        raise ValueError("maj_generating_polynomial requires a nonempty partition")
    poly = q_factorial(lam.n).shifted(min_major_index(lam))
    for h in sorted(hook_lengths(lam), reverse=True):
        if h == 1:
            break
        poly = exact_divide(poly, q_int(h))
    return poly


def reduce_mod_qn_minus_1(p: IntPolynomial, n: int) -> IntPolynomial:
    """Fold exponents mod n, summing coefficients; result has degree < n."""
    if n < 1:
        raise ValueError(f"modulus exponent must be >= 1, got {n}")
    folded = [0] * n
    for i, c in enumerate(p.coeffs):
        folded[i % n] += c
    return IntPolynomial(folded)


def amod_by_qhook(lam: Partition) -> ModularClassVector:
    """Residue counts read off the generating polynomial reduced mod q^n - 1."""
    n = lam.n
    folded = reduce_mod_qn_minus_1(maj_generating_polynomial(lam), n)
    return ModularClassVector(n, [folded[r] for r in range(n)])

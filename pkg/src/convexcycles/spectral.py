"""Exact integer characteristic polynomials and coefficient-based counting
of shortest cycles.

char_poly runs the division-free Berkowitz recurrence over Python integers,
so every coefficient is exact at any order.  expand_factored multiplies
binomial powers; large products go through Kronecker substitution (pack the
coefficients into one huge integer, multiply once, unpack), with gmpy2
supplying fast big-integer multiplication when available.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InconsistentInput, InvalidParameter, NotApplicable, ParseError
from .graphs import Graph

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is optional, pure int works
    _mpz = None


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[j] multiplies x**j."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidParameter("a polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        if not 0 <= power <= self.degree:
            return 0
        return self.coeffs[power]

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def to_text(self) -> str:
        """Space-separated exact decimal coefficients, constant first."""
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        try:
            coeffs = tuple(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ParseError(f"non-integer coefficient in {text!r}") from exc
        if not coeffs:
            raise ParseError("empty polynomial text")
        return cls(coeffs)


def char_poly(g: Graph) -> IntPolynomial:
    """det(xI - A) of the adjacency matrix by the Berkowitz recurrence.

    Division-free: only integer multiply/add, hence exact for any order.
    Adjacency entries are 0/1, so the inner vector-matrix steps reduce to
    sums over neighbor lists.
    """
    n = g.n
    if n < 1:
        raise InvalidParameter("characteristic polynomial needs at least one vertex")
    adjacency = g.adjacency
    # coefficients of the leading k-by-k principal submatrix, highest power first
    coeffs = [1, 0]  # diagonal entries are 0: x - a_00 = x
    for k in range(1, n):
        nbrs = [w for w in adjacency[k] if w < k]
        toeplitz = [1, 0]  # 1, -a_kk
        row = [0] * k
        for w in nbrs:
            row[w] = 1
        for step in range(k):
            toeplitz.append(-sum(row[w] for w in nbrs))
            if step == k - 1:
                break
            row = [
                sum(row[w] for w in adjacency[i] if w < k) for i in range(k)
            ]
        new = [0] * (k + 2)
        for i in range(k + 2):
            top = min(i, k)
            acc = 0
            for j in range(max(0, i - k - 1), top + 1):
                t = toeplitz[i - j]
                if t:
                    acc += t * coeffs[j]
            new[i] = acc
        coeffs = new
    return IntPolynomial(tuple(reversed(coeffs)))


def _schoolbook_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return out


def _bigmul(a: int, b: int) -> int:
    if _mpz is not None:
        return int(_mpz(a) * _mpz(b))
    return a * b


def _pack(coeffs: list[int], width: int) -> int:
    buf = b"".join(c.to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(buf, "little")


def _unpack(value: int, width: int, count: int) -> list[int]:
    buf = value.to_bytes(width * count, "little")
    return [
        int.from_bytes(buf[i * width:(i + 1) * width], "little")
        for i in range(count)
    ]


def _kronecker_mul(p: list[int], q: list[int]) -> list[int]:
    """Multiply via integer packing; signs handled by a positive/negative
    split so each packed product stays non-negative slot by slot."""
    bound = sum(abs(c) for c in p) * sum(abs(c) for c in q)
    width = max(1, (bound.bit_length() + 7) // 8)
    p_pos = _pack([c if c > 0 else 0 for c in p], width)
    p_neg = _pack([-c if c < 0 else 0 for c in p], width)
    q_pos = _pack([c if c > 0 else 0 for c in q], width)
    q_neg = _pack([-c if c < 0 else 0 for c in q], width)
    same = _bigmul(p_pos, q_pos) + _bigmul(p_neg, q_neg)
    cross = _bigmul(p_pos, q_neg) + _bigmul(p_neg, q_pos)
    count = len(p) + len(q) - 1
    plus = _unpack(same, width, count)
    minus = _unpack(cross, width, count)
    return [a - b for a, b in zip(plus, minus)]


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    if min(len(p), len(q)) <= 16:
        return _schoolbook_mul(p, q)
    return _kronecker_mul(p, q)


def _binomial_power(root: int, multiplicity: int) -> list[int]:
    """(x - root)**multiplicity as an ascending coefficient list."""
    powers = [1]
    for _ in range(multiplicity):
        powers.append(powers[-1] * -root)
    return [
        comb(multiplicity, j) * powers[multiplicity - j]
        for j in range(multiplicity + 1)
    ]


def expand_factored(factors: list[tuple[int, int]]) -> IntPolynomial:
    """Expand a product of integer-root powers prod (x - a)**k exactly."""
    expanded = []
    for root, multiplicity in factors:
        if multiplicity < 1:
            raise InvalidParameter(
                f"multiplicity must be >= 1, got {multiplicity} for root {root}"
            )
        expanded.append(_binomial_power(root, multiplicity))
    if not expanded:
        return IntPolynomial((1,))
    expanded.sort(key=len)
    acc = expanded[0]
    for poly in expanded[1:]:
        acc = _poly_mul(acc, poly)
    return IntPolynomial(tuple(acc))


def girth_cycle_count_spectral(p: IntPolynomial, n: int, g: int) -> int:
    """Count girth cycles as -c/2, c the coefficient of x**(n-g).

    Valid for odd girth g of an order-n graph whose characteristic
    polynomial is p; a coefficient that is odd, or a non-positive count,
    cannot come from such a graph and raises InconsistentInput.
    """
    if g % 2 == 0:
        raise NotApplicable(f"girth {g} is even")
    if not 3 <= g <= n:
        raise InvalidParameter(f"need 3 <= girth <= n, got girth={g}, n={n}")
    if p.degree != n:
        raise InvalidParameter(f"polynomial degree {p.degree} does not match n={n}")
    c = p.coefficient(n - g)
    if c % 2 != 0:
        raise InconsistentInput(f"coefficient {c} at x^{n - g} is odd")
    count = -c // 2
    if count <= 0:
        raise InconsistentInput(
            f"coefficient {c} at x^{n - g} yields non-positive count {count}"
        )
    return count

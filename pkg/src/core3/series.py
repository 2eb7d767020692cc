"""Truncated formal power series over exact integers.

A series of order N stores the coefficients of q^0 .. q^(N-1) and nothing
else; every operation preserves the order, so a result is trustworthy for
exactly the exponents it carries.  Coefficients are native Python integers:
arithmetic is exact at any magnitude and silent wraparound cannot occur.

All functions here are pure and all series immutable, so concurrent use
needs no synchronisation.
"""

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``coeffs[n]`` of q^n for 0 <= n < order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a truncated series needs order >= 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check_orders(self, other)
        return TruncatedSeries(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-x for x in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} != {b.order}")


def one(order: int) -> TruncatedSeries:
    """The constant series 1."""
    return monomial(order, 0)


def monomial(order: int, exponent: int, coeff: int = 1) -> TruncatedSeries:
    """coeff * q^exponent as a series of the given order."""
    if not 0 <= exponent < order:
        raise ValueError(f"exponent {exponent} outside 0..{order - 1}")
    coeffs = [0] * order
    coeffs[exponent] = coeff
    return TruncatedSeries(tuple(coeffs))


def from_coeffs(values, order: int | None = None) -> TruncatedSeries:
    """Series with the given leading coefficients, zero-padded to ``order``."""
    values = list(values)
    if order is None:
        order = len(values)
    if len(values) > order:
        raise ValueError("more coefficients than the requested order")
    return TruncatedSeries(tuple(values) + (0,) * (order - len(values)))


def _nonzero_terms(s: TruncatedSeries) -> list[tuple[int, int]]:
    return [(i, c) for i, c in enumerate(s.coeffs) if c]


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order.

    Iterates over the nonzero terms of the sparser operand, so products
    against sparse Euler factors stay close to linear in the order.
    """
    _check_orders(a, b)
    n = a.order
    ta = _nonzero_terms(a)
    tb = _nonzero_terms(b)
    if len(ta) > len(tb):
        ta, tb = tb, ta
    out = [0] * n
    for i, ca in ta:
        bound = n - i
        for j, cb in tb:
            if j >= bound:
                break
            out[i + j] += ca * cb
    return TruncatedSeries(tuple(out))


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """The unique series c with mul(b, c) == a to the common order.

    Requires constant term +1 or -1 in b; solves for one coefficient at a
    time, so no intermediate grows beyond the result and divisor terms.
    """
    _check_orders(a, b)
    lead = b.coeffs[0]
    if lead not in (1, -1):
        raise ValueError(f"divisor constant term must be +1 or -1, got {lead}")
    n = a.order
    tail = [(j, c) for j, c in enumerate(b.coeffs) if j > 0 and c]
    out = [0] * n
    for k in range(n):
        acc = a.coeffs[k]
        for j, c in tail:
            if j > k:
                break
            acc -= c * out[k - j]
        out[k] = acc if lead == 1 else -acc
    return TruncatedSeries(tuple(out))


@lru_cache(maxsize=256)
def euler_product(a: int, m: int, order: int) -> TruncatedSeries:
    """Truncation of the infinite product (1-q^a)(1-q^(a+m))(1-q^(a+2m))...

    Only factors whose exponent is below the order are multiplied; the
    omitted ones are congruent to 1 modulo q^order, so the truncation is
    exact.
    """
    if a < 1 or m < 1:
        raise ValueError("need a >= 1 and m >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [0] * order
    coeffs[0] = 1
    e = a
    while e < order:
        # multiply in place by (1 - q^e); descending keeps old values intact
        for i in range(order - 1, e - 1, -1):
            c = coeffs[i - e]
            if c:
                coeffs[i] -= c
        e += m
    return TruncatedSeries(tuple(coeffs))


@lru_cache(maxsize=64)
def core_tuple_series(t: int, k: int, order: int) -> TruncatedSeries:
    """Generating function of ordered k-tuples of t-core partitions.

    Expands (q^t; q^t)^(k*t) / (q; q)^k; the coefficient of q^n counts the
    k-tuples of t-core partitions whose weights sum to n.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    if k < 1:
        raise ValueError("need k >= 1")
    numerator_factor = euler_product(t, t, order)
    result = one(order)
    for _ in range(k * t):
        result = mul(result, numerator_factor)
    denominator_factor = euler_product(1, 1, order)
    for _ in range(k):
        result = div(result, denominator_factor)
    return result


def verify_q_split(order: int) -> bool:
    """Check (q;q) == (q;q^3)(q^2;q^3)(q^3;q^3) to the given order.

    The three factors split the exponents 1, 2, 3, ... by residue mod 3, so
    this must hold identically; a False return means a series bug.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    lhs = euler_product(1, 1, order)
    rhs = mul(mul(euler_product(1, 3, order), euler_product(2, 3, order)),
              euler_product(3, 3, order))
    return lhs == rhs

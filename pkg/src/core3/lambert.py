"""Folded Lambert-sum representations of the 3-core counting series.

The generating functions of 3-core partition counts, pairs, and triples
admit bilateral (all integer index) sum representations coming from the
classical summation formulas of Ramanujan (1psi1) and Bailey (6psi6).
Substituting m -> -m-1 in the negative-index half folds each bilateral sum
into two unilateral ones, which expand into divisor-indexed double sums:

* cores:   sum over m,k >= 0 of  q^((3m+1)(3k+1)) - q^((3m+2)(3k+2)),
           attached to exponent 3n+1;
* pairs:   sum of  m*q^((3m+1)(3k+2)) + (m+1)*q^((3m+2)(3k+1)),
           attached to exponent 3n+2;
* triples: sum over j (j = 1 or 2 mod 3) and k >= 1 of  +-k^2 * q^(j*k),
           attached to exponent n+1 (the k^2 kernel x(1+x)/(1-x)^3).

Each builder enumerates only the lattice points whose exponent stays below
the truncation bound, so the output is exact to its order and the total
work is O(order * log(order)).  This route never touches the Euler-product
engine, making it an independent oracle for the series module.
"""

from .series import TruncatedSeries, div, from_coeffs, monomial, mul, one


def core_series(order: int) -> TruncatedSeries:
    """Series of 3-core partition counts from the folded single-pole sum."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [0] * order
    top = 3 * order - 2  # largest exponent 3n+1 with n < order
    for d in range(1, top + 1, 3):           # d = 3m+1, e = d*(3k+1)
        for e in range(d, top + 1, 3 * d):
            coeffs[(e - 1) // 3] += 1
    for d in range(2, top + 1, 3):           # d = 3m+2, e = d*(3k+2)
        for e in range(2 * d, top + 1, 3 * d):
            coeffs[(e - 1) // 3] -= 1
    return TruncatedSeries(tuple(coeffs))


def pair_series(order: int) -> TruncatedSeries:
    """Series of 3-core pair counts from the folded weighted sum."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [0] * order
    top = 3 * order - 1  # largest exponent 3n+2 with n < order
    m = 1                # the m = 0 term of the first sum contributes 0
    while (3 * m + 1) * 2 <= top:
        d = 3 * m + 1
        for e in range(2 * d, top + 1, 3 * d):   # e = d*(3k+2)
            coeffs[(e - 2) // 3] += m
        m += 1
    m = 0
    while 3 * m + 2 <= top:
        d = 3 * m + 2
        for e in range(d, top + 1, 3 * d):       # e = d*(3k+1)
            coeffs[(e - 2) // 3] += m + 1
        m += 1
    return TruncatedSeries(tuple(coeffs))


def triple_series(order: int) -> TruncatedSeries:
    """Series of 3-core triple counts from the k^2-kernel expansion."""
    if order < 1:
        raise ValueError("order must be >= 1")
    acc = [0] * (order + 1)  # acc[e] collects the coefficient of q^e, e = n+1
    for d in range(1, order + 1, 3):
        for k in range(1, order // d + 1):
            acc[d * k] += k * k
    for d in range(2, order + 1, 3):
        for k in range(1, order // d + 1):
            acc[d * k] -= k * k
    return TruncatedSeries(tuple(acc[1:]))


def pair_fold_cross_term(order: int) -> TruncatedSeries:
    """The residual double sum of the pair fold; identically zero.

    Swapping the two summation indices maps one half onto the other, so
    sum of q^((3m+2)(3k+1)) - q^((3m+1)(3k+2)) cancels term by term.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [0] * order
    for d in range(2, order, 3):
        for e in range(d, order, 3 * d):
            coeffs[e] += 1
    for d in range(1, order, 3):
        for e in range(2 * d, order, 3 * d):
            coeffs[e] -= 1
    return TruncatedSeries(tuple(coeffs))


def square_kernel_check(order: int) -> bool:
    """Check x(1+x)/(1-x)^3 == sum of k^2 x^k through the series engine."""
    if order < 2:
        raise ValueError("order must be >= 2")
    x = monomial(order, 1)
    numerator = mul(x, one(order) + x)
    one_minus_x = from_coeffs((1, -1), order)
    denominator = mul(mul(one_minus_x, one_minus_x), one_minus_x)
    quotient = div(numerator, denominator)
    return all(quotient[k] == k * k for k in range(order))


def tuple_series(k: int, order: int) -> TruncatedSeries:
    """Dispatch to the k-tuple builder, k in {1, 2, 3}."""
    builders = {1: core_series, 2: pair_series, 3: triple_series}
    if k not in builders:
        raise ValueError("k must be 1, 2 or 3")
    return builders[k](order)

"""Integer machinery and the closed-form counters for 3-core partitions.

The three counting functions live here in their divisor/factorization
forms:

* ``core_count(n)``: number of 3-core partitions of n, as the difference
  between divisors of 3n+1 congruent to 1 and to 2 mod 3.
* ``pair_count(n)``: number of ordered pairs of 3-core partitions of total
  weight n, equal to sigma(3n+2)/3.
* ``triple_count(n)``: number of ordered triples, equal to the weighted
  divisor sum f(n+1) evaluated multiplicatively over the factorization.

Factorization uses a smallest-prime-factor sieve (built once, then
read-only) with a trial-division fallback above the sieve limit.
"""

from dataclasses import dataclass
from math import isqrt

DEFAULT_SIEVE_LIMIT = 1_000_000


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers p1^a1 * p2^a2 * ... (p1 < p2 < ...)."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def divisors(self) -> list[int]:
        divs = [1]
        for p, a in self.factors:
            powers = [p**i for i in range(a + 1)]
            divs = [d * pw for d in divs for pw in powers]
        return divs


class SpfSieve:
    """Smallest-prime-factor table for 2..limit; immutable after construction."""

    def __init__(self, limit: int):
        if limit < 2:
            raise ValueError("sieve limit must be >= 2")
        self.limit = limit
        spf = list(range(limit + 1))
        primes = _primes_upto(isqrt(limit))
        # descending order makes the smallest prime the final (winning) write
        for p in reversed(primes):
            start = p * p
            spf[start::p] = [p] * ((limit - start) // p + 1)
        self._spf = spf

    def smallest_prime_factor(self, m: int) -> int:
        if not 2 <= m <= self.limit:
            raise ValueError(f"{m} outside sieve range 2..{self.limit}")
        return self._spf[m]


def _primes_upto(bound: int) -> list[int]:
    if bound < 2:
        return []
    composite = bytearray(bound + 1)
    primes = []
    for p in range(2, bound + 1):
        if not composite[p]:
            primes.append(p)
            composite[p * p::p] = b"\x01" * len(range(p * p, bound + 1, p))
    return primes


_default_sieve: SpfSieve | None = None
_default_limit = DEFAULT_SIEVE_LIMIT


def default_sieve() -> SpfSieve:
    """The lazily built process-wide sieve."""
    global _default_sieve
    if _default_sieve is None or _default_sieve.limit < _default_limit:
        _default_sieve = SpfSieve(_default_limit)
    return _default_sieve


def set_default_sieve_limit(limit: int) -> None:
    """Resize the default sieve (rebuilt lazily on next use)."""
    global _default_sieve, _default_limit
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    _default_limit = limit
    if _default_sieve is not None and _default_sieve.limit < limit:
        _default_sieve = None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def factorize(n: int, sieve: SpfSieve | None = None) -> Factorization:
    """Canonical prime factorization; falls back to trial division past the sieve."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; need n >= 1")
    if n == 1:
        return Factorization(1, ())
    if sieve is None:
        sieve = default_sieve()
    factors = []
    m = n
    if n <= sieve.limit:
        while m > 1:
            p = sieve.smallest_prime_factor(m)
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        return Factorization(n, tuple(factors))
    for p in (2, 3):
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
    d = 5
    while d * d <= m:
        for p in (d, d + 2):
            if m % p == 0:
                a = 0
                while m % p == 0:
                    m //= p
                    a += 1
                factors.append((p, a))
        d += 6
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def sigma(n: int, sieve: SpfSieve | None = None) -> int:
    """Sum of the positive divisors of n."""
    total = 1
    for p, a in factorize(n, sieve).factors:
        total *= (p ** (a + 1) - 1) // (p - 1)
    return total


def divisor_count_mod3(n: int, r: int, sieve: SpfSieve | None = None) -> int:
    """Number of divisors of n congruent to r mod 3 (r must be 1 or 2)."""
    if r not in (1, 2):
        raise ValueError(f"residue must be 1 or 2, got {r}")
    counts = [0, 1, 0]  # counts[s] = divisors built so far with residue s
    for p, a in factorize(n, sieve).factors:
        step = p % 3
        new = [0, 0, 0]
        pm = 1
        for _ in range(a + 1):
            for s in range(3):
                if counts[s]:
                    new[(s * pm) % 3] += counts[s]
            pm = (pm * step) % 3
        counts = new
    return counts[r]


def core_count(n: int, sieve: SpfSieve | None = None) -> int:
    """Number of 3-core partitions of n: d_{1,3}(3n+1) - d_{2,3}(3n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    m = 3 * n + 1
    return divisor_count_mod3(m, 1, sieve) - divisor_count_mod3(m, 2, sieve)


def core_count_product(n: int, sieve: SpfSieve | None = None) -> int:
    """Product form of core_count over the factorization of 3n+1.

    Primes congruent to 1 mod 3 contribute (exponent + 1); a prime
    congruent to 2 mod 3 with odd exponent kills the count.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    result = 1
    for p, a in factorize(3 * n + 1, sieve).factors:
        if p % 3 == 1:
            result *= a + 1
        elif a % 2 == 1:
            return 0
    return result


def pair_count(n: int, sieve: SpfSieve | None = None) -> int:
    """Number of ordered pairs of 3-core partitions of total weight n: sigma(3n+2)/3."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q, rem = divmod(sigma(3 * n + 2, sieve), 3)
    if rem:
        raise ArithmeticError(
            f"sigma(3*{n}+2) not divisible by 3; implementation bug")
    return q


def weighted_divisor_sum(n: int) -> int:
    """f(n) = sum over d | n of chi(d) * (n/d)^2, chi = +1, -1, 0 on d = 1, 2, 0 mod 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            q = n // d
            total += _chi3(d) * q * q
            if q != d:
                total += _chi3(q) * d * d
        d += 1
    return total


def _chi3(d: int) -> int:
    r = d % 3
    if r == 1:
        return 1
    if r == 2:
        return -1
    return 0


def weighted_divisor_sum_prime_power(p: int, k: int) -> int:
    """f at a prime power, by residue of p mod 3; f is multiplicative."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    if p == 3:
        return 3 ** (2 * k)
    if p % 3 == 1:
        return (p ** (2 * (k + 1)) - 1) // (p * p - 1)
    return (p ** (2 * k + 2) + (-1) ** k) // (p * p + 1)


def triple_count(n: int, sieve: SpfSieve | None = None) -> int:
    """Number of ordered triples of 3-core partitions of total weight n: f(n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    result = 1
    for p, a in factorize(n + 1, sieve).factors:
        result *= weighted_divisor_sum_prime_power(p, a)
    return result

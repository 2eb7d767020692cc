"""Brute-force ground truth: partition enumeration and hook-length tests.

Nothing here knows about generating functions or divisor formulas; counts
come straight from the definition (a partition is 3-core when no hook
length of its Young diagram is divisible by 3), which makes this module
the independent oracle for everything else.
"""

from dataclasses import dataclass
from functools import lru_cache

DEFAULT_CAP = 60


class CapExceededError(ValueError):
    """Raised when a brute-force request exceeds the enumeration cap."""


@dataclass(frozen=True)
class Partition:
    """A nonincreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for part in self.parts:
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if prev is not None and part > prev:
                raise ValueError("parts must be nonincreasing")
            prev = part

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(tuple(_conjugate_parts(self.parts)))


def _conjugate_parts(parts: tuple[int, ...]) -> list[int]:
    if not parts:
        return []
    return [sum(1 for row in parts if row > j) for j in range(parts[0])]


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise CapExceededError(f"n={n} exceeds brute-force cap {cap}")


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP):
    """Yield every partition of n exactly once (the empty partition for n=0)."""
    _check_cap(n, cap)
    return (Partition(parts) for parts in _parts(n, n))


def _parts(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _parts(n - first, first):
            yield (first,) + rest


def hook_lengths(partition: Partition) -> list[int]:
    """Hook length (arm + leg + 1) of every cell of the Young diagram."""
    parts = partition.parts
    conj = _conjugate_parts(parts)
    hooks = []
    for i, row in enumerate(parts):
        for j in range(row):
            hooks.append(row - j + conj[j] - i - 1)
    return hooks


def is_t_core(partition: Partition, t: int) -> bool:
    """True when no hook length of the diagram is divisible by t."""
    if t < 2:
        raise ValueError("t must be >= 2")
    parts = partition.parts
    conj = _conjugate_parts(parts)
    for i, row in enumerate(parts):
        for j in range(row):
            if (row - j + conj[j] - i - 1) % t == 0:
                return False
    return True


def brute_core_count(n: int, t: int, cap: int = DEFAULT_CAP) -> int:
    """Number of t-core partitions of n by full enumeration."""
    if t < 2:
        raise ValueError("t must be >= 2")
    _check_cap(n, cap)
    return _core_count_cached(n, t)


@lru_cache(maxsize=None)
def _core_count_cached(n: int, t: int) -> int:
    return sum(1 for parts in _parts(n, n) if is_t_core(Partition(parts), t))


def brute_tuple_count(n: int, t: int, k: int, cap: int = DEFAULT_CAP) -> int:
    """Number of ordered k-tuples of t-core partitions with total weight n.

    Tuples are ordered, so the count is the k-fold convolution of the
    single-partition counts over compositions of n.
    """
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    if t < 2:
        raise ValueError("t must be >= 2")
    _check_cap(n, cap)
    base = [_core_count_cached(m, t) for m in range(n + 1)]
    if k == 1:
        return base[n]
    pairs = [sum(base[i] * base[m - i] for i in range(m + 1)) for m in range(n + 1)]
    if k == 2:
        return pairs[n]
    return sum(base[i] * pairs[n - i] for i in range(n + 1))

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core3.partitions import (
    CapExceededError,
    Partition,
    brute_core_count,
    brute_tuple_count,
    enumerate_partitions,
    hook_lengths,
    is_t_core,
)


@st.composite
def partitions_up_to(draw, max_weight=18):
    n = draw(st.integers(0, max_weight))
    parts = []
    remaining = n
    while remaining:
        bound = min(parts[-1], remaining) if parts else remaining
        part = draw(st.integers(1, bound))
        parts.append(part)
        remaining -= part
    return Partition(tuple(parts))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition((3, 1)).weight == 4
    assert Partition(()).weight == 0


def test_conjugate():
    assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
    assert Partition(()).conjugate() == Partition(())


def test_enumerate_counts():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert sum(1 for _ in enumerate_partitions(4)) == 5
    assert sum(1 for _ in enumerate_partitions(6)) == 11


def test_enumerate_yields_each_once():
    seen = list(enumerate_partitions(7))
    assert len(seen) == len(set(seen))
    assert all(p.weight == 7 for p in seen)


def test_enumerate_cap():
    with pytest.raises(CapExceededError):
        enumerate_partitions(61)
    with pytest.raises(CapExceededError):
        enumerate_partitions(10, cap=9)
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_hook_lengths():
    assert hook_lengths(Partition((1,))) == [1]
    assert sorted(hook_lengths(Partition((2, 1)))) == [1, 1, 3]
    assert sorted(hook_lengths(Partition((3, 2, 1)))) == [1, 1, 1, 3, 3, 5]


@given(partitions_up_to())
def test_hook_count_equals_weight(partition):
    assert len(hook_lengths(partition)) == partition.weight


def test_is_t_core_spot_cases():
    assert is_t_core(Partition(()), 3)
    assert not is_t_core(Partition((2, 1)), 3)
    assert is_t_core(Partition((3, 1)), 3)
    assert sorted(hook_lengths(Partition((3, 1)))) == [1, 1, 2, 4]


@given(partitions_up_to(), st.integers(2, 5))
def test_t_core_conjugation_symmetry(partition, t):
    # the hook multiset is invariant under transposing the diagram
    assert is_t_core(partition, t) == is_t_core(partition.conjugate(), t)


def test_brute_core_count():
    assert brute_core_count(2, 3) == 2
    assert brute_core_count(3, 3) == 0
    assert brute_core_count(3, 2) == 1


def test_brute_tuple_count():
    assert brute_tuple_count(1, 3, 3) == 3
    assert brute_tuple_count(2, 3, 3) == 9
    assert brute_tuple_count(5, 3, 2) == 6


def test_brute_tuple_count_is_ordered_convolution():
    base = [brute_core_count(m, 3) for m in range(7)]
    for n in range(7):
        expected = sum(base[i] * base[n - i] for i in range(n + 1))
        assert brute_tuple_count(n, 3, 2) == expected


def test_brute_validation():
    with pytest.raises(CapExceededError):
        brute_core_count(100, 3)
    with pytest.raises(ValueError):
        brute_tuple_count(5, 3, 4)
    with pytest.raises(ValueError):
        brute_core_count(5, 1)

"""Integer partitions and hook-length combinatorics.

Partitions are plain tuples of weakly decreasing positive integers.  All
enumeration is in reverse lexicographic order, ``(n)`` first and ``(1,)*n``
last; every table in the package indexes partitions in this order.
"""

from functools import cache
from math import factorial


def is_partition(parts: tuple[int, ...]) -> bool:
    if any(p < 1 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


@cache
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)

    result = []
    parts = [n]
    while True:
        result.append(tuple(parts))
        # Find the last part > 1, decrement it and re-fill greedily.
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            break
        rest = len(parts) - i - 1 + 1  # units absorbed plus the decrement
        parts[i] -= 1
        del parts[i + 1:]
        while rest > 0:
            take = min(parts[-1], rest)
            parts.append(take)
            rest -= take
    return tuple(result)


def partition_index(n: int) -> dict[tuple[int, ...], int]:
    return {lam: k for k, lam in enumerate(partitions_of(n))}


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def hook_lengths(lam: tuple[int, ...]) -> list[list[int]]:
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


@cache
def hook_dimension(lam: tuple[int, ...]) -> int:
    """Dimension of the irreducible indexed by lam (hook length formula)."""
    n = sum(lam)
    d = factorial(n)
    for row in hook_lengths(lam):
        for h in row:
            d //= h
    return d


def standard_tableaux_count(lam: tuple[int, ...]) -> int:
    """Count standard Young tableaux of shape lam by brute enumeration.

    Independent of the hook length formula; intended as a test oracle for
    small shapes.
    """
    n = sum(lam)
    if n == 0:
        return 1

    def grow(shape: tuple[int, ...], k: int) -> int:
        if k == n:
            return 1
        total = 0
        for i in range(len(lam)):
            row = shape[i] if i < len(shape) else 0
            if i == 0:
                above = n + 1
            else:
                above = shape[i - 1] if i - 1 < len(shape) else 0
            if row < lam[i] and row < above:
                new = list(shape)
                while len(new) <= i:
                    new.append(0)
                new[i] += 1
                total += grow(tuple(new), k + 1)
        return total

    return grow((), 0)


def centralizer_order(mu: tuple[int, ...]) -> int:
    """Order of the centralizer of a permutation of cycle type mu."""
    z = 1
    mult: dict[int, int] = {}
    for part in mu:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        z *= part**m * factorial(m)
    return z


def add_one_box(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Partitions obtained from lam by adding a single box."""
    out = []
    for i in range(len(lam) + 1):
        row = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i > 0 else None
        if above is None or row < above:
            new = list(lam) + [0] * (i + 1 - len(lam))
            new[i] += 1
            out.append(tuple(p for p in new if p > 0))
    return out


def hooks_of(n: int) -> list[tuple[int, ...]]:
    """Hook-shaped partitions (n - j, 1^j) of n, for j = 0 .. n-1."""
    return [(n - j,) + (1,) * j for j in range(n)]

"""Integer partitions, Young diagrams, hook lengths, and tableau counting.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the unique partition of 0.  Enumeration is reverse-lexicographic so
output order is stable across runs.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .errors import EmptyPartition, InexactDivision, TooLarge
from .polynomial import Poly, divexact
from .qanalog import q_int, q_multinomial

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

SYT_ENUMERATION_LIMIT = 12


def check_partition(shape: Sequence[int]) -> Partition:
    shape = tuple(shape)
    for i, part in enumerate(shape):
        if part < 1:
            raise ValueError(f"partition parts must be positive, got {shape}")
        if i and shape[i - 1] < part:
            raise ValueError(f"partition parts must be weakly decreasing, got {shape}")
    return shape


def _descending_parts(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    return tuple(_descending_parts(n, n))


def partitions_of_length(n: int, k: int) -> tuple[Partition, ...]:
    """Partitions of n with exactly k parts, in the order of partitions_of."""
    if k < 0:
        raise ValueError(f"part count must be nonnegative, got {k}")
    return tuple(shape for shape in partitions_of(n) if len(shape) == k)


def conjugate(shape: Sequence[int]) -> Partition:
    shape = check_partition(shape)
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > j) for j in range(shape[0]))


def hook_lengths(shape: Sequence[int]) -> list[list[int]]:
    """Hook lengths of each diagram cell: arm + leg + 1, row by row."""
    shape = check_partition(shape)
    if not shape:
        raise EmptyPartition("the empty diagram has no cells")
    cols = conjugate(shape)
    return [
        [(row_len - j - 1) + (cols[j] - i - 1) + 1 for j in range(row_len)]
        for i, row_len in enumerate(shape)
    ]


def b_statistic(shape: Sequence[int]) -> int:
    """sum_i (i - 1) * shape_i; the minimal major index of a tableau of this shape."""
    return sum(i * part for i, part in enumerate(check_partition(shape)))


def multiplicities(shape: Sequence[int]) -> dict[int, int]:
    """Map part value -> number of occurrences."""
    counts: dict[int, int] = {}
    for part in shape:
        counts[part] = counts.get(part, 0) + 1
    return counts


def syt_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given shape (hook-length formula)."""
    shape = check_partition(shape)
    if not shape:
        raise EmptyPartition("the empty shape has no tableaux")
    n = sum(shape)
    product = 1
    for row in hook_lengths(shape):
        for h in row:
            product *= h
    count, remainder = divmod(factorial(n), product)
    if remainder:
        raise InexactDivision(f"hook product {product} does not divide {n}!")
    return count


def syt_count_q(shape: Sequence[int], var: str = "q") -> Poly:
    """q-analog of syt_count: q^b(shape) [n]_q! / prod [h(u)]_q, in ``var``.

    Hooks are cancelled against the factorial's {1..n} factors first, so the
    one exact division that remains is between short polynomials.
    """
    shape = check_partition(shape)
    if not shape:
        raise EmptyPartition("the empty shape has no tableaux")
    n = sum(shape)
    surplus = Counter(range(1, n + 1))
    surplus.subtract(h for row in hook_lengths(shape) for h in row)
    numerator = Poly.one()
    denominator = Poly.one()
    for value, count in surplus.items():
        if count > 0:
            numerator = numerator * q_int(value) ** count
        elif count < 0:
            denominator = denominator * q_int(value) ** (-count)
    quotient = divexact(numerator, denominator, "q")
    result = Poly.variable("q", b_statistic(shape)) * quotient
    if var != "q":
        result = result.rename({"q": var})
    return result


def q_eulerian_weight(shape: Sequence[int]) -> Poly:
    """l! [n]_q! / prod_i (m_i! ([i]_q!)^m_i) over the part multiplicities m_i.

    This is the weight a partition carries in the partition-indexed formula
    for the joint (inv, des) distribution over permutations.
    """
    shape = check_partition(shape)
    if not shape:
        raise EmptyPartition("weight of the empty partition is not defined")
    arrangements = factorial(len(shape))
    for mult in multiplicities(shape).values():
        arrangements //= factorial(mult)
    return arrangements * q_multinomial(shape)


def enumerate_standard_tableaux(shape: Sequence[int]) -> list[Tableau]:
    """All standard fillings of the shape, entries 1..n increasing along rows and columns."""
    shape = check_partition(shape)
    n = sum(shape)
    if n > SYT_ENUMERATION_LIMIT:
        raise TooLarge(
            f"refusing to enumerate tableaux with {n} > {SYT_ENUMERATION_LIMIT} cells")
    if not shape:
        return [()]
    results: list[Tableau] = []
    rows: list[list[int]] = [[] for _ in shape]

    def place(value: int) -> None:
        if value > n:
            results.append(tuple(tuple(row) for row in rows))
            return
        for i, row in enumerate(rows):
            if len(row) >= shape[i]:
                continue
            if i and len(rows[i - 1]) <= len(row):
                continue
            row.append(value)
            place(value + 1)
            row.pop()

    place(1)
    return results


def tableau_descents(tableau: Tableau) -> tuple[int, ...]:
    """Entries i whose successor i+1 sits in a strictly lower row."""
    row_of: dict[int, int] = {}
    for i, row in enumerate(tableau):
        for value in row:
            row_of[value] = i
    n = len(row_of)
    return tuple(i for i in range(1, n) if row_of[i + 1] > row_of[i])


def tableau_major_index(tableau: Tableau) -> int:
    return sum(tableau_descents(tableau))

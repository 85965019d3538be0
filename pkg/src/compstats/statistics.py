"""Classical statistics of integer tuples: inversions, descents, maj, comaj.

These apply uniformly to permutations and to compositions (repetitions
allowed).  Positions are 1-based throughout, matching the usual combinatorial
conventions.
"""

from __future__ import annotations

from typing import Sequence


def inversions(seq: Sequence[int]) -> int:
    """Number of pairs i < j with seq[i] > seq[j]."""
    count = 0
    for i in range(len(seq)):
        a = seq[i]
        for j in range(i + 1, len(seq)):
            if a > seq[j]:
                count += 1
    return count


def descent_set(seq: Sequence[int]) -> tuple[int, ...]:
    """1-based positions i with seq[i] > seq[i+1], in increasing order."""
    return tuple(i + 1 for i in range(len(seq) - 1) if seq[i] > seq[i + 1])


def descent_number(seq: Sequence[int]) -> int:
    return len(descent_set(seq))


def major_index(seq: Sequence[int]) -> int:
    """Sum of the descent positions."""
    return sum(descent_set(seq))


def comajor_index(seq: Sequence[int]) -> int:
    """Sum of k - i over descent positions i, where k is the tuple length."""
    k = len(seq)
    return sum(k - i for i in descent_set(seq))

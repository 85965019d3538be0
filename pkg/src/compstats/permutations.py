"""Permutations of {1..k} in one-line notation, their statistics, and the Foata bijection."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Sequence

from . import statistics
from .errors import TooLarge
from .polynomial import Poly, monomial_key

Permutation = tuple[int, ...]

ENUMERATION_LIMIT = 10

STAT_NAMES = ("inv", "des", "maj", "comaj", "imaj", "ides", "icomaj")


def check_permutation(pi: Sequence[int]) -> Permutation:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{len(pi)}")
    return pi


def format_permutation(pi: Sequence[int]) -> str:
    """Digit string for sizes up to 9 (e.g. "6172435"), comma-separated beyond."""
    if len(pi) <= 9:
        return "".join(str(value) for value in pi)
    return ",".join(str(value) for value in pi)


def inverse_permutation(pi: Sequence[int]) -> Permutation:
    """Position map: result[i-1] = j where pi[j-1] = i."""
    pi = check_permutation(pi)
    inverse = [0] * len(pi)
    for position, value in enumerate(pi, start=1):
        inverse[value - 1] = position
    return tuple(inverse)


@dataclass(frozen=True, slots=True)
class PermutationStats:
    inv: int
    des: int
    descent_set: tuple[int, ...]
    maj: int
    comaj: int
    imaj: int
    ides: int
    icomaj: int


def permutation_stats(pi: Sequence[int]) -> PermutationStats:
    """All eight statistics; the i-prefixed ones are taken on the inverse."""
    pi = check_permutation(pi)
    inverse = inverse_permutation(pi)
    descents = statistics.descent_set(pi)
    return PermutationStats(
        inv=statistics.inversions(pi),
        des=len(descents),
        descent_set=descents,
        maj=sum(descents),
        comaj=statistics.comajor_index(pi),
        imaj=statistics.major_index(inverse),
        ides=statistics.descent_number(inverse),
        icomaj=statistics.comajor_index(inverse),
    )


def all_permutations(k: int) -> Iterator[Permutation]:
    """All k! permutations in lexicographic one-line order."""
    if k < 0:
        raise ValueError(f"permutation size must be nonnegative, got {k}")
    if k > ENUMERATION_LIMIT:
        raise TooLarge(f"refusing to enumerate S_{k}; limit is {ENUMERATION_LIMIT}")
    return _itertools_permutations(range(1, k + 1))


def foata(pi: Sequence[int]) -> Permutation:
    """The Foata transform: sends the major index to the inversion number.

    Processing the word left to right, each new letter x splits the prefix
    image into blocks ending at letters smaller (or larger, if the last
    letter exceeds x) than x; every block is cycled one step to the right
    before x is appended.  Beyond maj -> inv, the transform preserves the
    descent set of the inverse permutation.
    """
    pi = check_permutation(pi)
    if len(pi) <= 1:
        return pi
    image = [pi[0]]
    for x in pi[1:]:
        if image[-1] < x:
            splits = [i for i, y in enumerate(image) if y < x]
        else:
            splits = [i for i, y in enumerate(image) if y > x]
        rebuilt: list[int] = []
        start = 0
        for end in splits:
            rebuilt.append(image[end])
            rebuilt.extend(image[start:end])
            start = end + 1
        rebuilt.append(x)
        image = rebuilt
    return tuple(image)


def foata_inverse(pi: Sequence[int]) -> Permutation:
    """Exact inverse of :func:`foata`."""
    word = list(check_permutation(pi))
    tail: list[int] = []
    while len(word) > 1:
        x = word.pop()
        tail.append(x)
        if word[0] < x:
            satisfies = [y < x for y in word]
        else:
            satisfies = [y > x for y in word]
        # blocks start at each satisfying letter; cycle each one step left
        rebuilt: list[int] = []
        block_head: int | None = None
        for y, hit in zip(word, satisfies):
            if hit:
                if block_head is not None:
                    rebuilt.append(block_head)
                block_head = y
            else:
                rebuilt.append(y)
        if block_head is not None:
            rebuilt.append(block_head)
        word = rebuilt
    tail.extend(word)
    return tuple(reversed(tail))


def statistic_distribution(k: int, stats: Sequence[str], variables: Sequence[str]) -> Poly:
    """Joint distribution polynomial sum over S_k of prod var_i^stat_i, by brute force."""
    if k > ENUMERATION_LIMIT:
        raise TooLarge(f"refusing to enumerate S_{k}; limit is {ENUMERATION_LIMIT}")
    if len(stats) != len(variables):
        raise ValueError("need exactly one variable per statistic")
    if len(set(variables)) != len(variables):
        raise ValueError("statistic variables must be distinct")
    for stat in stats:
        if stat not in STAT_NAMES:
            raise ValueError(f"unknown permutation statistic {stat!r}")
    accumulator: dict = {}
    for pi in all_permutations(k):
        record = permutation_stats(pi)
        key = monomial_key({var: getattr(record, stat)
                            for stat, var in zip(stats, variables)})
        accumulator[key] = accumulator.get(key, 0) + 1
    return Poly(accumulator)

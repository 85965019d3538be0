"""Integer compositions, their statistics, and the composition <-> (permutation, partition) bijection.

A composition is a tuple of positive integers; the empty tuple is the unique
composition of 0.  ``compositions_of`` enumerates in colexicographic order so
results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import statistics
from .errors import EmptyComposition, LengthMismatch, TooLarge
from .partitions import Partition, check_partition
from .permutations import Permutation, check_permutation, inverse_permutation
from .polynomial import Poly, Series, monomial_key

Composition = tuple[int, ...]

ENUMERATION_LIMIT = 24

STAT_NAMES = ("sum", "inv", "des", "maj", "comaj")


def check_composition(sigma: Sequence[int]) -> Composition:
    sigma = tuple(sigma)
    if any(part < 1 for part in sigma):
        raise ValueError(f"composition parts must be positive, got {sigma}")
    return sigma


def compositions_of(n: int, k: int) -> Iterator[Composition]:
    """All k-part compositions of n, colexicographically (last part varies slowest)."""
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got ({n}, {k})")
    if n > ENUMERATION_LIMIT:
        raise TooLarge(f"refusing to enumerate compositions of {n} > {ENUMERATION_LIMIT}")

    def build(total: int, parts: int) -> Iterator[Composition]:
        if parts == 0:
            if total == 0:
                yield ()
            return
        for last in range(1, total - parts + 2):
            for prefix in build(total - last, parts - 1):
                yield prefix + (last,)

    return build(n, k)


def all_compositions(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n across every part count (just () for n = 0)."""
    for k in range(0 if n == 0 else 1, n + 1):
        yield from compositions_of(n, k)


def parse_composition(text: str) -> Composition:
    """Parse a comma-separated part list such as "4,2,1,2,1,5,3"."""
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        parts = tuple(int(piece) for piece in stripped.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed composition literal {text!r}") from exc
    return check_composition(parts)


def format_composition(sigma: Sequence[int]) -> str:
    return ",".join(str(part) for part in sigma)


@dataclass(frozen=True, slots=True)
class CompositionStats:
    sum: int
    inv: int
    des: int
    descent_set: tuple[int, ...]
    maj: int
    comaj: int


def composition_stats(sigma: Sequence[int]) -> CompositionStats:
    sigma = check_composition(sigma)
    descents = statistics.descent_set(sigma)
    return CompositionStats(
        sum=sum(sigma),
        inv=statistics.inversions(sigma),
        des=len(descents),
        descent_set=descents,
        maj=sum(descents),
        comaj=statistics.comajor_index(sigma),
    )


def reversed_composition(sigma: Sequence[int]) -> Composition:
    return tuple(reversed(check_composition(sigma)))


def sorting_permutation(sigma: Sequence[int]) -> Permutation:
    """The unique permutation sorting sigma weakly decreasingly, ties by increasing index."""
    sigma = check_composition(sigma)
    if not sigma:
        raise EmptyComposition("the empty composition has no sorting permutation")
    return tuple(sorted(range(1, len(sigma) + 1), key=lambda i: (-sigma[i - 1], i)))


def macmahon_forward(sigma: Sequence[int]) -> tuple[Permutation, Partition]:
    """Map a composition to its (sorting permutation, partition) pair.

    Sorting sigma weakly decreasingly gives mu; subtracting from each mu_j
    the number of descents of the sorting permutation at positions >= j
    yields a partition with |partition| + maj(permutation) = |sigma|.
    """
    sigma = check_composition(sigma)
    if not sigma:
        raise EmptyComposition("the empty composition is not in the bijection's domain")
    pi = sorting_permutation(sigma)
    mu = [sigma[i - 1] for i in pi]
    descents = statistics.descent_set(pi)
    lam = tuple(
        part - sum(1 for d in descents if d >= j)
        for j, part in enumerate(mu, start=1)
    )
    return pi, check_partition(lam)


def macmahon_inverse(pi: Sequence[int], lam: Sequence[int]) -> Composition:
    """Reconstruct the unique composition mapping to (pi, lam).

    Adds back, at position j, the number of descents of pi at positions >= j,
    then undoes the sort by sending position j to pi_j.
    """
    pi = check_permutation(pi)
    lam = check_partition(lam)
    if len(pi) != len(lam):
        raise LengthMismatch(
            f"permutation size {len(pi)} != partition length {len(lam)}")
    descents = statistics.descent_set(pi)
    mu = [
        part + sum(1 for d in descents if d >= j)
        for j, part in enumerate(lam, start=1)
    ]
    inverse = inverse_permutation(pi)
    sigma = tuple(mu[inverse[i] - 1] for i in range(len(pi)))
    if any(part < 1 for part in sigma):
        raise ValueError(f"reconstruction produced nonpositive parts: {sigma}")
    return sigma


def statistic_distribution(k: int, cap: int, stats: Sequence[str],
                           variables: Sequence[str]) -> Series:
    """Joint distribution over all k-part compositions with sum <= cap, by brute force.

    ``stats`` must contain "sum"; its variable becomes the series cap variable.
    """
    if cap > ENUMERATION_LIMIT:
        raise TooLarge(f"cap {cap} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    if len(stats) != len(variables):
        raise ValueError("need exactly one variable per statistic")
    if len(set(variables)) != len(variables):
        raise ValueError("statistic variables must be distinct")
    for stat in stats:
        if stat not in STAT_NAMES:
            raise ValueError(f"unknown composition statistic {stat!r}")
    if "sum" not in stats:
        raise ValueError('the "sum" statistic is required to anchor the truncation')
    if k < 0:
        raise ValueError(f"part count must be nonnegative, got {k}")
    cap_var = variables[list(stats).index("sum")]
    accumulator: dict = {}
    for n in range(k, cap + 1):
        for sigma in compositions_of(n, k):
            record = composition_stats(sigma)
            key = monomial_key({var: getattr(record, stat)
                                for stat, var in zip(stats, variables)})
            accumulator[key] = accumulator.get(key, 0) + 1
    return Series(Poly(accumulator), cap_var, cap)

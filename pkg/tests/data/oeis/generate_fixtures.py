"""Regenerate the vendored b-files by exhaustive enumeration.

The values come from walking every composition of each n and counting
statistics directly, NOT from the closed forms that `compstats.oeis` checks
against them, so the comparison stays a genuine two-route test.  Network
access is deliberately not used; metadata.json records the index conventions
these local files follow.

Run from the repository root:  python tests/data/oeis/generate_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from compstats.compositions import all_compositions, composition_stats, compositions_of

MAX_N = 16
OUT_DIR = Path(__file__).parent


def inversion_triangle(max_n: int) -> list[list[int]]:
    rows = []
    for n in range(1, max_n + 1):
        counts: dict[int, int] = {}
        for sigma in all_compositions(n):
            r = composition_stats(sigma).inv
            counts[r] = counts.get(r, 0) + 1
        rows.append([counts.get(r, 0) for r in range(max(counts) + 1)])
    return rows


def descent_triangle(max_n: int) -> list[list[int]]:
    rows = []
    for n in range(1, max_n + 1):
        counts: dict[int, int] = {}
        for sigma in all_compositions(n):
            r = composition_stats(sigma).des
            counts[r] = counts.get(r, 0) + 1
        rows.append([counts.get(r, 0) for r in range(max(counts) + 1)])
    return rows


def total_inversions(max_n: int) -> list[int]:
    return [
        sum(composition_stats(sigma).inv for sigma in all_compositions(n))
        for n in range(1, max_n + 1)
    ]


def total_inversions_by_k(max_n: int) -> list[list[int]]:
    return [
        [
            sum(composition_stats(sigma).inv for sigma in compositions_of(n, k))
            for k in range(1, n + 1)
        ]
        for n in range(1, max_n + 1)
    ]


def write_bfile(sequence_id: str, values: list[int], comment: str) -> None:
    digits = sequence_id.lstrip("A")
    lines = [f"# {sequence_id}: {comment}",
             f"# generated locally by exhaustive enumeration, n <= {MAX_N}"]
    lines.extend(f"{index} {value}" for index, value in enumerate(values, start=1))
    (OUT_DIR / f"b{digits}.txt").write_text("\n".join(lines) + "\n")


def flatten(rows: list[list[int]]) -> list[int]:
    return [value for row in rows for value in row]


def main() -> None:
    write_bfile("A189052", total_inversions(MAX_N),
                "total inversions over all compositions of n, n >= 1")
    write_bfile("A189073", flatten(total_inversions_by_k(MAX_N)),
                "rows n >= 1: total inversions over k-compositions of n, k = 1..n")
    write_bfile("A189074", flatten(inversion_triangle(MAX_N)),
                "rows n >= 1: compositions of n with r inversions, r = 0..max")
    dc_rows = descent_triangle(MAX_N)
    write_bfile("A238343", flatten(dc_rows),
                "rows n >= 1: compositions of n with r descents, r = 0..max")
    # reversal swaps descents and ascents, so the ascent triangle coincides
    write_bfile("A238344", flatten(dc_rows),
                "rows n >= 1: compositions of n with r ascents, r = 0..max")

    metadata = {
        seq: {
            "quantity": quantity,
            "n_start": 1,
            "offset": 1,
            "max_n": MAX_N,
            "source": "generated by exhaustive enumeration (generate_fixtures.py)",
        }
        for seq, quantity in (
            ("A189052", "ic_total"),
            ("A189073", "ic_total_by_k"),
            ("A189074", "ic_triangle"),
            ("A238343", "dc_triangle"),
            ("A238344", "dc_triangle"),
        )
    }
    (OUT_DIR / "metadata.json").write_text(json.dumps(metadata, indent=2) + "\n")
    print(f"wrote fixtures for {len(metadata)} sequences to {OUT_DIR}")


if __name__ == "__main__":
    main()

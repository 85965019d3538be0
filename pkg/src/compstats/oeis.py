"""OEIS b-file parsing and cross-checks against the composition-count closed forms.

A b-file lists one ``index value`` pair per line, '#' comments ignored.  The
mapping from a sequence id to the quantity computed here, together with the
index offset and triangle reading order, comes from fixture metadata; the
:data:`SEQUENCES` table provides the defaults the vendored fixtures use.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping
from urllib.error import URLError
from urllib.request import urlopen

from .distributions import DistTable, inversion_totals
from .errors import BFileParseError, NetworkUnavailable, UnknownSequence

OEIS_BFILE_URL = "https://oeis.org/{seq}/b{digits}.txt"

# quantity: what the artifact computes for the sequence
#   ic_total      ic(n), total inversions over all compositions of n
#   ic_total_by_k rows n >= 1, entries ic(n, k) for k = 1..n
#   ic_triangle   rows n >= 1, entries ic_r(n) for r = 0..last nonzero r
#   dc_triangle   rows n >= 1, entries dc_r(n) for r = 0..last nonzero r
# offset: b-file index of the first produced term
SEQUENCES: dict[str, dict] = {
    "A189052": {"quantity": "ic_total", "n_start": 1, "offset": 1},
    "A189073": {"quantity": "ic_total_by_k", "n_start": 1, "offset": 1},
    "A189074": {"quantity": "ic_triangle", "n_start": 1, "offset": 1},
    "A238343": {"quantity": "dc_triangle", "n_start": 1, "offset": 1},
    "A238344": {"quantity": "dc_triangle", "n_start": 1, "offset": 1},
}


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    rows: tuple[tuple[int, int], ...]


def parse_bfile(text: str, sequence_id: str = "") -> BFile:
    """Parse b-file text; raises BFileParseError naming the offending line."""
    rows: list[tuple[int, int]] = []
    previous: int | None = None
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        pieces = line.split()
        if len(pieces) != 2:
            raise BFileParseError(
                f"line {line_number}: expected 'index value', got {raw!r}")
        try:
            index, value = int(pieces[0]), int(pieces[1])
        except ValueError:
            raise BFileParseError(
                f"line {line_number}: non-integer field in {raw!r}") from None
        if previous is not None and index <= previous:
            raise BFileParseError(
                f"line {line_number}: index {index} does not increase past {previous}")
        previous = index
        rows.append((index, value))
    return BFile(sequence_id=sequence_id, rows=tuple(rows))


def load_bfile(path: str | Path, sequence_id: str = "") -> BFile:
    path = Path(path)
    if not sequence_id:
        stem = path.name.split(".")[0]
        if stem.startswith("b") and stem[1:].isdigit():
            sequence_id = "A" + stem[1:]
    return parse_bfile(path.read_text(), sequence_id=sequence_id)


def fetch_bfile(sequence_id: str, timeout: float = 30.0) -> BFile:
    """Download a b-file from oeis.org; never used by the test suite."""
    digits = sequence_id.lstrip("A")
    url = OEIS_BFILE_URL.format(seq=sequence_id, digits=digits)
    try:
        with urlopen(url, timeout=timeout) as response:
            text = response.read().decode("utf-8")
    except (URLError, OSError, TimeoutError) as exc:
        raise NetworkUnavailable(f"could not fetch {url}: {exc}") from exc
    return parse_bfile(text, sequence_id=sequence_id)


def load_metadata(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def sequence_terms(sequence_id: str, max_n: int,
                   metadata: Mapping[str, dict] | None = None) -> list[int]:
    """The artifact's values for the sequence, linearized to the b-file order."""
    table = dict(SEQUENCES)
    if metadata:
        table.update(metadata)
    if sequence_id not in table:
        raise UnknownSequence(f"no mapping for sequence {sequence_id!r}")
    meta = table[sequence_id]
    quantity = meta["quantity"]
    n_start = int(meta.get("n_start", 1))
    terms: list[int] = []
    if quantity == "ic_total":
        by_n, _ = inversion_totals(max_n)
        for n in range(n_start, max_n + 1):
            terms.append(by_n[n])
    elif quantity == "ic_total_by_k":
        _, by_nk = inversion_totals(max_n)
        for n in range(n_start, max_n + 1):
            terms.extend(by_nk[(n, k)] for k in range(1, n + 1))
    elif quantity == "ic_triangle":
        dist = DistTable.inversions(max_n)
        for n in range(n_start, max_n + 1):
            terms.extend(dist.row(n))
    elif quantity == "dc_triangle":
        dist = DistTable.descents(max_n)
        for n in range(n_start, max_n + 1):
            terms.extend(dist.row(n))
    else:
        raise UnknownSequence(f"unknown quantity {quantity!r} for {sequence_id}")
    return terms


@dataclass(frozen=True)
class CheckReport:
    sequence_id: str
    terms_checked: int
    agree: bool
    first_mismatch: tuple[int, int, int] | None  # (index, bfile value, computed value)

    def summary(self) -> str:
        if self.agree:
            return (f"{self.sequence_id}: {self.terms_checked} terms checked, "
                    "all agree")
        index, expected, actual = self.first_mismatch
        return (f"{self.sequence_id}: mismatch at index {index}: "
                f"b-file has {expected}, computed {actual} "
                f"({self.terms_checked} terms checked)")


def check_sequence(sequence_id: str, bfile: BFile, max_n: int,
                   metadata: Mapping[str, dict] | None = None) -> CheckReport:
    """Compare the b-file against computed values for all indices both cover."""
    table = dict(SEQUENCES)
    if metadata:
        table.update(metadata)
    if sequence_id not in table:
        raise UnknownSequence(f"no mapping for sequence {sequence_id!r}")
    offset = int(table[sequence_id].get("offset", 1))
    expected = sequence_terms(sequence_id, max_n, metadata)
    checked = 0
    for index, value in bfile.rows:
        position = index - offset
        if position < 0 or position >= len(expected):
            continue
        checked += 1
        if value != expected[position]:
            return CheckReport(sequence_id, checked, False,
                               (index, value, expected[position]))
    return CheckReport(sequence_id, checked, True, None)

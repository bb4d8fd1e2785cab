"""OEIS b-file parsing, formatting, and sequence cross-checking.

A b-file is the OEIS bulk format: one ``index value`` pair per line,
``#`` comment lines and blank lines ignored, indices strictly
increasing.  Fixture copies for the three sequences ship with the
package; a transport hook allows live retrieval without hard-wiring any
network dependency into the library.
"""
from __future__ import annotations

import re
import urllib.request
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .seqcore import SequenceKind, term

OEIS_IDS: dict[SequenceKind, str] = {
    SequenceKind.TRIBONACCI: "A000073",
    SequenceKind.GENERALIZED_LUCAS: "A001644",
    SequenceKind.MINOR_SUM: "A073145",
}

_ID_PATTERN = re.compile(r"\AA\d{6}\Z")


class BFileError(ValueError):
    """Base for malformed b-file content."""


class BFileParseError(BFileError):
    """A line could not be read as two integer tokens."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class BFileStructureError(BFileError):
    """Token-level parsing succeeded but the row structure is invalid."""


class BFileFetchError(RuntimeError):
    """Transport failure while retrieving a b-file."""


@dataclass(frozen=True)
class BFile:
    sequence_id: str
    rows: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CrosscheckReport:
    sequence_id: str
    offset_used: int
    rows_compared: int
    mismatches: tuple[tuple[int, int, int], ...]  # (index, local, bfile)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _check_id(sequence_id: str) -> str:
    if not _ID_PATTERN.match(sequence_id):
        raise ValueError(f"sequence id must match A followed by six digits, got {sequence_id!r}")
    return sequence_id


def parse_bfile(text: str, sequence_id: str) -> BFile:
    """Parse b-file text; raises on malformed lines or bad row structure."""
    _check_id(sequence_id)
    rows: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise BFileParseError(
                f"expected two integer tokens, got {len(tokens)}: {line!r}", line_number
            )
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise BFileParseError(f"non-integer token in {line!r}", line_number) from None
        if rows and index <= rows[-1][0]:
            raise BFileStructureError(
                f"line {line_number}: index {index} does not increase past {rows[-1][0]}"
            )
        rows.append((index, value))
    if not rows:
        raise BFileStructureError("b-file contains no data rows")
    return BFile(sequence_id=sequence_id, rows=tuple(rows))


def format_bfile(kind: SequenceKind, lo: int, hi: int) -> str:
    """Render sequence terms in b-file format; indices must be >= 0."""
    if lo < 0:
        raise ValueError(f"b-file indices must be >= 0, got lo={lo}")
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} exceeds hi={hi}")
    lines = [f"{n} {term(kind, n)}" for n in range(lo, hi + 1)]
    return "\n".join(lines) + "\n"


def crosscheck(kind: SequenceKind, bfile: BFile, max_rows: int) -> CrosscheckReport:
    """Compare b-file rows against locally computed terms, index for index.

    Alignment is by the b-file's own indices (its first index is
    recorded as offset_used), so a file following a different offset
    convention shows up as explicit mismatches, never as silent skew.
    """
    if max_rows < 1:
        raise ValueError(f"max_rows must be >= 1, got {max_rows}")
    selected = bfile.rows[:max_rows]
    mismatches = []
    for index, listed in selected:
        local = term(kind, index)
        if local != listed:
            mismatches.append((index, local, listed))
    return CrosscheckReport(
        sequence_id=bfile.sequence_id,
        offset_used=bfile.rows[0][0],
        rows_compared=len(selected),
        mismatches=tuple(mismatches),
    )


def bundled_fixture_text(sequence_id: str) -> str:
    """Text of the packaged fixture b-file for the given id."""
    _check_id(sequence_id)
    name = f"b{sequence_id[1:]}.txt"
    resource = resources.files("tribokit").joinpath("fixtures").joinpath(name)
    try:
        return resource.read_text(encoding="ascii")
    except FileNotFoundError:
        raise FileNotFoundError(f"no bundled fixture for {sequence_id}") from None


def http_transport(base_url: str = "https://oeis.org") -> Callable[[str], str]:
    """Transport fetching ``<base_url>/<id>/b<digits>.txt``."""

    def fetch(sequence_id: str) -> str:
        url = f"{base_url}/{sequence_id}/b{sequence_id[1:]}.txt"
        with urllib.request.urlopen(url) as response:
            return response.read().decode("utf-8")

    return fetch


def fetch_bfile(sequence_id: str, transport: Callable[[str], str]) -> BFile:
    """Retrieve and parse a b-file through the injected transport."""
    _check_id(sequence_id)
    try:
        text = transport(sequence_id)
    except Exception as exc:
        raise BFileFetchError(f"transport failed for {sequence_id}: {exc}") from exc
    return parse_bfile(text, sequence_id)

"""Branching data for sphere-to-sphere branched covers.

A branch datum is a degree d together with one integer partition of d per
branch point; the parts record the local multiplicities of the cover over
that point.  A candidate datum must satisfy three combinatorial
constraints before any geometric question is asked: every row sums to the
degree, every row actually ramifies (some part is at least 2), and the
total defect sum(part - 1) over all parts equals 2d - 2, which is the
Riemann-Hurwitz count for a degree-d cover of the sphere by the sphere.

Rows are kept with their parts sorted non-increasingly.  Two data that
differ only by reordering rows describe the same cover, so the fully
canonical form additionally sorts the rows themselves; `enumerate_data`
and `parse_datum` emit that form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class DatumParseError(ValueError):
    """Raised by `parse_datum` on malformed input.

    `position` is the 0-based character offset of the offending token when
    the input was the text format, else None.
    """

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


@dataclass(frozen=True)
class Partition:
    """A partition of a positive integer, parts sorted non-increasingly."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int):
                raise TypeError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def defect(self) -> int:
        """sum(part - 1), the ramification this row contributes."""
        return self.size - len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class BranchDatum:
    """A degree together with one partition per branch point.

    The constructor checks only structure (positive degree, at least one
    row); the combinatorial constraints live in `validate_datum` so that
    invalid candidates can still be represented and reported on.
    """

    degree: int
    rows: tuple[Partition, ...]

    def __post_init__(self):
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"degree must be a positive integer, got {self.degree!r}")
        rows = tuple(
            row if isinstance(row, Partition) else Partition(tuple(row))
            for row in self.rows
        )
        if not rows:
            raise ValueError("a branch datum needs at least one row")
        object.__setattr__(self, "rows", rows)

    @property
    def branch_points(self) -> int:
        return len(self.rows)

    def canonical(self) -> "BranchDatum":
        """The same datum with rows sorted lexicographically non-increasing."""
        ordered = tuple(sorted(self.rows, key=lambda r: r.parts, reverse=True))
        return BranchDatum(self.degree, ordered)

    def to_json(self) -> dict:
        return {"degree": self.degree, "rows": [list(r.parts) for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "BranchDatum":
        """Build a datum from {"degree": d, "rows": [[...], ...]}.

        Row order is preserved; use `parse_datum` for the canonical form.
        """
        if not isinstance(obj, dict):
            raise DatumParseError("datum JSON must be an object")
        degree = obj.get("degree")
        rows = obj.get("rows")
        if not isinstance(degree, int) or isinstance(degree, bool):
            raise DatumParseError("datum JSON needs an integer 'degree'")
        if not isinstance(rows, list) or not rows:
            raise DatumParseError("datum JSON needs a non-empty 'rows' list")
        built = []
        for row in rows:
            if not isinstance(row, list) or not row:
                raise DatumParseError("each row must be a non-empty list of integers")
            for p in row:
                if not isinstance(p, int) or isinstance(p, bool):
                    raise DatumParseError(f"parts must be integers, got {p!r}")
                if p < 1:
                    raise DatumParseError(f"parts must be positive, got {p}")
            built.append(Partition(tuple(row)))
        try:
            return cls(degree, tuple(built))
        except ValueError as exc:
            raise DatumParseError(str(exc)) from None

    def __str__(self) -> str:
        return format_datum(self)


@dataclass(frozen=True)
class Violation:
    """One failed validation constraint; `row` is an index or None."""

    constraint: str
    message: str
    row: int | None = None

    def to_json(self) -> dict:
        out = {"constraint": self.constraint, "message": self.message}
        if self.row is not None:
            out["row"] = self.row
        return out


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def total_defect(rows: Iterable) -> int:
    """Total ramification sum(part - 1) over every part of every row."""
    total = 0
    for row in rows:
        parts = row.parts if isinstance(row, Partition) else tuple(row)
        total += sum(p - 1 for p in parts)
    return total


def validate_datum(datum: BranchDatum) -> ValidationReport:
    """Check the three cover constraints and report every violation.

    Constraint ids: "row-sum" (each row is a partition of the degree),
    "has-branching-part" (each row has a part >= 2), "defect" (total
    defect equals 2*degree - 2).
    """
    d = datum.degree
    violations = []
    for i, row in enumerate(datum.rows):
        s = row.size
        if s != d:
            violations.append(
                Violation("row-sum", f"row {i} sums to {s}, expected the degree {d}", i)
            )
        if row.parts[0] < 2:
            violations.append(
                Violation("has-branching-part", f"row {i} has no part >= 2", i)
            )
    t = total_defect(datum.rows)
    if t != 2 * d - 2:
        violations.append(
            Violation("defect", f"total defect {t} differs from 2*degree-2 = {2 * d - 2}")
        )
    return ValidationReport(not violations, tuple(violations))


@lru_cache(maxsize=None)
def _partitions(total: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    # Reverse-lexicographic enumeration, memoized per (sum, max part).
    if total == 0:
        return ((),)
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n as non-increasing tuples, reverse-lex order."""
    if n < 1:
        raise ValueError(f"need a positive integer, got {n}")
    return _partitions(n, n)


def enumerate_data(degree: int, branch_points: int) -> Iterator[BranchDatum]:
    """Yield every valid datum with the given degree and row count.

    Each datum appears exactly once up to reordering rows: the rows come
    out sorted lexicographically non-increasing, parts non-increasing
    within each row.  The stream itself is deterministic.
    """
    if degree < 2:
        raise ValueError(f"degree must be at least 2, got {degree}")
    if branch_points < 1:
        raise ValueError(f"need at least one branch point, got {branch_points}")
    pool = [p for p in partitions_of(degree) if p[0] >= 2]
    defects = [degree - len(p) for p in pool]
    target = 2 * degree - 2
    n = branch_points

    def rec(start: int, left: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        remaining = n - len(acc)
        if remaining == 0:
            if left == 0:
                yield tuple(acc)
            return
        if left < remaining or left > remaining * (degree - 1):
            return
        for i in range(start, len(pool)):
            df = defects[i]
            if df > left - (remaining - 1):
                continue
            acc.append(i)
            yield from rec(i, left - df, acc)
            acc.pop()

    for combo in rec(0, target, []):
        yield BranchDatum(degree, tuple(Partition(pool[i]) for i in combo))


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    # Tokens are (kind, value, offset); kinds: "int", ":", ",", "|".
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif c in ":,|":
            tokens.append((c, c, i))
            i += 1
        else:
            raise DatumParseError(f"unexpected character {c!r}", i)
    return tokens


def parse_datum(text: str) -> BranchDatum:
    """Parse `d: p,p | p,p | ...` or the JSON object form.

    Whitespace is insignificant in the text form.  The result is fully
    canonical: parts sorted within rows and rows sorted.  Text errors
    carry the character offset of the offending token.
    """
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DatumParseError(f"bad JSON: {exc.msg}", exc.pos) from None
        return BranchDatum.from_json(obj).canonical()

    tokens = _tokenize(text)
    if not tokens:
        raise DatumParseError("empty input", 0)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def expect_int(what: str) -> tuple[int, int]:
        nonlocal pos
        tok = peek()
        if tok is None:
            raise DatumParseError(f"expected {what} at end of input", len(text))
        kind, value, offset = tok
        if kind != "int":
            raise DatumParseError(f"expected {what}, got {value!r}", offset)
        pos += 1
        return int(value), offset

    degree, offset = expect_int("a degree")
    if degree < 1:
        raise DatumParseError("degree must be positive", offset)
    tok = peek()
    if tok is None or tok[0] != ":":
        raise DatumParseError("expected ':' after the degree",
                              tok[2] if tok else len(text))
    pos += 1

    rows: list[Partition] = []
    parts: list[int] = []
    while True:
        value, offset = expect_int("a part")
        if value < 1:
            raise DatumParseError("parts must be positive", offset)
        parts.append(value)
        tok = peek()
        if tok is None:
            rows.append(Partition(tuple(parts)))
            break
        kind, value, offset = tok
        if kind == ",":
            pos += 1
        elif kind == "|":
            pos += 1
            rows.append(Partition(tuple(parts)))
            parts = []
        else:
            raise DatumParseError(f"expected ',' or '|', got {value!r}", offset)

    return BranchDatum(degree, tuple(rows)).canonical()


def format_datum(datum: BranchDatum) -> str:
    """Render a datum in the `d: p,p | p,p` text form."""
    rows = " | ".join(str(row) for row in datum.rows)
    return f"{datum.degree}: {rows}"

"""Exhaustive realizability oracle for branch data.

A datum (d, rows) is realizable by a branched self-cover of the sphere
exactly when there are permutations s_1, ..., s_n in S_d whose cycle
types are the rows, whose product s_1 * s_2 * ... * s_n is the identity,
and which generate a transitive subgroup.  This module searches for such
a tuple directly.

Two standard reductions keep the search small.  Realizability is
invariant under conjugating the whole tuple, so one permutation (the
largest conjugacy class among those enumerated) is pinned to a canonical
class representative.  And the product condition determines any one
permutation from the others, so the row with the largest class overall is
never enumerated at all: it is computed from the product equation and
merely checked.  Permutations compose left to right: (p * q)(x) = q(p(x)).
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .branch_data import BranchDatum, Partition, validate_datum

DEFAULT_BUDGET = 10**8

REALIZABLE = "realizable"
UNREALIZABLE = "unrealizable"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..d}; images[i] is the image of i+1."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        d = len(images)
        if sorted(images) != list(range(1, d + 1)):
            raise ValueError(f"not a bijection on 1..{d}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self then other."""
        return Permutation(_mul(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inv(self.images))

    def __str__(self) -> str:
        return format_cycles(self)


@dataclass(frozen=True)
class MonodromyWitness:
    """A realizing tuple: one permutation per row, product the identity."""

    degree: int
    perms: tuple[Permutation, ...]

    def to_json(self) -> dict:
        return {"degree": self.degree, "perms": [format_cycles(p) for p in self.perms]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonodromyWitness":
        degree = int(obj["degree"])
        perms = tuple(parse_cycles(s, degree) for s in obj["perms"])
        return cls(degree, perms)


@dataclass(frozen=True)
class OracleResult:
    """Search outcome: status plus a witness when realizable.

    `nodes` counts the complete candidate tuples examined; a budgeted
    search that runs out reports UNKNOWN, and UNREALIZABLE is only ever
    reported after the whole space was covered.
    """

    status: str
    witness: MonodromyWitness | None = None
    nodes: int = 0


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[x - 1] for x in p)


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def _cycle_type(images: Sequence[int]) -> tuple[int, ...]:
    seen = [False] * len(images)
    parts = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j] - 1
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def _parts_of(t) -> tuple[int, ...]:
    return t.parts if isinstance(t, Partition) else tuple(sorted(t, reverse=True))


def cycle_type(perm: Permutation) -> Partition:
    """Cycle lengths of the permutation as a partition of its degree."""
    return Partition(_cycle_type(perm.images))


def canonical_of_type(t, degree: int) -> Permutation:
    """The representative with cycles on consecutive blocks 1..t1, etc."""
    parts = _parts_of(t)
    if sum(parts) != degree:
        raise ValueError(f"type {parts} does not partition {degree}")
    images = list(range(1, degree + 1))
    start = 1
    for length in parts:
        for offset in range(length - 1):
            images[start - 1 + offset] = start + offset + 1
        images[start + length - 2] = start
        start += length
    return Permutation(tuple(images))


def class_size(t, degree: int) -> int:
    """Order of the conjugacy class: d! / (prod parts * prod mult!)."""
    parts = _parts_of(t)
    if sum(parts) != degree:
        raise ValueError(f"type {parts} does not partition {degree}")
    size = factorial(degree)
    for length, mult in Counter(parts).items():
        size //= length**mult * factorial(mult)
    return size


def _class_images(parts: tuple[int, ...], degree: int) -> Iterator[tuple[int, ...]]:
    # Every permutation of the given cycle type exactly once: the smallest
    # unplaced element leads the next cycle, whose remaining entries run
    # over ordered selections of the unplaced elements.
    counts = Counter(parts)
    lengths = sorted(counts)
    images = list(range(1, degree + 1))
    used = [False] * (degree + 1)

    def rec(placed: int) -> Iterator[tuple[int, ...]]:
        if placed == degree:
            yield tuple(images)
            return
        lead = 1
        while used[lead]:
            lead += 1
        used[lead] = True
        rest = [e for e in range(lead + 1, degree + 1) if not used[e]]
        for length in lengths:
            if counts[length] == 0:
                continue
            counts[length] -= 1
            if length == 1:
                yield from rec(placed + 1)
            else:
                for tail in itertools.permutations(rest, length - 1):
                    for e in tail:
                        used[e] = True
                    images[lead - 1] = tail[0]
                    for a, b in zip(tail, tail[1:]):
                        images[a - 1] = b
                    images[tail[-1] - 1] = lead
                    yield from rec(placed + length)
                    images[lead - 1] = lead
                    for e in tail:
                        images[e - 1] = e
                        used[e] = False
            counts[length] += 1
        used[lead] = False

    yield from rec(0)


def conjugacy_class_iter(t, degree: int) -> Iterator[Permutation]:
    """Every permutation of cycle type t, each exactly once, fixed order."""
    parts = _parts_of(t)
    if sum(parts) != degree:
        raise ValueError(f"type {parts} does not partition {degree}")
    for images in _class_images(parts, degree):
        yield Permutation(images)


def is_transitive(perms: Sequence[Permutation], degree: int) -> bool:
    """Whether the group generated moves 1 onto every point."""
    if degree <= 1:
        return True
    images = [p.images if isinstance(p, Permutation) else tuple(p) for p in perms]
    return _transitive_images(images, degree)


def _transitive_images(images: Sequence[tuple[int, ...]], degree: int) -> bool:
    reached = [False] * (degree + 1)
    reached[1] = True
    stack = [1]
    count = 1
    while stack:
        x = stack.pop()
        for img in images:
            y = img[x - 1]
            if not reached[y]:
                reached[y] = True
                count += 1
                stack.append(y)
    return count == degree


def find_witness(datum: BranchDatum, budget: int | None = DEFAULT_BUDGET) -> OracleResult:
    """Search for a realizing permutation tuple.

    Returns REALIZABLE with the first witness found (the search order is
    deterministic), UNREALIZABLE when the space is exhausted, or UNKNOWN
    when the node budget runs out first.  `budget` of None never stops.
    """
    report = validate_datum(datum)
    if not report.ok:
        problems = "; ".join(v.message for v in report.violations)
        raise ValueError(f"datum fails validation: {problems}")
    d = datum.degree
    rows = [row.parts for row in datum.rows]
    n = len(rows)
    sizes = [class_size(row, d) for row in datum.rows]

    derived = max(range(n), key=lambda i: (sizes[i], i))
    rest = [i for i in range(n) if i != derived]
    pinned = max(rest, key=lambda i: (sizes[i], i))
    enum_positions = [i for i in rest if i != pinned]

    assign: list[tuple[int, ...] | None] = [None] * n
    assign[pinned] = canonical_of_type(datum.rows[pinned], d).images

    nodes = 0
    exhausted = True
    witness: tuple[tuple[int, ...], ...] | None = None

    def evaluate() -> bool:
        # All enumerated slots are filled; solve for the derived slot.
        left = tuple(range(1, d + 1))
        for i in range(derived):
            left = _mul(left, assign[i])
        right = tuple(range(1, d + 1))
        for i in range(derived + 1, n):
            right = _mul(right, assign[i])
        candidate = _mul(_inv(left), _inv(right))
        if _cycle_type(candidate) != rows[derived]:
            return False
        assign[derived] = candidate
        if not _transitive_images([a for a in assign], d):
            assign[derived] = None
            return False
        return True

    def search(k: int) -> bool:
        nonlocal nodes, exhausted
        if k == len(enum_positions):
            nodes += 1
            if budget is not None and nodes > budget:
                exhausted = False
                return False
            return evaluate()
        pos = enum_positions[k]
        for images in _class_images(rows[pos], d):
            assign[pos] = images
            if search(k + 1):
                return True
            if not exhausted:
                return False
        assign[pos] = None
        return False

    if search(0):
        witness = tuple(assign)  # type: ignore[assignment]
    if witness is not None:
        perms = tuple(Permutation(images) for images in witness)
        return OracleResult(REALIZABLE, MonodromyWitness(d, perms), nodes)
    if exhausted:
        return OracleResult(UNREALIZABLE, None, nodes)
    return OracleResult(UNKNOWN, None, nodes)


def verify_witness(datum: BranchDatum, perms: Sequence[Permutation]) -> bool:
    """Check types, identity product, and transitivity independently."""
    d = datum.degree
    perms = tuple(perms)
    if len(perms) != len(datum.rows):
        return False
    if any(p.degree != d for p in perms):
        return False
    for p, row in zip(perms, datum.rows):
        if _cycle_type(p.images) != row.parts:
            return False
    product = tuple(range(1, d + 1))
    for p in perms:
        product = _mul(product, p.images)
    if product != tuple(range(1, d + 1)):
        return False
    return _transitive_images([p.images for p in perms], d)


_CYCLE_TEXT = re.compile(r"^\s*(\(\s*(\d+\s*)*\)\s*)*$")


def format_cycles(perm: Permutation) -> str:
    """Cycle notation like `(1 2)(3 4)`; the identity prints as `()`."""
    cycles = []
    seen = [False] * perm.degree
    for start in range(1, perm.degree + 1):
        if seen[start - 1]:
            continue
        cycle = [start]
        seen[start - 1] = True
        j = perm.images[start - 1]
        while j != start:
            cycle.append(j)
            seen[j - 1] = True
            j = perm.images[j - 1]
        if len(cycle) > 1:
            cycles.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(cycles) if cycles else "()"


def parse_cycles(text: str, degree: int) -> Permutation:
    """Inverse of `format_cycles`; unmentioned points stay fixed."""
    if not _CYCLE_TEXT.match(text):
        raise ValueError(f"bad cycle notation: {text!r}")
    images = list(range(1, degree + 1))
    touched = set()
    for group in re.findall(r"\(([^()]*)\)", text):
        points = [int(tok) for tok in group.split()]
        if not points:
            continue
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} outside 1..{degree}")
            if p in touched:
                raise ValueError(f"point {p} appears twice")
            touched.add(p)
        for a, b in zip(points, points[1:]):
            images[a - 1] = b
        images[points[-1] - 1] = points[0]
    return Permutation(tuple(images))

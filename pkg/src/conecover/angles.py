"""Exact cone-angle arithmetic and the admissibility decision.

Angles are measured in turns: an entry of 1 is a smooth point (cone angle
2*pi), 1/2 is a cone of angle pi, 3/2 a cone of angle 3*pi.  Everything
runs on `fractions.Fraction`; floats are rejected outright so that every
comparison in the decision procedure is exact.

A vector of cone angles admits a spherical cone metric on the sphere
exactly when, after discarding unit entries, one of these holds for the
remaining vector beta of length n:

  EMPTY  nothing is left (the smooth round sphere);
  A      the l1 distance from beta - (1,...,1) to the odd integer
         lattice of Z^n exceeds 1;
  B      n = 2 and the two entries are equal and non-integral;
  C      the distance equals 1, every entry is a positive integer, and
         2*max(beta_i - 1) <= sum(beta_i - 1);
  D      the distance equals 1, the entries mix integers and
         non-integers, and the coaxial sign conditions below have a
         solution.

A single leftover entry never works (a teardrop, or an integer angle
forcing an impossible one-point cover), a non-positive Gauss-Bonnet
margin 2 + sum(beta_i - 1) kills everything, a distance below 1
violates the holonomy constraint, and at distance exactly 1 an
all-non-integral vector of length >= 3 is likewise impossible.

The coaxial conditions for case D: write the non-integral entries first,
beta_1..beta_m, and the integral ones beta_{m+1}..beta_n.  A witness is a
choice of signs eps_i in {+1,-1} with

  k'  = sum(eps_i * beta_i) over i <= m   a non-negative integer,
  k'' = sum(beta_i) over i > m  - n - k' + 2   non-negative and even,

such that, scaling (beta_1,...,beta_m, 1,...,1) with k'+k'' trailing ones
by the inverse of its rational gcd eta into coprime positive integers
b_1..b_{m+k'+k''}, the inequality 2*max(beta_{m+1..n}) <= sum(b_i) holds.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

HALF = Fraction(1, 2)

CASE_EMPTY = "EMPTY"
CASE_A = "A"
CASE_B = "B"
CASE_C = "C"
CASE_D = "D"
CASE_NONE = "NONE"


class AngleParseError(ValueError):
    """Raised on malformed angle text or JSON."""


def _as_rationals(values: Iterable) -> tuple[Fraction, ...]:
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError(f"floating-point value {v!r}: exact rationals only")
        out.append(v if isinstance(v, Fraction) else Fraction(v))
    return tuple(out)


def as_angles(values: Iterable) -> tuple[Fraction, ...]:
    """Coerce to a tuple of positive Fractions, rejecting floats."""
    vals = _as_rationals(values)
    for v in vals:
        if v <= 0:
            raise ValueError(f"cone angles must be positive, got {v}")
    return vals


@dataclass(frozen=True)
class OddLatticeResult:
    """Distance to the nearest odd-sum integer vector, and one such vector."""

    distance: Fraction
    nearest: tuple[int, ...]

    def to_json(self) -> dict:
        return {"distance": str(self.distance), "nearest": list(self.nearest)}


@dataclass(frozen=True)
class CoaxialWitness:
    """A sign assignment satisfying the case-D coaxial conditions.

    `signs` pairs with the non-integral entries in their order of
    appearance; `eta` is the rational gcd of those entries together with
    k'+k'' ones, and `b` the resulting coprime integer vector.
    """

    signs: tuple[int, ...]
    k_prime: int
    k_double_prime: int
    eta: Fraction
    b: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "signs": list(self.signs),
            "k_prime": self.k_prime,
            "k_double_prime": self.k_double_prime,
            "eta": str(self.eta),
            "b": list(self.b),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CoaxialWitness":
        return cls(
            signs=tuple(int(s) for s in obj["signs"]),
            k_prime=int(obj["k_prime"]),
            k_double_prime=int(obj["k_double_prime"]),
            eta=parse_fraction(obj["eta"]),
            b=tuple(int(x) for x in obj["b"]),
        )


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Outcome of `decide_admissible` with the evidence that produced it."""

    admissible: bool
    case: str
    lattice: OddLatticeResult | None = None
    coaxial: CoaxialWitness | None = None
    reason: str | None = None

    def __post_init__(self):
        positive = self.case in (CASE_EMPTY, CASE_A, CASE_B, CASE_C, CASE_D)
        if self.admissible != positive:
            raise ValueError(f"case {self.case} contradicts admissible={self.admissible}")

    def to_json(self) -> dict:
        out: dict = {"admissible": self.admissible, "case": self.case}
        if self.lattice is not None:
            out.update(self.lattice.to_json())
        if self.coaxial is not None:
            out["coaxial_witness"] = self.coaxial.to_json()
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "AdmissibilityVerdict":
        lattice = None
        if "distance" in obj:
            lattice = OddLatticeResult(
                distance=parse_fraction(obj["distance"]),
                nearest=tuple(int(z) for z in obj["nearest"]),
            )
        coaxial = None
        if "coaxial_witness" in obj:
            coaxial = CoaxialWitness.from_json(obj["coaxial_witness"])
        return cls(
            admissible=bool(obj["admissible"]),
            case=str(obj["case"]),
            lattice=lattice,
            coaxial=coaxial,
            reason=obj.get("reason"),
        )


def strip_units(beta: Iterable) -> tuple[Fraction, ...]:
    """Drop entries equal to 1 (smooth points), preserving order."""
    return tuple(b for b in as_angles(beta) if b != 1)


def gauss_bonnet_margin(beta: Iterable) -> Fraction:
    """The area bound 2 + sum(beta_i - 1); a metric needs this positive."""
    vals = as_angles(beta)
    return Fraction(2) + sum((b - 1 for b in vals), Fraction(0))


def l1_distance_to_odd_lattice(x: Iterable) -> OddLatticeResult:
    """l1 distance from a rational vector to the odd-sum integer lattice.

    Round every coordinate to a nearest integer; if the rounded sum is
    already odd that is optimal, otherwise move the single coordinate
    whose parity flip is cheapest (cost 1 - 2f for fractional distance f)
    to its second-nearest integer.  A coordinate sitting exactly between
    two integers flips for free.  Ties break toward the floor and then
    toward the lowest index, so the reported vector is deterministic.
    """
    vals = _as_rationals(x)
    if not vals:
        raise ValueError("need at least one coordinate")
    nearest = []
    fracs = []
    for v in vals:
        fl = math.floor(v)
        fr = v - fl
        if fr <= HALF:
            nearest.append(fl)
            fracs.append(fr)
        else:
            nearest.append(fl + 1)
            fracs.append(1 - fr)
    distance = sum(fracs, Fraction(0))
    if sum(nearest) % 2 == 0:
        i = min(range(len(vals)), key=lambda j: (1 - 2 * fracs[j], j))
        distance += 1 - 2 * fracs[i]
        fl = math.floor(vals[i])
        nearest[i] = fl + 1 if vals[i] - fl <= HALF else fl
    return OddLatticeResult(distance=distance, nearest=tuple(nearest))


def rational_gcd(values: Iterable) -> Fraction:
    """Largest rational dividing every value into an integer.

    Equals gcd(numerators) / lcm(denominators) for reduced fractions.
    """
    vals = _as_rationals(values)
    if not vals:
        raise ValueError("need at least one value")
    if any(v <= 0 for v in vals):
        raise ValueError("values must be positive")
    num = 0
    den = 1
    for v in vals:
        num = math.gcd(num, v.numerator)
        den = math.lcm(den, v.denominator)
    return Fraction(num, den)


def coaxial_check(beta: Sequence[Fraction]) -> CoaxialWitness | None:
    """Search sign assignments for the case-D coaxial conditions.

    Expects a unit-free vector mixing integral and non-integral entries
    whose shifted distance to the odd lattice is 1 (the caller checks the
    distance).  Signs are tried with +1 before -1 in lexicographic order,
    so the first witness found is deterministic.
    """
    vals = as_angles(beta)
    nonint = [b for b in vals if b.denominator != 1]
    ints = [b for b in vals if b.denominator == 1]
    if not nonint or not ints:
        raise ValueError("need both integral and non-integral entries")
    n = len(vals)
    int_sum = sum(ints)
    int_max = max(ints)
    for signs in itertools.product((1, -1), repeat=len(nonint)):
        k_prime = sum(s * b for s, b in zip(signs, nonint))
        if k_prime < 0 or k_prime.denominator != 1:
            continue
        k_prime = int(k_prime)
        k_double = int(int_sum) - n - k_prime + 2
        if k_double < 0 or k_double % 2 != 0:
            continue
        vec = tuple(nonint) + (Fraction(1),) * (k_prime + k_double)
        eta = rational_gcd(vec)
        b = tuple(int(v / eta) for v in vec)
        if 2 * int_max <= sum(b):
            return CoaxialWitness(
                signs=signs,
                k_prime=k_prime,
                k_double_prime=k_double,
                eta=eta,
                b=b,
            )
    return None


def decide_admissible(beta: Iterable) -> AdmissibilityVerdict:
    """Decide whether the angle vector admits a spherical cone metric.

    The checks run in a fixed order: strip units, reject a single
    leftover angle, reject a non-positive Gauss-Bonnet margin, then split
    on the odd-lattice distance of beta - (1,...,1) as described in the
    module docstring.
    """
    vals = as_angles(beta)
    stripped = tuple(b for b in vals if b != 1)
    if not stripped:
        return AdmissibilityVerdict(True, CASE_EMPTY)
    if len(stripped) == 1:
        return AdmissibilityVerdict(
            False, CASE_NONE,
            reason="a single non-unit cone angle admits no metric",
        )
    margin = gauss_bonnet_margin(vals)
    if margin <= 0:
        return AdmissibilityVerdict(
            False, CASE_NONE,
            reason=f"Gauss-Bonnet margin {margin} is not positive",
        )
    lattice = l1_distance_to_odd_lattice(tuple(b - 1 for b in stripped))
    dist = lattice.distance
    if dist < 1:
        return AdmissibilityVerdict(
            False, CASE_NONE, lattice,
            reason=f"holonomy obstruction: odd-lattice distance {dist} < 1",
        )
    if dist > 1:
        return AdmissibilityVerdict(True, CASE_A, lattice)
    nonint = [b for b in stripped if b.denominator != 1]
    if len(stripped) == 2 and stripped[0] == stripped[1] and nonint:
        return AdmissibilityVerdict(True, CASE_B, lattice)
    if not nonint:
        total = sum(b - 1 for b in stripped)
        if 2 * (max(stripped) - 1) <= total:
            return AdmissibilityVerdict(True, CASE_C, lattice)
        return AdmissibilityVerdict(
            False, CASE_NONE, lattice,
            reason="integral angles at distance 1 with 2*max(beta-1) > sum(beta-1)",
        )
    if len(nonint) < len(stripped):
        witness = coaxial_check(stripped)
        if witness is not None:
            return AdmissibilityVerdict(True, CASE_D, lattice, coaxial=witness)
        return AdmissibilityVerdict(
            False, CASE_NONE, lattice,
            reason="mixed angles at distance 1 with no coaxial sign witness",
        )
    return AdmissibilityVerdict(
        False, CASE_NONE, lattice,
        reason="all angles non-integral at distance 1 and not an equal pair",
    )


def troyanov_admissible(beta: Iterable) -> bool:
    """Independent criterion for angle vectors with every entry in (0,1).

    A pair works exactly when equal; for length >= 3 the vector works
    exactly when the Gauss-Bonnet margin is positive and for every j
    min(2, 2*beta_j) + n - 2 > sum(beta).  Entries outside (0,1) are
    rejected.
    """
    vals = as_angles(beta)
    if len(vals) < 2:
        raise ValueError("need at least two angles")
    if any(v >= 1 for v in vals):
        raise ValueError("entries must lie strictly between 0 and 1")
    n = len(vals)
    if n == 2:
        return vals[0] == vals[1]
    if sum(v - 1 for v in vals) <= -2:
        return False
    total = sum(vals)
    return all(min(Fraction(2), 2 * v) + n - 2 > total for v in vals)


_ANGLE_TOKEN = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_fraction(value) -> Fraction:
    """Read one exact rational from an int or a 'p/q' / 'p' string."""
    if isinstance(value, bool):
        raise AngleParseError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise AngleParseError(f"decimal {value!r} rejected: fractions only")
    if isinstance(value, str):
        token = value.strip()
        if not _ANGLE_TOKEN.match(token):
            raise AngleParseError(
                f"bad rational {value!r}: use integers or fractions like 2/3"
            )
        try:
            return Fraction(token)
        except ZeroDivisionError:
            raise AngleParseError(f"zero denominator in {value!r}") from None
    raise AngleParseError(f"expected a rational, got {value!r}")


def parse_angles(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated angle vector like `1/2,2/3,2/3`.

    Only integers and p/q fractions are accepted; decimals such as `0.5`
    are rejected to keep the arithmetic exact.  Entries must be positive.
    """
    tokens = [t.strip() for t in text.split(",")]
    if tokens == [""]:
        raise AngleParseError("empty angle vector")
    values = tuple(parse_fraction(t) for t in tokens)
    for v in values:
        if v <= 0:
            raise AngleParseError(f"cone angles must be positive, got {v}")
    return values


def format_angles(beta: Iterable) -> str:
    """Inverse of `parse_angles` on exact input."""
    return ",".join(str(b) for b in _as_rationals(beta))


def angles_to_json(beta: Iterable) -> list[str]:
    return [str(b) for b in _as_rationals(beta)]


def angles_from_json(obj) -> tuple[Fraction, ...]:
    if not isinstance(obj, list) or not obj:
        raise AngleParseError("angle JSON must be a non-empty list")
    values = tuple(parse_fraction(v) for v in obj)
    for v in values:
        if v <= 0:
            raise AngleParseError(f"cone angles must be positive, got {v}")
    return values

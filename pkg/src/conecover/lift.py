"""Certifying branch data as exceptional by lifting cone angles.

A spherical cone metric pulls back through a branched cover: a point of
local multiplicity m over a cone of angle beta becomes a cone of angle
m * beta upstairs.  So if some admissible angle vector, one entry per
branch point, lifts through a datum to a vector that is NOT admissible,
no cover with that datum can exist.  The pair (admissible base vector,
inadmissible lift) is a self-contained certificate that anyone can
recheck with the admissibility decision alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .angles import (
    AdmissibilityVerdict,
    angles_from_json,
    angles_to_json,
    as_angles,
    decide_admissible,
)
from .branch_data import BranchDatum, validate_datum


class CertificationRefused(Exception):
    """A proposed base vector fails to certify; `kind` says which way.

    kind is "base-not-admissible" (the vector admits no metric downstairs,
    so it proves nothing) or "lift-admissible" (the lifted vector still
    admits a metric, so the criterion is silent).
    """

    def __init__(self, kind: str, base_verdict: AdmissibilityVerdict,
                 lifted_verdict: AdmissibilityVerdict | None = None):
        self.kind = kind
        self.base_verdict = base_verdict
        self.lifted_verdict = lifted_verdict
        super().__init__(kind)


@dataclass(frozen=True)
class ExceptionalityCertificate:
    """Everything needed to recheck that a datum is exceptional."""

    datum: BranchDatum
    witness_beta: tuple[Fraction, ...]
    base_verdict: AdmissibilityVerdict
    lifted: tuple[Fraction, ...]
    lifted_verdict: AdmissibilityVerdict

    def to_json(self) -> dict:
        return {
            "datum": self.datum.to_json(),
            "beta": angles_to_json(self.witness_beta),
            "base_verdict": self.base_verdict.to_json(),
            "lifted": angles_to_json(self.lifted),
            "lifted_verdict": self.lifted_verdict.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExceptionalityCertificate":
        return cls(
            datum=BranchDatum.from_json(obj["datum"]),
            witness_beta=angles_from_json(obj["beta"]),
            base_verdict=AdmissibilityVerdict.from_json(obj["base_verdict"]),
            lifted=angles_from_json(obj["lifted"]),
            lifted_verdict=AdmissibilityVerdict.from_json(obj["lifted_verdict"]),
        )


def lift_angles(beta: Iterable, datum: BranchDatum) -> tuple[Fraction, ...]:
    """Pull the angle vector back through the datum.

    Entry i of beta pairs with row i; every part m of that row
    contributes one lifted angle m * beta_i, rows in order, parts in
    their stored (non-increasing) order.
    """
    vals = as_angles(beta)
    if len(vals) != len(datum.rows):
        raise ValueError(
            f"angle vector has {len(vals)} entries for {len(datum.rows)} rows"
        )
    return tuple(part * b for b, row in zip(vals, datum.rows) for part in row.parts)


def certify_exceptional(datum: BranchDatum, beta: Iterable) -> ExceptionalityCertificate:
    """Certify the datum exceptional with the given base vector.

    Raises ValueError when the datum itself fails validation, and
    CertificationRefused when the vector is not admissible or its lift
    still is.
    """
    report = validate_datum(datum)
    if not report.ok:
        problems = "; ".join(v.message for v in report.violations)
        raise ValueError(f"datum fails validation: {problems}")
    vals = as_angles(beta)
    base_verdict = decide_admissible(vals)
    if not base_verdict.admissible:
        raise CertificationRefused("base-not-admissible", base_verdict)
    lifted = lift_angles(vals, datum)
    lifted_verdict = decide_admissible(lifted)
    if lifted_verdict.admissible:
        raise CertificationRefused("lift-admissible", base_verdict, lifted_verdict)
    return ExceptionalityCertificate(datum, vals, base_verdict, lifted, lifted_verdict)


def verify_certificate(cert: ExceptionalityCertificate) -> bool:
    """Recheck a certificate from scratch, trusting none of its verdicts."""
    if not validate_datum(cert.datum).ok:
        return False
    if len(cert.witness_beta) != len(cert.datum.rows):
        return False
    if any(b <= 0 for b in cert.witness_beta):
        return False
    if lift_angles(cert.witness_beta, cert.datum) != tuple(cert.lifted):
        return False
    base = decide_admissible(cert.witness_beta)
    lifted = decide_admissible(cert.lifted)
    if not base.admissible or lifted.admissible:
        return False
    # The stored verdicts must claim what we just recomputed.
    return cert.base_verdict.admissible and not cert.lifted_verdict.admissible


@lru_cache(maxsize=None)
def _grid_values(max_numerator: int, max_denominator: int) -> tuple[Fraction, ...]:
    values = {
        Fraction(p, q)
        for p in range(1, max_numerator + 1)
        for q in range(1, max_denominator + 1)
    }
    return tuple(sorted(values))


@lru_cache(maxsize=None)
def _admissible_grid(n: int, max_numerator: int, max_denominator: int
                     ) -> tuple[tuple[Fraction, ...], ...]:
    # Candidate base vectors ordered by (largest denominator, lexicographic),
    # pre-filtered to the admissible ones; inadmissible bases never certify.
    values = _grid_values(max_numerator, max_denominator)
    ordered = sorted(
        itertools.product(values, repeat=n),
        key=lambda t: (max(e.denominator for e in t), t),
    )
    return tuple(t for t in ordered if decide_admissible(t).admissible)


def _family_candidates(datum: BranchDatum) -> list[tuple[Fraction, ...]]:
    # Base vectors that certify the known infinite families, tried in every
    # distinct entry order since lifting is row-order sensitive.
    n = len(datum.rows)
    d = datum.degree
    half = Fraction(1, 2)
    seeds = [(half,) * n]
    if n >= 2:
        seeds.append((half,) + (Fraction(2, 3),) * (n - 1))
    for r in range(2, d + 1):
        if any(all(p % r == 0 for p in row.parts) for row in datum.rows):
            seeds.append((Fraction(1),) + (Fraction(1, r),) * (n - 1))
    out = []
    seen = set()
    for seed in seeds:
        for perm in sorted(set(itertools.permutations(seed))):
            if perm not in seen:
                seen.add(perm)
                out.append(perm)
    return out


def search_certificate(
    datum: BranchDatum,
    max_numerator: int = 6,
    max_denominator: int = 6,
    extra_candidates: Sequence[Iterable] = (),
) -> ExceptionalityCertificate | None:
    """Look for a certifying base vector; None when the search exhausts.

    Candidates are tried in a fixed order: the family seeds (halves; a
    half with two-thirds; 1 with 1/r for each r >= 2 dividing every part
    of some row), then `extra_candidates`, then every vector with entries
    p/q, p <= max_numerator, q <= max_denominator, ordered by largest
    denominator and then lexicographically.  The first certificate found
    is returned, so identical inputs give identical output.
    """
    report = validate_datum(datum)
    if not report.ok:
        problems = "; ".join(v.message for v in report.violations)
        raise ValueError(f"datum fails validation: {problems}")
    n = len(datum.rows)

    def try_one(vals: tuple[Fraction, ...], checked: bool
                ) -> ExceptionalityCertificate | None:
        base_verdict = decide_admissible(vals) if not checked else None
        if base_verdict is not None and not base_verdict.admissible:
            return None
        lifted = lift_angles(vals, datum)
        lifted_verdict = decide_admissible(lifted)
        if lifted_verdict.admissible:
            return None
        if base_verdict is None:
            base_verdict = decide_admissible(vals)
        return ExceptionalityCertificate(datum, vals, base_verdict, lifted, lifted_verdict)

    for cand in _family_candidates(datum):
        found = try_one(cand, checked=False)
        if found is not None:
            return found
    for cand in extra_candidates:
        vals = as_angles(cand)
        if len(vals) != n:
            raise ValueError(
                f"extra candidate {vals} has {len(vals)} entries for {n} rows"
            )
        found = try_one(vals, checked=False)
        if found is not None:
            return found
    for cand in _admissible_grid(n, max_numerator, max_denominator):
        found = try_one(cand, checked=True)
        if found is not None:
            return found
    return None

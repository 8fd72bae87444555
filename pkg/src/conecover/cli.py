"""Command line interface.

Every command writes pure data (JSON, one object per line for streams) to
stdout; diagnostics go to stderr.  Exit codes encode the verdict: 0 for a
positive answer, 1 for a negative one, 2 when undecided or when the input
could not be read.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from .angles import AngleParseError, decide_admissible, parse_angles
from .branch_data import (
    BranchDatum,
    DatumParseError,
    enumerate_data,
    format_datum,
    parse_datum,
    validate_datum,
)
from .families import (
    FAMILY_IDS,
    all_instances,
    family_2k,
    family_2k_twos,
    family_3k,
    family_rk,
    family_rk_split,
)
from .lift import (
    CertificationRefused,
    ExceptionalityCertificate,
    certify_exceptional,
    search_certificate,
    verify_certificate,
)
from .monodromy import (
    DEFAULT_BUDGET,
    REALIZABLE,
    UNKNOWN,
    UNREALIZABLE,
    MonodromyWitness,
    find_witness,
    verify_witness,
)

VERDICT_REALIZABLE = "REALIZABLE"
VERDICT_CERTIFIED = "EXCEPTIONAL_CERTIFIED"
VERDICT_ORACLE = "EXCEPTIONAL_ORACLE"
VERDICT_UNKNOWN = "UNKNOWN"


def _emit(obj) -> None:
    print(json.dumps(obj))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _budget(value: int) -> int | None:
    return None if value == 0 else value


def cmd_validate(args) -> int:
    datum = parse_datum(args.datum)
    report = validate_datum(datum)
    out = report.to_json()
    out["datum"] = datum.to_json()
    _emit(out)
    return 0 if report.ok else 1


def cmd_admissible(args) -> int:
    beta = parse_angles(args.angles)
    verdict = decide_admissible(beta)
    _emit(verdict.to_json())
    return 0 if verdict.admissible else 1


def cmd_certify(args) -> int:
    datum = parse_datum(args.datum)
    if args.beta is not None:
        beta = parse_angles(args.beta)
        try:
            cert = certify_exceptional(datum, beta)
        except CertificationRefused as refusal:
            out = {"certified": False, "reason": refusal.kind,
                   "base_verdict": refusal.base_verdict.to_json()}
            if refusal.lifted_verdict is not None:
                out["lifted_verdict"] = refusal.lifted_verdict.to_json()
            _emit(out)
            return 1
        _emit(cert.to_json())
        return 0
    extras = tuple(parse_angles(text) for text in args.extra)
    cert = search_certificate(
        datum,
        max_numerator=args.max_numerator,
        max_denominator=args.max_denominator,
        extra_candidates=extras,
    )
    if cert is None:
        _emit({"certified": False, "reason": "no witness found"})
        return 1
    _emit(cert.to_json())
    return 0


def cmd_realize(args) -> int:
    datum = parse_datum(args.datum)
    result = find_witness(datum, budget=_budget(args.budget))
    out = {"status": result.status, "nodes": result.nodes, "datum": datum.to_json()}
    if result.witness is not None:
        out["witness"] = result.witness.to_json()
    _emit(out)
    if result.status == REALIZABLE:
        return 0
    if result.status == UNREALIZABLE:
        return 1
    return 2


def cmd_enumerate(args) -> int:
    for datum in enumerate_data(args.degree, args.branch_points):
        _emit(datum.to_json())
    return 0


def cmd_catalog(args) -> int:
    summary: dict[int, Counter] = {}
    for degree in range(2, args.max_degree + 1):
        counts: Counter = Counter()
        for datum in enumerate_data(degree, args.branch_points):
            t0 = time.perf_counter()
            cert = search_certificate(
                datum,
                max_numerator=args.max_numerator,
                max_denominator=args.max_denominator,
            )
            t1 = time.perf_counter()
            oracle = find_witness(datum, budget=_budget(args.budget))
            t2 = time.perf_counter()
            if cert is not None and oracle.status == REALIZABLE:
                raise RuntimeError(
                    f"soundness violation: {format_datum(datum)} is certified "
                    "exceptional yet realizable"
                )
            if oracle.status == REALIZABLE:
                verdict = VERDICT_REALIZABLE
            elif cert is not None:
                verdict = VERDICT_CERTIFIED
            elif oracle.status == UNREALIZABLE:
                verdict = VERDICT_ORACLE
            else:
                verdict = VERDICT_UNKNOWN
            counts[verdict] += 1
            row: dict = {"datum": datum.to_json(), "verdict": verdict}
            if oracle.witness is not None:
                row["witness"] = oracle.witness.to_json()
            if cert is not None:
                row["certificate"] = cert.to_json()
            row["timings"] = {"certify_s": round(t1 - t0, 6),
                              "oracle_s": round(t2 - t1, 6)}
            _emit(row)
        summary[degree] = counts
    if args.table:
        print(_summary_table(summary))
    else:
        _emit({"summary": {str(d): dict(c) for d, c in summary.items()}})
    return 0


def _summary_table(summary: dict[int, Counter]) -> str:
    verdicts = (VERDICT_REALIZABLE, VERDICT_CERTIFIED, VERDICT_ORACLE, VERDICT_UNKNOWN)
    header = ["degree"] + list(verdicts) + ["total"]
    rows = [header]
    for degree in sorted(summary):
        counts = summary[degree]
        rows.append([str(degree)] + [str(counts.get(v, 0)) for v in verdicts]
                    + [str(sum(counts.values()))])
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


def _parse_params(text: str) -> dict[str, int]:
    params = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        name, _, value = piece.partition("=")
        if not value or not value.strip().lstrip("-").isdigit():
            raise ValueError(f"bad parameter {piece!r}: expected name=integer")
        params[name.strip()] = int(value)
    return params


def _build_family(family_id: str, params: dict[str, int]):
    need = {
        "P2K_A": ("k", "k1", "k2"),
        "P2K_B": ("k", "j1", "j2"),
        "P3K": ("k",),
        "PRK_A": ("r", "k"),
        "PRK_B": ("r", "k", "j1", "j2"),
    }[family_id]
    missing = [name for name in need if name not in params]
    extra = [name for name in params if name not in need]
    if missing or extra:
        raise ValueError(
            f"family {family_id} takes parameters {','.join(need)}"
        )
    args = tuple(params[name] for name in need)
    builder = {
        "P2K_A": family_2k,
        "P2K_B": family_2k_twos,
        "P3K": family_3k,
        "PRK_A": family_rk,
        "PRK_B": family_rk_split,
    }[family_id]
    return builder(*args)


def cmd_families(args) -> int:
    if args.degree is not None:
        for instance in all_instances(args.degree):
            _emit(instance.to_json())
        return 0
    instance = _build_family(args.family, _parse_params(args.params or ""))
    _emit(instance.to_json())
    return 0


def cmd_verify_certificate(args) -> int:
    obj = json.loads(_read_text(args.path))
    cert = ExceptionalityCertificate.from_json(obj)
    valid = verify_certificate(cert)
    _emit({"valid": valid})
    return 0 if valid else 1


def cmd_verify_witness(args) -> int:
    obj = json.loads(_read_text(args.path))
    raw = obj["datum"]
    datum = parse_datum(raw) if isinstance(raw, str) else BranchDatum.from_json(raw)
    witness = MonodromyWitness.from_json(obj["witness"])
    valid = verify_witness(datum, witness.perms)
    _emit({"valid": valid})
    return 0 if valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conecover",
        description="Decide spherical cone-metric admissibility and certify "
                    "exceptional branch data for covers of the sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the combinatorial cover constraints")
    p.add_argument("datum", help="text `d: p,p | p,p` or JSON {degree, rows}")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("admissible", help="decide a cone-angle vector")
    p.add_argument("angles", help="comma-separated exact angles, e.g. 1/2,2/3,2/3")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("certify", help="certify a datum exceptional via angle lifting")
    p.add_argument("datum")
    p.add_argument("--beta", help="try exactly this base vector instead of searching")
    p.add_argument("--extra", action="append", default=[], metavar="ANGLES",
                   help="extra search candidates, tried before the grid")
    p.add_argument("--max-numerator", type=int, default=6)
    p.add_argument("--max-denominator", type=int, default=6)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("realize", help="search for a monodromy witness")
    p.add_argument("datum")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="backtrack node limit, 0 for unlimited")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("enumerate", help="stream all valid data, one JSON per line")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--branch-points", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("catalog", help="classify every datum up to a degree")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--branch-points", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="oracle node limit, 0 for unlimited")
    p.add_argument("--max-numerator", type=int, default=6)
    p.add_argument("--max-denominator", type=int, default=6)
    p.add_argument("--table", action="store_true",
                   help="render the summary as a text table")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("families", help="emit known exceptional family instances")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--degree", type=int, help="all instances of this degree")
    group.add_argument("--family", choices=FAMILY_IDS)
    p.add_argument("--params", help="family parameters, e.g. k=3,j1=1,j2=2")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify-certificate", help="recheck a certificate JSON file")
    p.add_argument("path", help="file path or - for stdin")
    p.set_defaults(func=cmd_verify_certificate)

    p = sub.add_parser("verify-witness", help="recheck a realize output JSON file")
    p.add_argument("path", help="file path or - for stdin")
    p.set_defaults(func=cmd_verify_witness)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DatumParseError, AngleParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON: {exc}", file=sys.stderr)
        return 2
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

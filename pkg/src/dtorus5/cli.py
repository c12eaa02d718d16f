"""Command-line front end for construction and verification.

    dtorus5 verify --m 7                    full decomposition check
    dtorus5 verify latin --m 5              Latin rows and in-degree counts
    dtorus5 verify identities --m 5         the three transfer identities
    dtorus5 verify return --m 5 --color 2   cycle lengths of one color return
    dtorus5 certify selector                derived vs embedded selector table
    dtorus5 certify matching --mode enumerate --m 7
    dtorus5 certify matching --mode symbolic
    dtorus5 certify m3                      the 81-cycle certificate
    dtorus5 first-return --m 9 --check-closed-form
    dtorus5 decompose --m 3 --format json --out cycles.json
    dtorus5 report --m 7 --out-dir report7

Exit codes: 0 all requested checks passed, 1 a verification failed, 2 usage
error.  Every subcommand accepts --json for a machine-readable report.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import __version__
from .certificates import exact_cover_enumerate, exact_cover_symbolic, verify_m3_certificate
from .firstreturn import (
    closed_form_first_return,
    row_excursion,
    section_points,
    simulate_first_return,
)
from .hamilton import (
    export_decomposition,
    return_criterion_crosscheck,
    verify_color_hamiltonian,
    verify_decomposition,
    verify_partition,
)
from .report import write_report
from .returnmap import check_identities, color_return, cycle_structure
from .schedule import kind_for, latin_row_check
from .selector import SELECTOR_TABLE, feasible_zero_sets, selector

WALK_CAP = 15 ** 5   # full-torus walks
SWEEP_CAP = 11 ** 4  # hyperplane sweeps of all five color returns
ENUM_CAP = 15 ** 4   # single-map hyperplane enumerations


def _parse_modulus(value: str) -> int:
    try:
        m = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"integer expected, got {value!r}")
    if m < 3 or m % 2 == 0:
        raise argparse.ArgumentTypeError("odd m >= 3 required")
    return m


def _guarded(m: int, states_needed: int, default_cap: int, max_states) -> None:
    cap = default_cap if max_states is None else max_states
    if states_needed > cap:
        raise SystemExit(
            f"error: m={m} needs {states_needed} states, above the guard of {cap}; "
            f"pass --max-states {states_needed} to proceed"
        )


def _emit(args, payload: dict, human_lines) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def _cmd_verify_decomposition(args) -> int:
    m = args.m
    _guarded(m, m ** 5, WALK_CAP, args.max_states)
    if args.color is not None:
        walk = verify_color_hamiltonian(m, args.color)
        payload = {
            "command": "verify",
            "target": "color",
            "m": m,
            "color": args.color,
            "pass": walk.ok,
            "length": walk.verified_length,
            "fail_step": walk.fail_step,
        }
        lines = [
            f"color {args.color}: {'one cycle of length ' + str(walk.verified_length) if walk.ok else f'FAIL at step {walk.fail_step}'}",
            "PASS" if walk.ok else "FAIL",
        ]
        _emit(args, payload, lines)
        return 0 if walk.ok else 1
    report = verify_decomposition(m)
    payload = {"command": "verify", "target": "decomposition", **report.to_json()}
    lines = [f"arc partition: {'ok' if report.partition.ok else report.partition.witness}"]
    for w in report.walks:
        status = f"one cycle of length {w.verified_length}" if w.ok else f"FAIL at step {w.fail_step}"
        lines.append(f"color {w.color}: {status}")
    lines.append(f"elapsed: {report.elapsed:.2f}s")
    lines.append("PASS" if report.ok else "FAIL")
    _emit(args, payload, lines)
    return 0 if report.ok else 1


def _cmd_verify_latin(args) -> int:
    m = args.m
    _guarded(m, m ** 5, WALK_CAP, args.max_states)
    rows = latin_row_check(kind_for(m), m)
    partition = verify_partition(m)
    ok = rows.ok and partition.ok
    payload = {
        "command": "verify",
        "target": "latin",
        "m": m,
        "pass": ok,
        "out_rows": {"pass": rows.ok, "witness": rows.witness},
        "in_counts": {"pass": partition.ok, "witness": partition.witness},
    }
    lines = [
        f"out-rows permutation check: {'ok' if rows.ok else rows.witness}",
        f"in/out partition counts:    {'ok' if partition.ok else partition.witness}",
        "PASS" if ok else "FAIL",
    ]
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_verify_identities(args) -> int:
    m = args.m
    _guarded(m, 5 * m ** 4, 5 * SWEEP_CAP, args.max_states)
    results = check_identities(m)
    ok = all(v.ok for v in results.values())
    payload = {
        "command": "verify",
        "target": "identities",
        "m": m,
        "pass": ok,
        "identities": {k: {"pass": v.ok, "witness": v.witness} for k, v in results.items()},
    }
    lines = [f"{name}: {'ok' if v.ok else v.witness}" for name, v in results.items()]
    lines.append("PASS" if ok else "FAIL")
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_verify_return(args) -> int:
    m = args.m
    colors = [args.color] if args.color is not None else list(range(5))
    _guarded(m, len(colors) * m ** 4, 5 * SWEEP_CAP, args.max_states)
    all_ok = True
    results = []
    lines = []
    for c in colors:
        lengths = cycle_structure(lambda w: color_return(m, c, w), m)
        cross = return_criterion_crosscheck(m, c)
        hamiltonian = lengths == Counter({m ** 4: 1})
        all_ok = all_ok and cross.ok and hamiltonian
        results.append({
            "color": c,
            "cycle_lengths": {str(k): v for k, v in sorted(lengths.items())},
            "single_cycle": hamiltonian,
            "lift_crosscheck": cross.ok,
        })
        shown = ", ".join(f"{n} x {cnt}" for n, cnt in sorted(lengths.items()))
        lines.append(
            f"color {c}: return cycle lengths {{{shown}}}"
            f" | single {m}^4-cycle: {'yes' if hamiltonian else 'no'}"
            f" | torus lift: {'ok' if cross.ok else cross.witness}"
        )
    lines.append("PASS" if all_ok else "FAIL")
    payload = {"command": "verify", "target": "return", "m": m, "pass": all_ok, "colors": results}
    _emit(args, payload, lines)
    return 0 if all_ok else 1


def _cmd_verify(args) -> int:
    target = args.target
    if target == "decomposition":
        return _cmd_verify_decomposition(args)
    if target == "latin":
        return _cmd_verify_latin(args)
    if target == "identities":
        return _cmd_verify_identities(args)
    return _cmd_verify_return(args)


def _cmd_certify_selector(args) -> int:
    derived = {Z: selector(Z) for Z in feasible_zero_sets()}
    mismatches = [
        {"zero_set": sorted(Z), "derived": derived[Z], "embedded": SELECTOR_TABLE[Z]}
        for Z in feasible_zero_sets()
        if derived[Z] != SELECTOR_TABLE[Z]
    ]
    ok = not mismatches
    payload = {
        "mode": "selector",
        "pass": ok,
        "rows": [{"zero_set": sorted(Z), "selector": derived[Z]} for Z in feasible_zero_sets()],
        "counter_examples": mismatches,
    }
    lines = [f"{{{', '.join(str(i) for i in sorted(Z))}}} -> {derived[Z]}" for Z in feasible_zero_sets()]
    lines.append(f"27 rows; derived and embedded tables {'agree' if ok else 'DISAGREE'}")
    lines.append("PASS" if ok else "FAIL")
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_certify_matching(args) -> int:
    if args.mode == "symbolic":
        report = exact_cover_symbolic()
        lines = [f"checked {report.checked} realizable coordinate-class vectors (all odd m >= 13)"]
    else:
        if args.m is None:
            raise SystemExit("error: certify matching --mode enumerate requires --m")
        _guarded(args.m, args.m ** 4, ENUM_CAP, args.max_states)
        report = exact_cover_enumerate(args.m)
        lines = [f"checked {report.checked} hyperplane points at m={args.m}"]
    for ce in report.counter_examples[:10]:
        lines.append(f"counterexample: {ce}")
    lines.append("PASS" if report.ok else "FAIL")
    _emit(args, report.to_json(), lines)
    return 0 if report.ok else 1


def _cmd_certify_m3(args) -> int:
    verdict = verify_m3_certificate()
    payload = {
        "mode": "m3",
        "pass": verdict.ok,
        "counter_examples": [] if verdict.ok else [verdict.witness],
    }
    lines = [
        "81-entry cycle table: distinct entries, consecutive normalized-return steps"
        if verdict.ok
        else f"certificate failed: {verdict.witness}",
        "PASS" if verdict.ok else "FAIL",
    ]
    _emit(args, payload, lines)
    return 0 if verdict.ok else 1


def _cmd_certify(args) -> int:
    if args.what == "selector":
        return _cmd_certify_selector(args)
    if args.what == "matching":
        return _cmd_certify_matching(args)
    return _cmd_certify_m3(args)


def _cmd_first_return(args) -> int:
    m = args.m
    if m < 5:
        raise SystemExit("error: first-return analysis requires odd m >= 5")
    _guarded(m, m ** 4, ENUM_CAP, args.max_states)
    rows = []
    mismatches = []
    for p in section_points(m):
        rec = closed_form_first_return(m, p)
        row = {"a": p.a, "b": p.b, "end": [rec.end.a, rec.end.b], "length": rec.length}
        if args.check_closed_form:
            sim = simulate_first_return(m, p)
            row["simulated"] = {"end": [sim.end.a, sim.end.b], "length": sim.length}
            if sim != rec:
                mismatches.append(row)
        rows.append(row)
    row_sums = [row_excursion(m, b) for b in range(m)]
    total = sum(row_sums)
    ok = not mismatches and total == m ** 4 and all(r == m ** 3 for r in row_sums)
    payload = {
        "command": "first-return",
        "m": m,
        "pass": ok,
        "rows": rows,
        "row_sums": row_sums,
        "total": total,
        "mismatches": mismatches,
    }
    lines = [
        f"({r['a']},{r['b']}) -> ({r['end'][0]},{r['end'][1]})  length {r['length']}" for r in rows
    ]
    lines.append(f"row sums: {row_sums} (each should be {m ** 3})")
    lines.append(f"total excursion: {total} (should be {m ** 4})")
    if args.check_closed_form:
        lines.append(f"closed form vs simulation: {len(mismatches)} mismatches")
    lines.append("PASS" if ok else "FAIL")
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_decompose(args) -> int:
    m = args.m
    _guarded(m, m ** 5, WALK_CAP, args.max_states)
    artifact = export_decomposition(m, args.format, force=args.force)
    with open(args.out, "w") as fh:
        fh.write(artifact)
    payload = {
        "command": "decompose",
        "m": m,
        "format": args.format,
        "out": args.out,
        "bytes": len(artifact),
        "pass": True,
    }
    _emit(args, payload, [f"wrote {len(artifact)} bytes to {args.out}"])
    return 0


def _cmd_report(args) -> int:
    m = args.m
    if m < 5:
        raise SystemExit("error: the report requires odd m >= 5")
    _guarded(m, m ** 4, ENUM_CAP, args.max_states)
    summary = write_report(m, args.out_dir, check=not args.no_check)
    ok = bool(summary["induced_cycle_pass"]) and summary["total_excursion"] == m ** 4 and (
        summary["closed_form_matches_simulation"] in (None, True)
    )
    payload = {"command": "report", "m": m, "pass": ok, **summary}
    lines = [
        f"wrote {name} to {args.out_dir}" for name in summary["files"].values()
    ] + ["wrote summary.json to " + args.out_dir, "PASS" if ok else "FAIL"]
    _emit(args, payload, lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dtorus5",
        description="Construct and machine-verify five-color Hamilton decompositions "
                    "of the directed 5-dimensional torus on (Z_m)^5, odd m >= 3.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_m=True):
        if need_m:
            p.add_argument("--m", type=_parse_modulus, required=True,
                           help="modulus (odd, >= 3)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--max-states", type=int, default=None,
                       help="override the default state-count guard")

    p = sub.add_parser("verify", help="verify the decomposition or one of its layers")
    p.add_argument("target", nargs="?", default="decomposition",
                   choices=["decomposition", "latin", "identities", "return"])
    common(p)
    p.add_argument("--color", type=int, choices=range(5), default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("identities", help="shorthand for 'verify identities'")
    common(p)
    p.set_defaults(func=_cmd_verify_identities)

    p = sub.add_parser("certify", help="run a finite certificate")
    p.add_argument("what", choices=["selector", "matching", "m3"])
    p.add_argument("--mode", choices=["enumerate", "symbolic"], default="enumerate",
                   help="matching only: enumeration at one m, or the symbolic class sweep")
    p.add_argument("--m", type=_parse_modulus, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-states", type=int, default=None)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("first-return", help="first-return table of the normalized return")
    common(p)
    p.add_argument("--check-closed-form", action="store_true",
                   help="also simulate every excursion and compare")
    p.set_defaults(func=_cmd_first_return)

    p = sub.add_parser("decompose", help="export the five verified color cycles")
    common(p)
    p.add_argument("--format", choices=["json", "text", "arcs"], required=True)
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--force", action="store_true", help="export without verification")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("report", help="write CSV, figures and a JSON summary")
    common(p)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--no-check", action="store_true",
                   help="skip the simulation cross-check of the closed form")
    p.set_defaults(func=_cmd_report)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        return exc.code if isinstance(exc.code, int) else 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

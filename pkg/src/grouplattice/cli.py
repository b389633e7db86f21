"""Command-line front end.

Subcommands: construct, catalog, lattice, degrees, verify. Exit codes:
0 success or verification pass, 1 verification counterexample, 2 usage
or input error. Output is deterministic; identical invocations produce
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .arith import factorize
from .bounds import (
    BoundReport,
    candidate_orders,
    cww_b,
    edge_bound,
    herzog_manz_c,
    lemma_2_1,
    lemma_2_3_scan,
    newton_d,
    newton_e,
    wall_a,
)
from .classify import (
    verify_corollary_1_2,
    verify_corollary_1_3,
    verify_theorem_1_1,
    verify_theorem_A,
    verify_wall,
)
from .core import DEFAULT_CONSTRUCTION_CAP, dumps_group, read_group
from .errors import GroupError, InputError, UsageError
from .families import (
    abelian,
    alternating,
    catalog,
    cyclic,
    dicyclic,
    dihedral,
    elementary_abelian,
    generalized_dihedral,
    heisenberg,
    symmetric,
    wall_H,
    wall_S,
    wall_T,
)
from .iso import DEFAULT_ISO_CAP
from .lattice import DEFAULT_LATTICE_CAP, all_subgroups

VERIFY_TARGETS = (
    "theorem-1.1",
    "theorem-a",
    "wall",
    "cor-1.2",
    "cor-1.3",
    "bounds",
    "lemma21",
    "lemma23",
    "orders",
)


@dataclass
class RunConfig:
    command: str
    max_order: int = 24
    lattice_cap: int = DEFAULT_LATTICE_CAP
    iso_cap: int = DEFAULT_ISO_CAP
    construction_cap: int = DEFAULT_CONSTRUCTION_CAP
    prime_bound: int = 31
    exp_bound: int = 4
    output: Optional[str] = None
    fmt: str = "json"

    def validate(self) -> None:
        if min(self.lattice_cap, self.iso_cap, self.construction_cap) < 1:
            raise UsageError("caps must be >= 1")
        if self.max_order < 1:
            raise UsageError(f"max_order must be >= 1, got {self.max_order}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouplattice",
        description="Construct finite groups, build subgroup graphs, verify degree bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser("construct", help="build a group and write its table")
    p_construct.add_argument("family")
    p_construct.add_argument("params", nargs="*", type=int)
    p_construct.add_argument("-o", "--output")

    p_catalog = sub.add_parser("catalog", help="list the built-in catalog")
    p_catalog.add_argument("--list", action="store_true", dest="list_entries")
    p_catalog.add_argument("--max-order", type=int, default=24)
    p_catalog.add_argument("--iso-cap", type=int, default=DEFAULT_ISO_CAP)
    p_catalog.add_argument("-o", "--output")

    p_lattice = sub.add_parser("lattice", help="subgroup graph of a group file")
    p_lattice.add_argument("file")
    p_lattice.add_argument("--format", choices=("json", "dot"), default="json")
    p_lattice.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)
    p_lattice.add_argument("-o", "--output")

    p_degrees = sub.add_parser("degrees", help="per-vertex degrees of a group file")
    p_degrees.add_argument("file")
    p_degrees.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)
    p_degrees.add_argument("-o", "--output")

    p_verify = sub.add_parser("verify", help="run a theorem or bound verifier")
    p_verify.add_argument("target", choices=VERIFY_TARGETS)
    p_verify.add_argument("--max-order", type=int, default=None)
    p_verify.add_argument("--prime-bound", type=int, default=31)
    p_verify.add_argument("--exp-bound", type=int, default=4)
    p_verify.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP)
    p_verify.add_argument("--iso-cap", type=int, default=DEFAULT_ISO_CAP)
    p_verify.add_argument("-o", "--output")
    return parser


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


_CONSTRUCTORS = {
    "cyclic": (1, 1, lambda p, cap: cyclic(p[0], cap=cap)),
    "abelian": (1, None, lambda p, cap: abelian(p, cap=cap)),
    "elementary-abelian": (2, 2, lambda p, cap: elementary_abelian(p[0], p[1], cap=cap)),
    "dihedral": (1, 1, lambda p, cap: dihedral(p[0], cap=cap)),
    "dicyclic": (1, 1, lambda p, cap: dicyclic(p[0], cap=cap)),
    "generalized-dihedral": (1, None, lambda p, cap: generalized_dihedral(abelian(p, cap=cap), cap=cap)),
    "wall-h": (1, 1, lambda p, cap: wall_H(p[0], cap=cap)),
    "wall-s": (1, 1, lambda p, cap: wall_S(p[0], cap=cap)),
    "wall-t": (1, 1, lambda p, cap: wall_T(p[0], cap=cap)),
    "heisenberg": (1, 1, lambda p, cap: heisenberg(p[0], cap=cap)),
    "symmetric": (1, 1, lambda p, cap: symmetric(p[0], cap=cap)),
    "alternating": (1, 1, lambda p, cap: alternating(p[0], cap=cap)),
}


def _run_construct(args) -> int:
    entry = _CONSTRUCTORS.get(args.family)
    if entry is None:
        known = ", ".join(sorted(_CONSTRUCTORS))
        raise UsageError(f"unknown family {args.family!r}; known: {known}")
    lo, hi, build = entry
    count = len(args.params)
    if count < lo or (hi is not None and count > hi):
        expected = f"{lo}" if hi == lo else (f">={lo}" if hi is None else f"{lo}..{hi}")
        raise UsageError(f"family {args.family!r} takes {expected} parameters, got {count}")
    try:
        g = build(args.params, DEFAULT_CONSTRUCTION_CAP)
    except GroupError as exc:
        raise UsageError(str(exc)) from exc
    _emit(dumps_group(g), args.output)
    return 0


def _run_catalog(args) -> int:
    if not args.list_entries:
        raise UsageError("catalog requires --list")
    lines = []
    for entry in catalog(args.max_order, args.iso_cap):
        tags = ",".join(sorted(entry.known_tags)) or "-"
        lines.append(f"{entry.name} order={entry.group.order} tags={tags}")
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _load_group(path: str):
    try:
        return read_group(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except GroupError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _run_lattice(args) -> int:
    g = _load_group(args.file)
    try:
        lattice = all_subgroups(g, cap=args.lattice_cap)
    except GroupError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "dot":
        _emit(lattice.export_dot(), args.output)
    else:
        _emit(json.dumps(lattice.report(), indent=2) + "\n", args.output)
    return 0


def _run_degrees(args) -> int:
    g = _load_group(args.file)
    try:
        lattice = all_subgroups(g, cap=args.lattice_cap)
    except GroupError as exc:
        raise InputError(str(exc)) from exc
    profile = lattice.degree_profile()
    vertices = [
        {"order": s.order, "degree": d, "down": lo, "up": hi}
        for s, d, lo, hi in zip(lattice.subgroups, profile.degrees, profile.down, profile.up)
    ]
    payload = {
        "group": g.name,
        "order": g.order,
        "vertices": vertices,
        "max_degree": max(profile.degrees),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def _report_json(report) -> str:
    payload = {
        "theorem": report.theorem,
        "groups_checked": report.groups_checked,
        "counterexamples": [list(c) for c in report.counterexamples],
        "notes": list(report.notes),
        "passed": report.passed,
    }
    return json.dumps(payload, indent=2) + "\n"


def _bound_line(group_name: str, order: int, report: BoundReport, **extra) -> str:
    payload = {"group": group_name, "order": order}
    payload.update(extra)
    payload.update(
        {
            "bound": report.bound_name,
            "computed": report.computed,
            "limit": str(report.limit),
            "holds": report.holds,
            "equality": report.equality,
            "equality_condition": report.equality_condition,
        }
    )
    return json.dumps(payload, separators=(",", ":"))


def _solvable_entries(max_order: int, iso_cap: int):
    for entry in catalog(max_order, iso_cap):
        g = entry.group
        if 1 < g.order <= max_order and g.is_solvable:
            yield entry


def _run_verify(args) -> int:
    target = args.target
    defaults = {"orders": 10000, "lemma21": 24, "bounds": 24}
    max_order = args.max_order if args.max_order is not None else defaults.get(target, 24)
    cfg = RunConfig(
        command=f"verify {target}",
        max_order=max_order,
        lattice_cap=args.lattice_cap,
        iso_cap=args.iso_cap,
        prime_bound=args.prime_bound,
        exp_bound=args.exp_bound,
        output=args.output,
    )
    cfg.validate()
    needs_lattice = target in ("theorem-1.1", "cor-1.2", "cor-1.3", "bounds", "lemma21")
    if needs_lattice and max_order > cfg.lattice_cap:
        raise UsageError(
            f"--max-order {max_order} exceeds --lattice-cap {cfg.lattice_cap}"
        )

    if target in ("theorem-1.1", "theorem-a", "wall", "cor-1.2", "cor-1.3"):
        entries = catalog(max_order, args.iso_cap)
        if target == "theorem-1.1":
            report = verify_theorem_1_1(entries, max_order, args.lattice_cap, args.iso_cap)
        elif target == "theorem-a":
            report = verify_theorem_A(entries, max_order, args.iso_cap)
        elif target == "wall":
            report = verify_wall(entries, max_order, args.iso_cap)
        elif target == "cor-1.2":
            report = verify_corollary_1_2(entries, max_order, args.lattice_cap)
        else:
            report = verify_corollary_1_3(entries, max_order, args.lattice_cap, args.iso_cap)
        _emit(_report_json(report), args.output)
        return 0 if report.passed else 1

    if target == "bounds":
        lines = []
        ok = True
        for entry in _solvable_entries(max_order, args.iso_cap):
            g = entry.group
            lattice = all_subgroups(g, cap=args.lattice_cap)
            reports = [wall_a(g, lattice), cww_b(g, lattice), herzog_manz_c(g, lattice)]
            for p in sorted(factorize(g.order)):
                reports.extend(newton_d(g, lattice, p))
            reports.append(newton_e(g, lattice))
            reports.append(edge_bound(lattice))
            for rep in reports:
                ok = ok and rep.holds
                lines.append(_bound_line(entry.name, g.order, rep))
        _emit("\n".join(lines) + "\n", args.output)
        return 0 if ok else 1

    if target == "lemma21":
        lines = []
        ok = True
        for entry in _solvable_entries(max_order, args.iso_cap):
            g = entry.group
            lattice = all_subgroups(g, cap=args.lattice_cap)
            for h in lattice.subgroups:
                rep = lemma_2_1(g, h, lattice)
                ok = ok and rep.holds and rep.equality == rep.equality_condition
                lines.append(_bound_line(entry.name, g.order, rep, subgroup_order=h.order))
        _emit("\n".join(lines) + "\n", args.output)
        return 0 if ok else 1

    if target == "lemma23":
        if args.prime_bound < 5 or args.exp_bound < 1:
            raise UsageError("lemma23 needs --prime-bound >= 5 and --exp-bound >= 1")
        lines = []
        ok = True
        for rep in lemma_2_3_scan(args.prime_bound, args.exp_bound):
            ok = ok and rep.holds
            lines.append(_bound_line("-", 0, rep))
        _emit("\n".join(lines) + "\n", args.output)
        return 0 if ok else 1

    # orders: divisor analysis scan, no groups involved
    violations = []
    small_checked = 0
    for n in range(1, 12):
        if not candidate_orders(n).small_case:
            violations.append([n, "expected small-case branch"])
        small_checked += 1
    for n in range(12, max_order + 1):
        try:
            result = candidate_orders(n)
        except AssertionError as exc:
            violations.append([n, str(exc)])
            continue
        if result.small_case:
            violations.append([n, "unexpected small-case branch"])
    payload = {
        "target": "orders",
        "small_case_range": [1, 11],
        "scanned_range": [12, max_order],
        "violations": violations,
        "passed": not violations,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0 if not violations else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "construct":
            return _run_construct(args)
        if args.command == "catalog":
            return _run_catalog(args)
        if args.command == "lattice":
            return _run_lattice(args)
        if args.command == "degrees":
            return _run_degrees(args)
        return _run_verify(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except GroupError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

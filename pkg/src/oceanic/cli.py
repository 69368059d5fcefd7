"""Command line interface.

Exit status: 0 on success, 1 for invalid input, 2 when the requested method
does not apply to the game (the message names the failed hypothesis).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import io as gio
from .errors import HypothesisError, OceanicError, ValidationError
from .finite import convergence_report
from .game import ValueProfile, normalize, power_ratios
from .methods import compute_values
from .montecarlo import McConfig
from .scenarios import (
    SweepResult,
    crystallization_sweep,
    default_grid,
    entry_sweep,
    snapshot_analysis,
    theorem1b_check,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _n_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oceanic", description="Oceanic-game values for mining resource distributions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("values", help="values and power ratios of one game")
    p.add_argument("--game", required=True, help=".json game file or .csv snapshot")
    p.add_argument("--method", choices=("closed", "interior", "exact", "mc"), default="exact")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quota", type=float, help="override the game's quota")
    add_format(p)

    p = sub.add_parser("crystallize", help="a single entity forming out of a pure ocean")
    p.add_argument("--total", type=float, default=100.0)
    p.add_argument("--steps", type=int, default=99)
    p.add_argument("--quota", type=float, default=0.5)
    add_format(p)

    p = sub.add_parser("entry", help="entering as one miner versus joining the ocean")
    p.add_argument("--game", required=True)
    p.add_argument("--w-max", type=float, required=True, help="largest entrant, in the game's units")
    p.add_argument("--steps", type=int, default=60)
    add_format(p)

    p = sub.add_parser("snapshot", help="ratios for a pool-share snapshot")
    p.add_argument("--csv", required=True)
    p.add_argument("--quota", type=float, default=0.5)
    add_format(p)

    p = sub.add_parser("oracle", help="finite Shapley-Shubik convergence report")
    p.add_argument("--game", required=True)
    p.add_argument("--n", type=_n_list, required=True, help="atom counts, e.g. 10,50,200")
    p.add_argument("--exact", action="store_true", help="rational arithmetic (m + n <= 150)")
    add_format(p)

    p = sub.add_parser("check-1b", help="entrant ratio against the base ocean ratio")
    p.add_argument("--game", required=True)
    p.add_argument("--w", type=float, required=True)
    add_format(p)
    return parser


def _profile_json(profile: ValueProfile) -> dict:
    out = {"majors": list(profile.major_values), "ocean": profile.ocean_value}
    if profile.stderr is not None:
        out["stderr"] = list(profile.stderr)
    return out


def _cmd_values(args) -> str:
    game = gio.load_game(args.game, args.quota)
    norm = normalize(game)
    profile = compute_values(game, args.method, McConfig(args.samples, args.seed))
    ratios = power_ratios(norm, profile)
    names = game.names()
    rows = [
        [name, w, phi, v]
        for name, w, phi, v in zip(names, norm.majors, profile.major_values, ratios.major_ratios)
    ]
    if norm.ocean > 0:
        rows.append([gio.OCEAN_NAME, norm.ocean, profile.ocean_value, ratios.ocean_ratio])
    header = ["entity", "weight", "value", "ratio"]
    if profile.stderr is not None:
        header.append("stderr")
        for row, se in zip(rows, profile.stderr):
            row.append(se)
    if args.format == "csv":
        return gio.write_csv(header, rows)
    return gio.write_json({
        "game": gio.game_to_dict(game),
        "method": profile.method,
        "values": _profile_json(profile),
        "ratios": {"majors": list(ratios.major_ratios), "ocean": ratios.ocean_ratio},
        "rows": [dict(zip(header, r)) for r in rows],
    })


def _sweep_output(result: SweepResult, header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "csv":
        return gio.write_csv(header, rows)
    meta = {k: v for k, v in result.metadata.items() if k != "profile"}
    values = None
    if "profile" in result.metadata:
        values = _profile_json(result.metadata["profile"])
    return gio.write_json({
        "game": gio.game_to_dict(result.base) if result.base is not None else None,
        "method": sorted({r.method for r in result.rows}),
        "values": values,
        "ratios": meta,
        "rows": [dict(zip(header, r)) for r in rows],
    })


def _cmd_crystallize(args) -> str:
    grid = default_grid(args.quota, args.steps)
    result = crystallization_sweep(args.total, grid, args.quota)
    header = ["r1", "v1", "v_oc", "phi1", "Phi", "method"]
    rows = [
        [r.parameter, r.ratios["v1"], r.ratios["v_oc"], r.values["phi1"], r.values["Phi"], r.method]
        for r in result.rows
    ]
    return _sweep_output(result, header, rows, args.format)


def _cmd_entry(args) -> str:
    base = gio.load_game(args.game)
    if args.steps < 1 or args.w_max <= 0:
        raise ValidationError("--w-max and --steps must be positive")
    grid = [args.w_max * j / args.steps for j in range(1, args.steps + 1)]
    result = entry_sweep(base, grid)
    header = ["w", "v_plus", "v_oc_o", "sign", "method", "flags"]
    rows = [
        [r.parameter, r.ratios.get("v_plus", ""), r.ratios.get("v_oc_o", ""),
         int(r.ratios["sign"]) if "sign" in r.ratios else "", r.method, ";".join(r.flags)]
        for r in result.rows
    ]
    changes = result.metadata["sign_changes"]
    print(f"v_oc of base game: {result.metadata['v_oc_base']:.6g}; "
          f"sign changes at w = {changes or 'none'}", file=sys.stderr)
    return _sweep_output(result, header, rows, args.format)


def _cmd_snapshot(args) -> str:
    snap = gio.parse_snapshot(_read(args.csv))
    result = snapshot_analysis(snap.rows, args.quota, snap.ocean)
    header = ["rank", "entity", "share", "value", "ratio", "inversion"]
    rows = [
        [int(r.parameter), r.label, r.values["share"], r.values["value"], r.ratios["ratio"],
         "inversion" in r.flags]
        for r in result.rows
    ]
    return _sweep_output(result, header, rows, args.format)


def _cmd_oracle(args) -> str:
    game = gio.load_game(args.game)
    report = convergence_report(game, args.n, exact=args.exact)
    names = game.names() + ["ocean"]
    header = ["n", "max_gap"] + [f"gap_{n}" for n in names]
    rows = [[r.n, r.max_gap, *r.gaps] for r in report]
    if args.format == "csv":
        return gio.write_csv(header, rows)
    return gio.write_json({
        "game": gio.game_to_dict(game),
        "method": "oracle-exact" if args.exact else "oracle",
        "values": None,
        "ratios": None,
        "rows": [dict(zip(header, r)) for r in rows],
    })


def _cmd_check_1b(args) -> str:
    game = gio.load_game(args.game)
    res = theorem1b_check(game, args.w)
    header = ["v_plus", "v_oc_base", "gap", "plus_interior"]
    row = [res.v_plus, res.v_oc_base, res.gap, res.plus_interior]
    if args.format == "csv":
        return gio.write_csv(header, [row])
    return gio.write_json({
        "game": gio.game_to_dict(game),
        "method": "exact",
        "values": None,
        "ratios": {"v_plus": res.v_plus, "v_oc_base": res.v_oc_base},
        "rows": [dict(zip(header, row))],
    })


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


_COMMANDS = {
    "values": _cmd_values,
    "crystallize": _cmd_crystallize,
    "entry": _cmd_entry,
    "snapshot": _cmd_snapshot,
    "oracle": _cmd_oracle,
    "check-1b": _cmd_check_1b,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    try:
        out = _COMMANDS[args.command](args)
    except HypothesisError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OceanicError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

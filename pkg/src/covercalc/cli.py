"""Command-line frontend: JSON in, CSV/JSON tables out.

Exit codes: 0 success, 1 validation failure, 2 I/O or parse failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import diagrams, engine, knots, lifts


def _parse_p_values(args) -> list[int]:
    if args.p_range:
        try:
            lo, hi = args.p_range.split("..")
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise ValueError(f"bad --p-range {args.p_range!r}, expected A..B")
        if lo > hi:
            raise ValueError("empty --p-range")
        values = list(range(lo, hi + 1))
    elif args.p is not None:
        values = [args.p]
    else:
        raise ValueError("one of --p or --p-range is required")
    if any(p < 1 for p in values):
        raise ValueError("p values must be >= 1")
    return values


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows, header, fmt: str) -> str:
    # big integers go out as bare decimals in CSV and strings in JSON
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(x) for x in row) for row in rows]
        return "\n".join(lines) + "\n"
    payload = [
        {k: (str(v) if isinstance(v, int) and k in ("h1", "f", "multiplier") else v)
         for k, v in zip(header, row)}
        for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _load_knot(path: str) -> knots.KnotDescriptor:
    return knots.KnotDescriptor.from_json_dict(_load_json(path))


def _load_diagram(path: str) -> diagrams.DecoratedDiagram:
    d = diagrams.DecoratedDiagram.from_json_dict(_load_json(path))
    violation = diagrams.validate_complete(d)
    if violation is not None:
        raise diagrams.DiagramError(violation)
    return d


def cmd_h1(args) -> str:
    knot = _load_knot(args.knot)
    rows = [(p, knots.h1_order(knot, p)) for p in _parse_p_values(args)]
    return _table(rows, ("p", "h1"), args.format)


def cmd_wheel_table(args) -> str:
    rows = knots.f_table(args.p, args.n_max)
    return _table(rows, ("n", "f"), args.format)


def cmd_cwl(args) -> str:
    knot = _load_knot(args.knot)
    diagram = _load_diagram(args.diagram)
    term = engine.cwl_delta(
        knot,
        diagram,
        args.p,
        signed=not args.unsigned,
        leg_cap=args.leg_cap,
    )
    return json.dumps(term.to_json_dict(), indent=2) + "\n"


def cmd_lift(args) -> str:
    system = lifts.LiftSystem.from_json_dict(_load_json(args.system))
    solutions = lifts.solve(system)
    if solutions is None:
        return "INADMISSIBLE\n"
    return json.dumps(
        [{str(v): a for v, a in sorted(s.items(), key=lambda kv: str(kv[0]))}
         for s in solutions],
        indent=2,
    ) + "\n"


def cmd_window(args) -> str:
    if args.p < 1 or args.l_start < 1 or args.count < 1:
        raise ValueError("p, l-start and count must all be >= 1")
    rows = []
    for l in range(args.l_start, args.l_start + args.count):
        value = engine.lmo_leading_multiplier(l, args.p)
        rows.append((l, value, 1 if value != 0 else 0))
    return _table(rows, ("l", "multiplier", "nonzero"), args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covercalc",
        description="Leading-order invariants of branched cyclic covers "
        "from combinatorial knot and diagram data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, default_format="csv"):
        sp.add_argument("--format", choices=("json", "csv"), default=default_format)
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("h1", help="homology orders of p-fold branched covers")
    sp.add_argument("knot", help="knot JSON file")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--p-range", default=None, metavar="A..B")
    add_common(sp)
    sp.set_defaults(func=cmd_h1)

    sp = sub.add_parser("wheel-table", help="f(p,n) for the wheel knot family")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    add_common(sp)
    sp.set_defaults(func=cmd_wheel_table)

    sp = sub.add_parser("cwl", help="Casson-Walker-Lescop leading term")
    sp.add_argument("knot", help="knot JSON file")
    sp.add_argument("diagram", help="diagram JSON file")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--unsigned", action="store_true",
                    help="drop the alternating leg-state signs")
    sp.add_argument("--leg-cap", type=int, default=engine.DEFAULT_LEG_CAP)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_cwl)

    sp = sub.add_parser("lift", help="solve a mod-p lift system")
    sp.add_argument("system", help="lift system JSON file")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_lift)

    sp = sub.add_parser("window", help="leading multipliers over a window of leg counts")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l-start", type=int, required=True)
    sp.add_argument("--count", type=int, required=True)
    add_common(sp)
    sp.set_defaults(func=cmd_window)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: malformed input, missing field {exc}", file=sys.stderr)
        return 2
    except diagrams.DiagramError as exc:
        v = exc.violation
        print(f"invalid diagram: {v.code}[{v.element}]: {v.message}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(text, getattr(args, "out", None))
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

Exit codes: 0 success, 1 invalid rigged configuration or non-highest path,
2 parse/usage error, 3 failed check (selftest, action-angle).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import re
import sys

from . import selftest
from .boxball import (
    BoxBallState,
    action_angle_report,
    evolve_trace,
    intermediate_path,
    scattering_data,
    to_rc,
)
from .classical import NotHighestError, classical_path_to_rc, classical_rc_to_path
from .crystal import format_word, is_highest, parse_word
from .rigged import RiggedConfiguration, render_ascii, validate
from .vertex import rc_to_path_trace

EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_CHECK = 3


class _ParseError(Exception):
    pass


def _read_rc(path: str, rank: int | None) -> RiggedConfiguration:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        if rank is not None:
            levels = list(data["levels"])
            if len(levels) > rank:
                raise ValueError(f"configuration has {len(levels)} levels, more than rank {rank}")
            data = dict(data, n=rank, levels=levels + [{"mu": [], "J": []}] * (rank - len(levels)))
        return RiggedConfiguration.from_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise _ParseError(str(exc)) from exc


_STEP_PREFIX = re.compile(r"^\s*t\s*=\s*\d+\s*:\s*")


def _read_state(text: str, rank: int) -> BoxBallState:
    text = _STEP_PREFIX.sub("", text).replace("⋯", "").replace("...", "").strip()
    try:
        return BoxBallState.parse(text, rank)
    except ValueError as exc:
        raise _ParseError(str(exc)) from exc


def _carrier(text: str) -> int | str:
    if text in ("inf", "infinity"):
        return "inf"
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"carrier must be a positive integer or 'inf', got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("carrier must be at least 1")
    return value


def _resolve_carrier(carrier, state: BoxBallState) -> int:
    # a carrier larger than the number of balls never fills up
    if carrier == "inf":
        return max(1, sum(1 for c in state.window if c != 1) + 1)
    return carrier


# -- commands ---------------------------------------------------------------

def cmd_rc2path(args) -> int:
    rc = _read_rc(args.rc, args.rank)
    bad = validate(rc)
    if bad is not None:
        print(f"invalid rigged configuration: level {bad.a}, length {bad.j}: {bad.reason}", file=sys.stderr)
        return EXIT_INVALID
    if args.engine == "classical":
        path = classical_rc_to_path(rc)
        if args.trace:
            for a in range(rc.n, 0, -1):
                sub = rc.truncated(a)
                p = classical_rc_to_path(sub) if sub.mu0 else ()
                print(f"p({a}) = {format_word(_relabel(p, a))}")
    else:
        path, stages = rc_to_path_trace(rc)
        if args.trace:
            for st in stages:
                print(f"p({st.a}) = {format_word(st.path)}")
                print(f"C_{st.a} = {format_word(st.affine)}")
    print(format_word(path))
    return 0


def _relabel(p, a):
    from .crystal import CrystalElement

    n = p[0].n + a if p else 0
    return tuple(CrystalElement(n, (0,) * a + b.mult, a) for b in p)


def cmd_path2rc(args) -> int:
    try:
        if args.state is not None:
            word = _read_state(args.state, args.rank).word()
        else:
            word = parse_word(args.path, args.rank)
    except ValueError as exc:
        raise _ParseError(str(exc)) from exc
    if not word:
        raise _ParseError("empty path")
    if not is_highest(word):
        print("path is not highest", file=sys.stderr)
        return EXIT_INVALID
    rc = classical_path_to_rc(word)
    print(rc.to_json())
    if args.ascii:
        print(render_ascii(rc))
    return 0


def cmd_bbs_evolve(args) -> int:
    state = _read_state(args.state, args.rank)
    l = _resolve_carrier(args.carrier, state)
    trace = evolve_trace(state, l, args.steps)
    width = max(len(s.window) for s in trace)
    lines = [(t, s.render(width)) for t, s in enumerate(trace)]
    if args.format == "json":
        print(json.dumps([{"t": t, "state": s} for t, s in lines]))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["t", "state"])
        w.writerows(lines)
    else:
        for t, s in lines:
            print(f"t={t}: {s}")
    return 0


def _require_highest(state: BoxBallState) -> bool:
    if state.window and not is_highest(state.word()):
        print("state is not highest", file=sys.stderr)
        return False
    return True


def cmd_bbs_scatter(args) -> int:
    state = _read_state(args.state, args.rank)
    if not _require_highest(state):
        return EXIT_INVALID
    rc = to_rc(state)
    p1 = intermediate_path(rc, 1) if rc.n and rc.mu(1) else ()
    data = scattering_data(state)
    if args.format == "json":
        print(json.dumps({"p1": format_word(p1), "scattering": format_word(data), "rc": rc.to_dict()}))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["soliton", "mode"])
        w.writerows((str(b.element), b.mode) for b in data)
    else:
        print(f"p(1) = {format_word(p1)}")
        print(format_word(data))
    return 0


def cmd_bbs_action_angle(args) -> int:
    state = _read_state(args.state, args.rank)
    if not _require_highest(state):
        return EXIT_INVALID
    l = _resolve_carrier(args.carrier, state)
    rows = action_angle_report(state, l, args.steps, strict=False)
    if args.format == "json":
        print(json.dumps([
            {"t": r.t, "length": r.length, "levels": [{"mu": list(mu), "J": list(J)} for mu, J in r.levels],
             "ok": r.ok, "note": r.note}
            for r in rows
        ]))
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["t", "length", "level", "mu", "J", "ok"])
        for r in rows:
            for a, (mu, J) in enumerate(r.levels, start=1):
                w.writerow([r.t, r.length, a, " ".join(map(str, mu)), " ".join(map(str, J)), int(r.ok)])
    else:
        for r in rows:
            parts = " | ".join(f"mu{a}={list(mu)} J{a}={list(J)}" for a, (mu, J) in enumerate(r.levels, start=1))
            print(f"t={r.t} L={r.length} {parts}" + ("" if r.ok else f"  FAIL {r.note}"))
    failed = [r for r in rows if not r.ok]
    if failed:
        print(f"action-angle check failed: {failed[0].note}", file=sys.stderr)
        return EXIT_CHECK
    return 0


def cmd_selftest(args) -> int:
    suites = selftest.select(args.level, args.filter)
    if not suites:
        print(f"no suite matches {args.filter!r}", file=sys.stderr)
        return EXIT_PARSE
    ok = selftest.run(suites, sys.stdout)
    return 0 if ok else EXIT_CHECK


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kkr", description="Rigged configurations, highest paths and box-ball systems")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rc2path", help="rigged configuration -> highest path")
    p.add_argument("--rc", required=True, help="JSON file ('-' for stdin)")
    p.add_argument("--engine", choices=("vertex", "classical"), default="vertex")
    p.add_argument("--rank", type=int, help="embed into this rank (pads empty levels)")
    p.add_argument("--trace", action="store_true", help="print every intermediate path and affine word")
    p.set_defaults(func=cmd_rc2path)

    p = sub.add_parser("path2rc", help="highest path -> rigged configuration")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--path", help="factors joined by '*', e.g. 111*22*3")
    src.add_argument("--state", help="single boxes as a digit string, e.g. 1112213")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--ascii", action="store_true")
    p.set_defaults(func=cmd_path2rc)

    bbs = sub.add_parser("bbs", help="box-ball system").add_subparsers(dest="bbs_command", required=True)
    for name, func, evolving in (
        ("evolve", cmd_bbs_evolve, True),
        ("scatter", cmd_bbs_scatter, False),
        ("action-angle", cmd_bbs_action_angle, True),
    ):
        p = bbs.add_parser(name)
        p.add_argument("--state", required=True)
        p.add_argument("--rank", type=int, required=True)
        if evolving:
            p.add_argument("--carrier", type=_carrier, default="inf", help="capacity l, or 'inf'")
            p.add_argument("--steps", type=int, default=1)
        p.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")
        p.set_defaults(func=func)

    p = sub.add_parser("selftest", help="run the built-in checks")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--filter", help="run only suites whose name contains this")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if getattr(args, "steps", 0) < 0:
        print("steps must be nonnegative", file=sys.stderr)
        return EXIT_PARSE
    if getattr(args, "rank", 1) is not None and getattr(args, "rank", 1) < 1:
        print("rank must be positive", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except _ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotHighestError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

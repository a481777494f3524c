"""Command line front end: ``hibi-cx <command> <file> [options]``.

Exit codes: 0 success, 2 parse or validation error, 3 resource guard,
4 inconclusive result.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path as FsPath

from . import __version__
from .canonical import (
    canonical_generators,
    count_generators,
    enumerate_min_generators,
    is_anticanonical_level,
    is_level,
)
from .errors import (
    GuardExceededError,
    HibiError,
    InconclusiveError,
    PosetParseError,
    PreconditionError,
)
from .frobenius import complexity_report, finite_difference_degree, predicted_limit_cx
from .io import digest, parse_poset
from .poset import (
    HatPoset,
    build_hat,
    is_pure,
    min_subset,
    nonmin_subset,
    starting_points,
    upward_minimal_mixed_paths,
)

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_INCONCLUSIVE = 0, 2, 3, 4


def _table(h: HatPoset, t) -> dict:
    return {u: {v: t[i][j] for j, v in enumerate(h.vertices)} for i, u in enumerate(h.vertices)}


def cmd_info(h: HatPoset, args) -> dict:
    return {
        "elements": list(h.base.elements),
        "covers": [list(c) for c in h.base.sorted_covers()],
        "flags": {
            "gorenstein": is_pure(h),
            "level": is_level(h),
            "anticanonical_level": is_anticanonical_level(h),
        },
        "min_count": len(min_subset(h)),
        "nonmin_count": len(nonmin_subset(h)),
        "nonmin": sorted(nonmin_subset(h)),
        "starting_points": sorted(starting_points(h)),
        "upward_minimal_mixed_paths": [list(q.vertices) for q in upward_minimal_mixed_paths(h)],
        "dist": _table(h, h.dist_table),
        "disp": _table(h, h.disp_table),
    }


def cmd_generators(h: HatPoset, args) -> dict:
    gs = canonical_generators(h) if args.n == -1 else enumerate_min_generators(h, args.n)
    return gs.to_json(h)


def cmd_complexity(h: HatPoset, args) -> dict:
    return complexity_report(h, args.p, args.emax, args.nmax).to_json()


def cmd_limit(h: HatPoset, args) -> dict:
    pred = predicted_limit_cx(h, args.nmax)
    out = pred.to_json()
    out["rendered"] = pred.render()
    return out


def cmd_growth(h: HatPoset, args) -> dict:
    n_max = args.nmax if args.nmax is not None else len(h) + 3
    counts = count_generators(h, n_max)
    out = {"n_max": n_max, "h": counts}
    out["degree"] = finite_difference_degree(counts)
    return out


COMMANDS = {
    "info": cmd_info,
    "generators": cmd_generators,
    "complexity": cmd_complexity,
    "limit": cmd_limit,
    "growth": cmd_growth,
}


def _render_text(command: str, res: dict) -> str:
    if command == "complexity":
        lines = [f"p = {res['p']}", "e | c_e | log_p(c_e)/e"]
        for e, (c, r) in enumerate(zip(res["c"], res["log_rate"]), start=1):
            lines.append(f"{e} | {c} | {'-' if r is None else f'{r:.4f}'}")
        pl = res["predicted_limit"]
        val = "-inf" if pl["kind"] == "minus-infinity" else pl["value"]
        lines.append(f"predicted limit: {pl['kind']} ({val})")
        return "\n".join(lines)
    if command == "growth":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "h"])
        for n, c in enumerate(res["h"], start=1):
            w.writerow([n, c])
        return buf.getvalue().rstrip("\n")
    if command == "generators":
        lines = [f"n = {res['n']}: {res['count']} generators, degrees {sorted(set(res['degrees']))}"]
        for g in res["generators"]:
            lines.append("  " + " ".join(f"{k}={v}" for k, v in g.items()))
        return "\n".join(lines)
    if command == "limit":
        return f"predicted limit: {res['rendered']} ({res['kind']})"
    f = res["flags"]
    return "\n".join(
        [
            f"gorenstein: {f['gorenstein']}",
            f"level: {f['level']}",
            f"anticanonical_level: {f['anticanonical_level']}",
            f"|min|: {res['min_count']}  |nonmin|: {res['nonmin_count']} {res['nonmin']}",
            f"starting points: {res['starting_points']}",
        ]
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hibi-cx", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("file", help="poset file ('-' for stdin)")
    ap.add_argument("--n", type=int, default=1, help="module index for 'generators' (default 1)")
    ap.add_argument("--p", type=int, default=2, help="prime (default 2)")
    ap.add_argument("--emax", type=int, default=2, help="largest e (default 2)")
    ap.add_argument("--nmax", type=int, default=None, help="largest n for growth fits")
    fmt = ap.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
    ap.add_argument("--guard", type=int, default=None, help="maximum poset size")
    ap.add_argument("--version", action="version", version=f"hibi-cx {__version__}")
    ap.set_defaults(fmt="json")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        text = sys.stdin.read() if args.file == "-" else FsPath(args.file).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        name = "" if args.file == "-" else FsPath(args.file).stem
        p = parse_poset(text, name=name)
        h = build_hat(p, guard=args.guard)
        res = COMMANDS[args.command](h, args)
    except (PosetParseError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardExceededError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except HibiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.fmt == "text":
        print(_render_text(args.command, res))
    else:
        echo = {k: getattr(args, k) for k in ("command", "n", "p", "emax", "nmax")}
        echo["poset"] = p.name
        report = {
            "command": echo,
            "input_sha256": digest(text),
            "results": res,
            "version": __version__,
        }
        print(json.dumps(report, sort_keys=True, indent=2))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line entry point: ``spinlag verify <suite>`` and ``spinlag plot``.

Exit status: 0 when every check passes, 1 when any fails, 2 for usage
errors, 3 for I/O failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DomainError
from .poly_core import DEFAULT_PRECISION, Poly
from .suites import SUITE_NAMES, RunConfig, run

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULTS = {"seed": 0, "trials": 100, "precision": DEFAULT_PRECISION, "m": None,
            "sextic": None, "format": "json", "out": None, "timings": False}


class UsageError(Exception):
    pass


def parse_sextic(text) -> tuple:
    parts = text if isinstance(text, (list, tuple)) else str(text).split(",")
    try:
        cs = tuple(Fraction(str(c).strip()) for c in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad sextic coefficient list {text!r}: {exc}") from None
    if len(cs) != 7:
        raise UsageError(f"a sextic needs 7 coefficients c0..c6, got {len(cs)}")
    if cs[6] == 0:
        raise UsageError("the z^6 coefficient c6 must be nonzero")
    return cs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinlag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", choices=SUITE_NAMES + ("all",))
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--precision", type=int, help="working precision in bits")
    v.add_argument("--m", type=int, help="restrict the moment suite to one odd degree")
    v.add_argument("--sextic", help="c0,c1,...,c6 added to the trope suite")
    v.add_argument("--format", choices=("json", "text"))
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--config", help="JSON file of defaults; flags override it")
    v.add_argument("--timings", action="store_true", default=None,
                   help="include wall_time_ms (breaks byte-identical reports)")

    p = sub.add_parser("plot", help="SVG of real slices of the conic and trope sextic")
    p.add_argument("--sextic", required=True, help="c0,c1,...,c6")
    p.add_argument("--curve", choices=("conic", "sextic", "both"), default="both")
    p.add_argument("--chart", choices=("xi1", "xi2", "xi3"), default="xi3",
                   help="coordinate fixed to 1")
    p.add_argument("--mode", choices=("literal", "apolar"), default="literal")
    p.add_argument("--extent", type=float, default=2.0)
    p.add_argument("--out", required=True)
    return parser


def load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a JSON object")
    if "precision_bits" in data:
        data.setdefault("precision", data.pop("precision_bits"))
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return data


def resolve(args: argparse.Namespace) -> RunConfig:
    merged = dict(DEFAULTS)
    if args.config:
        merged.update(load_config(args.config))
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None:
            merged[key] = value
    if merged["format"] not in ("json", "text"):
        raise UsageError(f"format must be json or text, got {merged['format']!r}")
    if merged["trials"] < 1:
        raise UsageError("--trials must be positive")
    if merged["precision"] < 64:
        raise UsageError("--precision must be at least 64 bits")
    m = merged["m"]
    if m is not None and (m < 1 or m % 2 == 0):
        raise UsageError(f"--m must be odd and positive, got {m}")
    sextic = parse_sextic(merged["sextic"]) if merged["sextic"] is not None else None
    suites = SUITE_NAMES if args.suite == "all" else (args.suite,)
    return RunConfig(seed=int(merged["seed"]), precision_bits=int(merged["precision"]),
                     trials=int(merged["trials"]), suites=suites, output_path=merged["out"],
                     format=merged["format"], m=m, sextic=sextic, timings=bool(merged["timings"]))


def render(report, config: RunConfig) -> str:
    if config.format == "json":
        return json.dumps(report.to_dict(config.timings), sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"
    lines = []
    for r in report.results:
        extra = f"  [{r.wall_time_ms:.0f} ms]" if config.timings else ""
        lines.append(f"{r.status.upper():4}  {r.suite}/{r.name}  ({r.anchor}){extra}")
    lines.append(f"overall: {'pass' if report.passed else 'fail'}")
    return "\n".join(lines) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_verify(args) -> int:
    config = resolve(args)
    report = run(config)
    _emit(render(report, config), config.output_path)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_plot(args) -> int:
    from .plotting import plot_slice

    p = Poly(parse_sextic(args.sextic))
    summary = plot_slice(p, args.curve, args.out, args.chart, args.mode, args.extent)
    counts = ", ".join(f"{k}: {v} segments" for k, v in summary.curves.items())
    print(f"wrote {summary.path} ({counts})")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_plot(args)
    except (UsageError, DomainError) as exc:
        print(f"spinlag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"spinlag: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

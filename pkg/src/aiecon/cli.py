"""Command-line front end: ``aiecon <subcommand> ...``.

Exit status is 0 on success, 1 for usage or input errors and 2 for model or
domain errors. Numbers on stdout use 6 significant digits; files carry full
precision.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import io
from .calibration import PUBLISHED_ASSUMPTIONS, calibrate_phi_a, calibrate_phi_h
from .errors import InputError, ModelError
from .fitting import fit_gap_curve, fit_logistic, fit_quadratic
from .scenario import OVERRIDABLE, builtin_scenarios, compare, run, sensitivity_sweep

EXIT_OK, EXIT_USAGE, EXIT_MODEL = 0, 1, 2

FIT_PINS = {"quadratic": (), "logistic": ("saturation",), "gap": ("delta0", "beta_gap")}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def _print_table(header, rows, out=None):
    out = out or sys.stdout
    print("\t".join(header), file=out)
    for row in rows:
        print("\t".join(fmt(v) for v in row), file=out)


def _parse_assignments(items, flag, allowed):
    parsed = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise UsageError(f"{flag} {item!r}: expected key=value")
        if key not in allowed:
            raise UsageError(f"{flag} {key}: unknown parameter; known: {', '.join(allowed)}")
        if key == "agent_kind":
            parsed[key] = value.strip()
            continue
        try:
            parsed[key] = io.parse_number(value)
        except ValueError:
            raise UsageError(f"{flag} {key}={value!r}: not a number") from None
    return parsed


def _parse_formats(text):
    formats = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in formats if f not in io.EMIT_FORMATS]
    if bad or not formats:
        raise UsageError(f"--format: unknown format(s) {bad}; choose from {','.join(io.EMIT_FORMATS)}")
    return formats


def _resolve_scenarios(ref, args):
    path = Path(ref)
    if path.is_file():
        configs = list(io.load_registry(path).values())
    else:
        reg = builtin_scenarios()
        if ref not in reg:
            raise UsageError(f"unknown scenario {ref!r}; run 'list-scenarios' or pass a scenario file")
        configs = [reg[ref]]
    overrides = _parse_assignments(getattr(args, "set", None), "--set", OVERRIDABLE)
    out = []
    for cfg in configs:
        if overrides:
            cfg = cfg.with_overrides(**overrides)
        if getattr(args, "horizon", None) is not None:
            cfg = dataclasses.replace(cfg, horizon=args.horizon)
        out.append(cfg)
    return out


def _out_dir(args):
    if args.out:
        return Path(args.out)
    return io.default_out_dir()


def cmd_list(args):
    reg = builtin_scenarios()
    if args.dump:
        io.dump_registry(reg, args.dump)
        print(f"wrote {len(reg)} scenarios to {args.dump}")
        return EXIT_OK
    _print_table(("name", "model", "country", "description"),
                 ((c.name, c.model, c.profile.name, c.description) for c in reg.values()))
    return EXIT_OK


def cmd_simulate(args):
    formats = _parse_formats(args.format)
    out_dir = _out_dir(args)
    for cfg in _resolve_scenarios(args.scenario, args):
        result = run(cfg)
        print(f"# {cfg.name} (model {cfg.model})")
        _print_table(io.COLUMNS, (rec.values() for rec in result.records()))
        if out_dir is not None:
            manifest = io.RunManifest(args.scenario, out_dir, formats)
            for p in io.emit_result(result, manifest):
                print(f"wrote {p}", file=sys.stderr)
    return EXIT_OK


def cmd_compare(args):
    (a_cfg,) = _resolve_scenarios(args.a, args)[:1]
    (b_cfg,) = _resolve_scenarios(args.b, args)[:1]
    cmp = compare(run(a_cfg), run(b_cfg))
    print(f"# {cmp.a} vs {cmp.b}")
    _print_table(("t", "ratio", "enhancement_pct"),
                 zip(cmp.t.astype(int).tolist(), cmp.ratio.tolist(), cmp.enhancement_pct.tolist()))
    print(f"crossover_t\t{'none' if cmp.crossover_t is None else cmp.crossover_t}")
    out_dir = _out_dir(args)
    if out_dir is not None:
        print(f"wrote {io.emit_comparison(cmp, out_dir)}", file=sys.stderr)
    return EXIT_OK


def cmd_calibrate(args):
    obs = io.ingest_observations(args.obs)
    phi_h = calibrate_phi_h(obs[0], args.alpha)
    print(f"phi_h\t{fmt(phi_h)}\t(year {obs[0].year})")
    if args.phi_a:
        assume = io.load_assumptions(args.assumptions) if args.assumptions else PUBLISHED_ASSUMPTIONS
        phi_a = calibrate_phi_a(obs[-1], phi_h, args.alpha, assume)
        print(f"phi_a\t{fmt(phi_a)}\t(year {obs[-1].year})")
    elif args.assumptions:
        raise UsageError("--assumptions requires --phi-a")
    return EXIT_OK


def cmd_fit(args):
    pins = _parse_assignments(args.pin, "--pin", FIT_PINS[args.family])
    series = io.ingest_series(args.data)
    if args.family == "quadratic":
        res = fit_quadratic(series)
    elif args.family == "logistic":
        res = fit_logistic(series, saturation=pins.get("saturation", 1.0))
    else:
        res = fit_gap_curve(series, **pins)
    for name, value in res.params.items():
        print(f"{name}\t{fmt(value)}")
    print(f"rss\t{fmt(res.residual_sum_squares)}")
    print(f"converged\t{str(res.converged).lower()}")
    print(f"iterations\t{res.iterations}")
    return EXIT_OK


def cmd_sweep(args):
    if args.param not in OVERRIDABLE:
        raise UsageError(f"--param {args.param}: not overridable; known: {', '.join(OVERRIDABLE)}")
    try:
        grid = [io.parse_number(v) for v in args.grid.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--grid {args.grid!r}: values must be numbers") from None
    if not grid:
        raise UsageError("--grid: no values")
    (cfg,) = _resolve_scenarios(args.scenario, args)[:1]
    rows = sensitivity_sweep(cfg, args.param, grid)
    _print_table((args.param, "final_y_total", "mean_enhancement_pct"),
                 ((r.value, r.final_y_total, r.mean_enhancement_pct) for r in rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aiecon", description="Human/AI production model simulator.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-scenarios", help="list the built-in scenarios")
    p.add_argument("--dump", metavar="FILE", help="write the registry as an editable JSON document")
    p.set_defaults(func=cmd_list)

    def run_opts(p):
        p.add_argument("--horizon", type=int, metavar="T")
        p.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a parameter")
        p.add_argument("--out", metavar="DIR", help=f"output directory (default ${io.OUT_ENV})")

    p = sub.add_parser("simulate", help="run a scenario")
    p.add_argument("scenario", help="built-in name or scenario JSON file")
    run_opts(p)
    p.add_argument("--format", default="csv", help="comma list of csv,json,plotdata")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("compare", help="per-step ratio of two scenarios")
    p.add_argument("a")
    p.add_argument("b")
    run_opts(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("calibrate", help="back-solve baseline efficiencies")
    p.add_argument("--obs", required=True, metavar="FILE", help="CSV with year,gdp,capital,population")
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--phi-a", action="store_true", help="also calibrate AI efficiency on the latest row")
    p.add_argument("--assumptions", metavar="FILE", help="JSON with omega, s, delta, agents")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("fit", help="fit a curve to a t,value CSV")
    p.add_argument("family", choices=sorted(FIT_PINS))
    p.add_argument("--data", required=True, metavar="FILE")
    p.add_argument("--pin", action="append", metavar="KEY=VALUE")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("sweep", help="vary one parameter over a grid")
    p.add_argument("scenario")
    p.add_argument("--param", required=True)
    p.add_argument("--grid", required=True, help="comma-separated values")
    p.add_argument("--horizon", type=int, metavar="T")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InputError as exc:
        print(f"aiecon: input error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"aiecon: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ModelError as exc:
        print(f"aiecon: model error: {exc}", file=sys.stderr)
        return EXIT_MODEL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``rvcolor <subcommand> ...``."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io as gio
from .bounds import c_delta, lll_margin, split_palette, theorem_bound
from .colorizer import STRATEGIES, VertexColoring, partition_interface, run_strategy
from .dominator import build_strong_dominator, verify_strong_dominator
from .errors import DisconnectedGraphError, InvalidArgumentError, RVCError
from .experiment import UsageError, load_config, run_experiment
from .generators import caro_chain, classic, random_min_degree
from .graph import Graph, min_degree
from .sparsify import sparsify
from .verify import VerificationResult, exact_rvc, is_rvc, structural_verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

log = logging.getLogger("rvcolor")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(row[k]) for k in header))
    return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return f"{x:.4f}"
    return str(x)


def _load(path) -> Graph:
    return gio.read_edgelist(path)


def _params(items) -> dict[str, str]:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--params expects key=value, got {item!r}")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def cmd_gen(args) -> int:
    params = _params(args.params)
    try:
        if args.family == "caro":
            g = caro_chain(int(params["delta"]), int(params["m"]))
        elif args.family == "random":
            g = random_min_degree(int(params["n"]), int(params["delta"]), args.seed)
        else:
            name = params.pop("name")
            g = classic(name, *(int(params[k]) for k in sorted(params)))
    except KeyError as exc:
        raise UsageError(f"missing parameter {exc.args[0]!r} for family {args.family}") from None
    _emit(args, gio.format_edgelist(g))
    return EXIT_OK


def cmd_sparsify(args) -> int:
    g = _load(args.input)
    report = sparsify(g, args.delta)
    if args.out:
        gio.write_edgelist(report.result, args.out)
    row = {
        "n": g.n,
        "delta": args.delta,
        "edges_before": report.edges_before,
        "edges_after": report.edges_after,
        "edge_budget": _fmt(report.edge_budget),
        "within_budget": _fmt(report.within_budget),
    }
    sys.stdout.write(_csv(list(row), [row]))
    return EXIT_OK


def cmd_dominate(args) -> int:
    g = _load(args.input)
    report = build_strong_dominator(g, args.delta, args.start)
    violations = verify_strong_dominator(g, report.s, args.delta)
    row = {
        "n": g.n,
        "delta": args.delta,
        "start": args.start,
        "s_size": report.size,
        "k1": report.k1,
        "k2": report.k2,
        "size_bound": _fmt(report.size_bound),
        "within_bound": _fmt(report.within_bound),
        "strong": _fmt(not violations),
    }
    _emit(args, _csv(list(row), [row]))
    return EXIT_OK


def cmd_bounds(args) -> int:
    regime = theorem_bound(args.n, args.delta)
    row = {
        "n": args.n,
        "delta": args.delta,
        "regime": regime.tag,
        "theorem_applies": _fmt(regime.theorem_applies),
        "bound": _fmt(regime.bound_value),
        "c_delta": _fmt(c_delta(args.delta)) if args.delta > 3 else "",
        "lll_margin_high": _fmt(lll_margin(args.delta, 7)),
        "lll_margin_split": _fmt(lll_margin(args.delta, split_palette(args.delta))) if args.delta > 3 else "",
    }
    _emit(args, _csv(list(row), [row]))
    return EXIT_OK


def cmd_color(args) -> int:
    g = _load(args.input)
    report = run_strategy(g, args.strategy, args.delta, args.seed)
    if args.out_coloring:
        gio.write_coloring(list(report.coloring.colors), args.out_coloring)
    row = {
        "strategy": report.strategy,
        "regime": report.regime.tag,
        "n": g.n,
        "s_size": report.s_size,
        "d1_size": report.d1_size,
        "fringe_palette": report.fringe_palette,
        "resamples": report.resample_count,
        "escalations": report.escalations,
        "colors_used": report.colors_used,
        "theorem_bound": _fmt(report.bound_value),
        "bound_met": _fmt(report.bound_met),
        "verified": _fmt(report.verified),
    }
    _emit(args, _csv(list(row), [row]))
    return EXIT_OK if report.verified else EXIT_VERIFY_FAILED


def _structural(g: Graph, colors, delta: int | None) -> VerificationResult:
    """Rebuild S (on g, then on its sparsified form) and check the certificates."""
    delta = min_degree(g) if delta is None else delta
    if g.is_complete():
        return VerificationResult(True)
    if delta < 2:
        return VerificationResult(False, clause="structural mode needs delta >= 2")
    candidates = [g]
    if delta >= 6:
        candidates.append(sparsify(g, delta).result)
    result = None
    for h in candidates:
        s = build_strong_dominator(h, delta).s
        result = structural_verify(h, s, partition_interface(h, s, delta), colors)
        if result.ok:
            return result
    return result


def cmd_verify(args) -> int:
    g = _load(args.input)
    colors = gio.read_coloring(args.coloring, g.n)
    if args.mode == "exact":
        result = is_rvc(g, VertexColoring(tuple(colors)), budget=args.budget)
    else:
        result = _structural(g, colors, args.delta)
    status = "ok" if result.ok else ("inconclusive" if result.inconclusive else "not ok")
    detail = ""
    if not result.ok:
        detail = f" clause={result.clause} pair={result.failing_pair}"
    _emit(args, f"{status}{detail}\n")
    return result.exit_code


def cmd_exact(args) -> int:
    g = _load(args.input)
    _emit(args, f"{exact_rvc(g)}\n")
    return EXIT_OK


def cmd_experiment(args) -> int:
    text = Path(args.config).read_text() if args.config else ""
    overrides = list(args.set or ())
    if args.allow_unverified:
        overrides.append("allow_unverified = true")
    cfg = load_config(text, overrides)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            result = run_experiment(cfg, fh, args.threads)
    else:
        result = run_experiment(cfg, sys.stdout, args.threads)
    if result.unverified and not cfg.allow_unverified:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    def globals_parser(default):
        # Subcommands repeat the global flags with suppressed defaults so a
        # value given before the subcommand is not overwritten.
        common = _Parser(add_help=False)
        common.add_argument("--seed", type=int, default=default(0), help="random seed (default 0)")
        common.add_argument("--threads", type=int, default=default(1), help="worker processes for experiments")
        common.add_argument("--out", default=default(None), help="write the main output here instead of stdout")
        common.add_argument("-v", "--verbose", action="store_true", default=default(False))
        return common

    parser = _Parser(
        prog="rvcolor",
        description="Rainbow vertex-connection colorings.",
        parents=[globals_parser(lambda x: x)],
    )
    common = globals_parser(lambda x: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("--family", choices=("caro", "random", "classic"), required=True)
    p.add_argument(
        "--params",
        nargs="*",
        metavar="KEY=VALUE",
        help="caro: delta= m=; random: n= delta=; classic: name= plus positional p1=, p2=",
    )
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sparsify", parents=[common], help="greedy edge sparsification")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("dominate", parents=[common], help="connected strong 2-step dominating set")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--start", type=int, default=0)
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("bounds", parents=[common], help="evaluate the closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("color", parents=[common], help="compute a rainbow vertex-connected coloring")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--strategy", choices=("auto",) + STRATEGIES, default="auto")
    p.add_argument("--out-coloring")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="check a coloring")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", choices=("exact", "structural"), default="exact")
    p.add_argument("--delta", type=int)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", parents=[common], help="exact rvc of a graph with n <= 8")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("experiment", parents=[common], help="run a batch sweep to CSV")
    p.add_argument("--config")
    p.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a config key")
    p.add_argument("--allow-unverified", action="store_true")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, InvalidArgumentError, DisconnectedGraphError, OSError) as exc:
        print(f"rvcolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RVCError as exc:
        print(f"rvcolor: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())

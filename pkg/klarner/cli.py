"""
Command line interface for klarner.

Each subcommand runs one stage of the pipeline against a count table (the
packaged one unless ``--counts`` names another) and prints text, JSON or TSV.
Exit status is 0 on success, 1 when ``verify`` finds a check that disagrees
with the published results, and 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from .bounds import bound_report, build_g, delta_nonneg, lambda_lower_root
from .config import FORMATS, RunConfig, load_config
from .decimals import floor_decimal
from .enumeration import count_fixed, count_inconstructible
from .errors import KlarnerError, safe_call
from .geometry import compositions, decompose_balanced
from .parsers import load_counts, parse_polyomino
from .reports import render, render_json, render_tsv
from .sequences import (
    CountTable,
    check_split_bound,
    compute_u,
    derive_q,
    format_rational,
    lambda_lower,
    lift_int_digit_limit,
    scan_qp_decreasing,
    scan_ratios_increasing,
    supermultiplicative_violations,
    u_growth_ratio,
    u_nth_root,
)

logger = logging.getLogger(__name__)

# The published run evaluates g on both sides of its theta.
LOW_X = "0.24307"
HIGH_X = "0.24308"
EXPECTED_VERIFY = (True, True, True, False)

DEFAULT_ENUMERATE_MAX = 10
DEFAULT_U_EXTENSION = 100
RATIO_DIGITS = 6


def _emit(text: str) -> None:
    sys.stdout.write(text)
    sys.stdout.flush()


def _table(config: RunConfig) -> CountTable:
    table = load_counts(config.counts_path)
    if config.n0 is not None:
        return table.truncated(config.n0)
    return table


def _output_table(config: RunConfig, table: CountTable, name: str) -> None:
    if config.output_format == "json":
        _emit(table.to_json() + "\n")
    elif config.output_format == "tsv":
        _emit(table.to_tsv())
    else:
        _emit(render("table.txt.j2", name=name, table=table))


def cmd_enumerate(config: RunConfig) -> int:
    n_max = config.n_max or DEFAULT_ENUMERATE_MAX
    table = count_fixed(n_max, limit=config.count_limit, workers=config.workers, cache_path=config.cache_path)
    _output_table(config, table, "P")
    return 0


def cmd_derive_q(config: RunConfig) -> int:
    if config.direct:
        q = count_inconstructible(config.n_max or DEFAULT_ENUMERATE_MAX, limit=config.stream_limit)
    else:
        p = _table(config)
        if config.n_max is not None:
            p = p.truncated(min(config.n_max, p.max_n))
        q = derive_q(p)
    _output_table(config, q, "Q")
    return 0


def cmd_verify(config: RunConfig) -> int:
    p = _table(config)
    q = derive_q(p)
    increasing = scan_ratios_increasing(p)
    decreasing = scan_qp_decreasing(p, q)
    g = build_g(p, q, p.max_n)
    low = delta_nonneg(g, Fraction(LOW_X))
    high = delta_nonneg(g, Fraction(HIGH_X))
    results = (increasing.holds, decreasing.holds, low, high)

    if config.output_format == "json":
        _emit(render_json({
            "n0": p.max_n,
            "ratios_increasing": increasing.holds,
            "ratio_ties": list(increasing.ties),
            "qp_decreasing": decreasing.holds,
            "qp_ties": list(decreasing.ties),
            "g_checks": {LOW_X: low, HIGH_X: high},
        }))
    elif config.output_format == "tsv":
        _emit(render_tsv([
            ("n0", p.max_n),
            ("ratios_increasing", increasing.holds),
            ("qp_decreasing", decreasing.holds),
            (LOW_X, low),
            (HIGH_X, high),
        ]))
    else:
        _emit(render(
            "verify.txt.j2",
            n0=p.max_n,
            ratios_increasing=increasing.holds,
            qp_decreasing=decreasing.holds,
            low_x=LOW_X,
            low_holds=low,
            high_x=HIGH_X,
            high_holds=high,
        ))
    return 0 if results == EXPECTED_VERIFY else 1


def cmd_bound_upper(config: RunConfig) -> int:
    p = _table(config)
    report = bound_report(p, derive_q(p), p.max_n, config.digits, config.lambda_digits)
    if config.output_format == "json":
        _emit(render_json(report.to_dict()))
    elif config.output_format == "tsv":
        _emit(render_tsv((k, v) for k, v in report.to_dict().items() if k != "assumes"))
    else:
        _emit(render("bound_upper.txt.j2", report=report, r=format_rational(report.r)))
    return 0


def cmd_bound_lower(config: RunConfig) -> int:
    p = _table(config)
    ratio = lambda_lower(p)
    increasing = scan_ratios_increasing(p)
    split_failures = [n for n in range(2, p.max_n + 1) if not check_split_bound(p, n).ok]
    values: Dict[str, Any] = {
        "n": p.max_n,
        "ratio": format_rational(ratio),
        "ratio_decimal": floor_decimal(ratio, config.lambda_digits),
        "ratios_increasing": increasing.holds,
        "root_decimal": lambda_lower_root(p, config.lambda_digits),
        "supermultiplicative": not supermultiplicative_violations(p),
        "split_failures": split_failures,
    }
    if config.output_format == "json":
        _emit(render_json(values))
    elif config.output_format == "tsv":
        _emit(render_tsv((k, v) for k, v in values.items() if k != "split_failures"))
    else:
        _emit(render("bound_lower.txt.j2", **values))
    return 0


def cmd_u_seq(config: RunConfig) -> int:
    p = _table(config)
    n0 = p.max_n
    n_max = config.n_max if config.n_max is not None else min(n0 + DEFAULT_U_EXTENSION, config.u_cap)
    u = compute_u(p, derive_q(p), n0, n_max, cap=config.u_cap)
    if config.output_format == "json":
        _emit(render_json(u.to_dict()))
    elif config.output_format == "tsv":
        _emit(render_tsv((n, format_rational(u.value(n))) for n in range(1, u.n_max + 1)))
    else:
        ratios = [
            (n, floor_decimal(u_growth_ratio(u, n), RATIO_DIGITS)) for n in range(n0 + 1, u.n_max + 1)
        ]
        _emit(render(
            "u_seq.txt.j2",
            u=u,
            r=format_rational(u.r),
            ratios=ratios,
            root=u_nth_root(u, u.n_max, config.lambda_digits),
        ))
    return 0


def cmd_compositions(config: RunConfig) -> int:
    if len(config.shapes) != 2:
        raise KlarnerError("malformed", "compositions needs two polyominoes")
    x, y = (parse_polyomino(text) for text in config.shapes)
    shapes = sorted(poly.to_text() for poly in compositions(x, y))
    bound = 4 * len(x) * len(y)
    if config.output_format == "json":
        _emit(render_json({"x": x.to_text(), "y": y.to_text(), "count": len(shapes), "bound": bound,
                           "polyominoes": shapes}))
    elif config.output_format == "tsv":
        _emit("".join(f"{shape}\n" for shape in shapes))
    else:
        _emit(render("compositions.txt.j2", x=x.to_text(), y=y.to_text(), shapes=shapes, bound=bound))
    return 0


def cmd_decompose(config: RunConfig) -> int:
    if len(config.shapes) != 1:
        raise KlarnerError("malformed", "decompose needs one polyomino")
    w = parse_polyomino(config.shapes[0])
    split = decompose_balanced(w)
    part_a = " ".join(f"{c},{r}" for c, r in sorted(split.part_a))
    part_b = " ".join(f"{c},{r}" for c, r in sorted(split.part_b))
    if config.output_format == "json":
        _emit(render_json({"w": w.to_text(), "size_a": split.size_a, "part_a": part_a, "part_b": part_b}))
    elif config.output_format == "tsv":
        _emit(render_tsv([("part_a", part_a), ("part_b", part_b)]))
    else:
        _emit(render("decompose.txt.j2", w=w.to_text(), size_a=split.size_a, part_a=part_a,
                     size_b=len(split.part_b), part_b=part_b))
    return 0


HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    "enumerate": cmd_enumerate,
    "derive-q": cmd_derive_q,
    "verify": cmd_verify,
    "bound-upper": cmd_bound_upper,
    "bound-lower": cmd_bound_lower,
    "u-seq": cmd_u_seq,
    "compositions": cmd_compositions,
    "decompose": cmd_decompose,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--counts", help="Count table file (default: packaged table)")
    common.add_argument("--n0", type=int, help="Cutoff n0; the table is truncated there")
    common.add_argument("--digits", type=int, help="Decimal places of theta")
    common.add_argument("--lambda-digits", type=int, dest="lambda_digits", help="Decimal places of lambda bounds")
    common.add_argument("--max", type=int, dest="max", help="Largest n to compute")
    common.add_argument("--format", choices=FORMATS, help="Output format")
    common.add_argument("--workers", type=int, help="Enumeration worker processes")
    common.add_argument("--cache", help="Enumeration count cache file")
    common.add_argument("--config", help="YAML configuration file")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")

    p = argparse.ArgumentParser(
        prog="klarner", description="Polyomino counts and bounds on Klarner's constant"
    )
    sp = p.add_subparsers(dest="cmd", required=True)
    sp.add_parser("enumerate", parents=[common], help="Count fixed polyominoes up to --max")
    dq = sp.add_parser("derive-q", parents=[common], help="Inconstructible counts Q(n)")
    dq.add_argument("--direct", action="store_true", help="Count by enumeration instead of the recurrence")
    sp.add_parser("verify", parents=[common], help="Check both conjectures and g on both sides of theta")
    sp.add_parser("bound-upper", parents=[common], help="Search theta and bound lambda from above")
    sp.add_parser("bound-lower", parents=[common], help="Lower bounds on lambda and table checks")
    sp.add_parser("u-seq", parents=[common], help="The majorizing sequence U(n) up to --max")
    c = sp.add_parser("compositions", parents=[common], help="All compositions of two polyominoes")
    c.add_argument("shapes", nargs=2, metavar="POLYOMINO", help='Cells as "col,row col,row ..."')
    d = sp.add_parser("decompose", parents=[common], help="Balanced split of a polyomino")
    d.add_argument("shapes", nargs=1, metavar="POLYOMINO", help='Cells as "col,row col,row ..."')
    return p


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _cli_values(args: argparse.Namespace) -> Dict[str, Any]:
    values: Dict[str, Any] = {
        "command": args.cmd,
        "counts_path": args.counts,
        "n0": args.n0,
        "digits": args.digits,
        "lambda_digits": args.lambda_digits,
        "n_max": args.max,
        "output_format": args.format,
        "workers": args.workers,
        "cache_path": args.cache,
        "shapes": getattr(args, "shapes", None),
    }
    if getattr(args, "direct", False):
        values["direct"] = True
    return values


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    _configure_logging(args.verbose)
    lift_int_digit_limit()

    try:
        config = load_config(_cli_values(args), args.config, os.environ)
        return safe_call(HANDLERS[config.command], config.command, config)
    except (KlarnerError, OSError) as e:
        sys.stderr.write(f"klarner: error: {e}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""
Command-line front end.

    circburn exact --family m2 --n 12
    circburn formula --family 3reg --n 4
    circburn bounds --family general --n 20 --m 4
    circburn verify --n 12 --distances 1,2 --sequence 10,3,0
    circburn table --family m3 --n-range 7..40 --exact --out m3.csv
    circburn product --n 12 --distances 1,6 --h-n 2 --exact

Exit codes: 0 success, 1 usage, 2 verification mismatch, 3 exact cap exceeded.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, Tuple

from pydantic import ValidationError

from circburn.core.config.settings import settings
from circburn.core.errors.exceptions import BurningToolkitException
from circburn.features.bounds.service import cover_with_closed_forms
from circburn.features.reports.schemas import CampaignRequest, InstanceRequest
from circburn.features.reports.service import run_campaign, run_instance, spec_for, write_rows

logger = logging.getLogger("circburn")

FAMILIES = ("3reg", "m2", "m3", "general", "interval", "product")


class UsageExitParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> Tuple[int, int]:
    """'A..B' -> (A, B); a single integer is a one-element range."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            result = int(low), int(high)
        else:
            result = int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if result[0] > result[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return result


def parse_int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = UsageExitParser(prog="circburn", description="Burning numbers of circulant graphs")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="Logging level (default: settings)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageExitParser)

    def instance_flags(p: argparse.ArgumentParser, family_default: Optional[str] = None) -> None:
        p.add_argument("--family", choices=FAMILIES, default=family_default, required=family_default is None)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int)
        p.add_argument("--distances", type=parse_int_list, help="Explicit distance set, e.g. 1,4")

    def output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
        p.add_argument("--out", type=Path, help="Output path (default: stdout)")

    def exact_flags(p: argparse.ArgumentParser, with_switch: bool = True) -> None:
        if with_switch:
            p.add_argument("--exact", action="store_true", help="Run the exhaustive solver")
        p.add_argument("--exact-cap", type=int, default=None, help=f"Largest order for --exact (default {settings.EXACT_CAP})")

    p = sub.add_parser("exact", help="Exact burning number plus all bounds for one instance")
    instance_flags(p)
    exact_flags(p, with_switch=False)
    output_flags(p)

    for name, text in (("formula", "Closed form for one instance"), ("bounds", "All bounds for one instance")):
        p = sub.add_parser(name, help=text)
        instance_flags(p)
        exact_flags(p)
        output_flags(p)

    p = sub.add_parser("verify", help="Check a burning sequence with verify_cover")
    instance_flags(p, family_default="general")
    p.add_argument("--sequence", type=parse_int_list, required=True)

    p = sub.add_parser("table", help="Campaign over an n range (and m range)")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n-range", type=parse_range, required=True)
    p.add_argument("--m-range", type=parse_range)
    p.add_argument("--workers", type=int, default=settings.CAMPAIGN_WORKERS)
    exact_flags(p)
    output_flags(p)

    p = sub.add_parser("product", help="Lexicographic product G.H with the b(G) <= b(G.H) <= b(G)+2 sandwich")
    instance_flags(p, family_default="product")
    p.add_argument("--h-n", type=int, default=2)
    p.add_argument("--h-distances", type=parse_int_list, default=(1,))
    exact_flags(p)
    output_flags(p)
    return parser


def _emit(rows, fmt: str, out: Optional[Path]) -> None:
    if out is None:
        write_rows(rows, fmt, sys.stdout)
        return
    with out.open("w", encoding="utf-8", newline="") as handle:
        write_rows(rows, fmt, handle)


def _instance_request(args: argparse.Namespace, exact: bool) -> InstanceRequest:
    return InstanceRequest(
        family=args.family,
        n=args.n,
        m=args.m,
        distances=args.distances,
        exact=exact,
        exact_cap=getattr(args, "exact_cap", None),
        h_n=getattr(args, "h_n", 2),
        h_distances=getattr(args, "h_distances", (1,)),
    )


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        spec = spec_for(_instance_request(args, exact=False))
        burns = cover_with_closed_forms(spec, args.sequence)
        print(f"{spec.label()} sequence {','.join(map(str, args.sequence))}: {'burns' if burns else 'does not burn'}")
        return 0 if burns else 2

    if args.command == "table":
        request = CampaignRequest(
            family=args.family,
            n_range=args.n_range,
            m_range=args.m_range,
            exact=args.exact,
            exact_cap=args.exact_cap,
            format=args.format,
            workers=args.workers,
        )
        if args.out is None:
            summary = run_campaign(request, sys.stdout)
        else:
            with args.out.open("w", encoding="utf-8", newline="") as handle:
                summary = run_campaign(request, handle)
        print(summary.line(), file=sys.stderr)
        return summary.exit_code

    exact = args.command == "exact" or args.exact
    row = run_instance(_instance_request(args, exact=exact))
    _emit([row], args.format, args.out)
    return 2 if row.mismatch else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _run(args)
    except BurningToolkitException as exc:
        logger.error(f"{exc.error_code}: {exc.detail}")
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

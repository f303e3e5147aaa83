#!/usr/bin/env python3
"""
Command-line interface for bottforge.

Subcommands:
1. roots       - Cartan data and positive roots of a type
2. bott        - H^*(lambda) of a line bundle
3. demazure    - H^*(M_{alpha,r}(lambda)) with its Euler check
4. rank1       - H^*(M_{alpha,1}(lambda)) by the two-weight formula
5. euler-check - Euler-characteristic oracle for one query
6. sweep       - exhaustive or sampled oracle sweep over a coordinate box
7. selftest    - bundled A1/A2/B2/G2 sweeps
8. batch       - JSON-lines queries, one result per line, in input order

Weights are comma-separated integers in FUNDAMENTAL-WEIGHT coordinates, i.e. the
i-th entry is <lambda, alpha_i^v>. Simple roots use Bourbaki numbering, 1-based.
"""

import sys
import time
import logging
import argparse
import traceback
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, TextIO

import colorama

from . import config, render
from .batch import run_batch_lines
from .bott import line_bundle_cohomology, line_bundle_description
from .demazure import case_classify, cohomology, cohomology_rank1
from .errors import BottforgeError, OracleMismatchError
from .oracle import (
    case_code,
    euler_identity_check,
    duality_sweep,
    query_echo,
    selftest,
    theorem_agreement_sweep,
)
from .rootsys import CartanType, RootSystem, Weight, build_root_system

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

COMMANDS = ("bott", "demazure", "rank1", "euler-check")


class UsageError(BottforgeError):
    pass


@dataclass(frozen=True)
class Query:
    command: str
    series: str
    rank: int
    lam: List[int]
    alpha: Optional[int] = None
    r: Optional[int] = None

    def root_system(self) -> RootSystem:
        return build_root_system(CartanType(self.series, self.rank))

    def weight(self, rs: RootSystem) -> Weight:
        return rs.make_weight(self.lam)

    def validate(self) -> RootSystem:
        rs = self.root_system()
        self.weight(rs)
        if self.command in ("demazure", "rank1", "euler-check"):
            if self.alpha is None:
                raise UsageError(f"{self.command} needs alpha")
            rs.check_index(self.alpha)
        if self.command in ("demazure", "euler-check"):
            if self.r is None or self.r < 0:
                raise UsageError(f"{self.command} needs a nonnegative r")
        return rs

    @classmethod
    def from_json(cls, obj: Dict[str, Any]) -> "Query":
        command = obj.get("command", "demazure")
        if command not in COMMANDS:
            raise UsageError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
        try:
            if not isinstance(obj["lambda"], list):
                raise UsageError(f"lambda must be a JSON list of integers, got {obj['lambda']!r}")
            lam = [int(x) for x in obj["lambda"]]
            return cls(
                command=command,
                series=str(obj["type"]),
                rank=int(obj["rank"]),
                lam=lam,
                alpha=None if obj.get("alpha") is None else int(obj["alpha"]),
                r=None if obj.get("r") is None else int(obj["r"]),
            )
        except KeyError as e:
            raise UsageError(f"query is missing {e.args[0]!r}")
        except (TypeError, ValueError) as e:
            raise UsageError(f"malformed query: {e}")


def parse_weight(text: str) -> List[int]:
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights are comma-separated integers, got {text!r}")


# Payloads shared by single queries and batch mode


def bott_payload(query: Query) -> Dict[str, Any]:
    rs = query.validate()
    lam = query.weight(rs)
    outcome = line_bundle_cohomology(rs, lam)
    return render.envelope(query_echo(rs, lam), **render.bott_fields(outcome))


def demazure_payload(query: Query) -> Dict[str, Any]:
    rs = query.validate()
    lam = query.weight(rs)
    desc = cohomology(rs, query.alpha, query.r, lam, checked=False)
    report = euler_identity_check(rs, query.alpha, query.r, lam)
    return render.envelope(
        query_echo(rs, lam, query.alpha, query.r),
        case=case_code(rs, query.alpha, query.r, lam),
        cohomology=render.cohomology_to_json(desc),
        euler_check=report.verdict,
    )


def rank1_payload(query: Query) -> Dict[str, Any]:
    rs = query.validate()
    lam = query.weight(rs)
    desc = cohomology_rank1(rs, query.alpha, lam)
    return render.envelope(query_echo(rs, lam, query.alpha, 1), cohomology=render.cohomology_to_json(desc))


def euler_payload(query: Query) -> Dict[str, Any]:
    rs = query.validate()
    report = euler_identity_check(rs, query.alpha, query.r, query.weight(rs))
    fields = render.report_to_json(report)
    fields.pop("query")
    return render.envelope(report.query, **fields)


PAYLOADS = {
    "bott": bott_payload,
    "demazure": demazure_payload,
    "rank1": rank1_payload,
    "euler-check": euler_payload,
}


def evaluate_json_query(obj: Dict[str, Any]) -> Dict[str, Any]:
    query = Query.from_json(obj)
    return PAYLOADS[query.command](query)


def payload_failed(payload: Dict[str, Any]) -> bool:
    return "error" in payload or payload.get("euler_check") == "fail" or payload.get("verdict") == "fail"


# Argument parsing


def _normalize_argv(argv: Sequence[str]) -> List[str]:
    """Join '--lambda -2,1' into '--lambda=-2,1' so argparse does not read it as a flag."""
    out: List[str] = []
    tokens = list(argv)
    i = 0
    while i < len(tokens):
        token = tokens[i]
        if token in ("--lambda", "-l") and i + 1 < len(tokens):
            out.append(f"--lambda={tokens[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=str, help="Write output to this file instead of standard output")
    common.add_argument("--debug", "-d", action="store_true", help="Debug mode - show verbose logging")
    common.add_argument("--quiet", "-q", action="store_true", help="Quiet mode - only log errors")
    common.add_argument("--no-color", action="store_true", help="Plain text output without colours")

    # Only the cohomology tables have a LaTeX rendering
    plain = argparse.ArgumentParser(add_help=False)
    plain.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    tabular = argparse.ArgumentParser(add_help=False)
    tabular.add_argument("--format", choices=["text", "json", "latex"], default="text", help="Output format")

    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", required=True, help="Cartan series: A, B, C, D, E, F or G")
    typed.add_argument("--rank", type=int, required=True, help="Rank of the root system")

    weighted = argparse.ArgumentParser(add_help=False)
    weighted.add_argument(
        "--lambda", "-l", dest="lam", type=parse_weight, required=True,
        help="Weight in fundamental-weight coordinates, e.g. 2,-1",
    )

    parser = argparse.ArgumentParser(
        prog="bottforge",
        description="Exact cohomology of line bundles and generalized Demazure modules",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common, plain, typed], help="Show Cartan data and positive roots")
    sub.add_parser("bott", parents=[common, tabular, typed, weighted], help="Line bundle cohomology H^*(lambda)")

    for name, text in [
        ("demazure", "Cohomology of M_{alpha,r}(lambda)"),
        ("euler-check", "Euler-characteristic oracle for one query"),
    ]:
        formats = tabular if name == "demazure" else plain
        p = sub.add_parser(name, parents=[common, formats, typed, weighted], help=text)
        p.add_argument("--alpha", type=int, required=True, help="1-based simple root index")
        p.add_argument("--r", type=int, required=True, help="Nonnegative string length parameter")

    p = sub.add_parser("rank1", parents=[common, tabular, typed, weighted], help="Cohomology of M_{alpha,1}(lambda)")
    p.add_argument("--alpha", type=int, required=True, help="1-based simple root index")

    p = sub.add_parser("sweep", parents=[common, plain, typed], help="Oracle sweep over a coordinate box")
    p.add_argument("--radius", type=int, default=3, help="Coordinates range over [-radius, radius]")
    p.add_argument("--r-max", type=int, default=3, help="Largest r checked")
    p.add_argument("--samples", type=int, help="Sample this many weights instead of the full box")
    p.add_argument("--seed", type=int, default=0, help="Seed for --samples")
    p.add_argument("--threads", type=int, help="Worker threads (default: BOTTFORGE_THREADS)")
    p.add_argument("--no-duality", action="store_true", help="Skip the Serre duality sweep")

    p = sub.add_parser("selftest", parents=[common, plain], help="Run the bundled oracle sweeps")
    p.add_argument("--threads", type=int, help="Worker threads (default: BOTTFORGE_THREADS)")

    p = sub.add_parser("batch", parents=[common, plain], help="Evaluate JSON-lines queries")
    p.add_argument("--in", dest="infile", default="-", help="Input file with one JSON query per line ('-' for stdin)")
    p.add_argument("--threads", type=int, help="Worker threads (default: BOTTFORGE_THREADS)")

    return parser


def _configure_logging(args):
    logging.basicConfig(level=config.log_level(), format=LOG_FORMAT, stream=sys.stderr)
    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)
    elif args.quiet:
        logging.getLogger().setLevel(logging.ERROR)


# Subcommands; each returns (text, exit code)


def cmd_roots(args) -> tuple:
    rs = build_root_system(CartanType(args.type, args.rank))
    if args.format == "json":
        return render.dump_json(render.roots_to_json(rs)) + "\n", EXIT_OK
    return render.text_roots(rs), EXIT_OK


def _query_from_args(args, command: str) -> Query:
    return Query(
        command=command,
        series=args.type,
        rank=args.rank,
        lam=args.lam,
        alpha=getattr(args, "alpha", None),
        r=1 if command == "rank1" else getattr(args, "r", None),
    )


def cmd_bott(args) -> tuple:
    query = _query_from_args(args, "bott")
    if args.format == "json":
        return render.dump_json(bott_payload(query)) + "\n", EXIT_OK
    rs = query.validate()
    lam = query.weight(rs)
    if args.format == "latex":
        return render.latex_table(line_bundle_description(rs, lam), f"type {rs}, lambda {lam}"), EXIT_OK
    return render.text_bott(lam, line_bundle_cohomology(rs, lam)), EXIT_OK


def cmd_demazure(args) -> tuple:
    query = _query_from_args(args, "demazure")
    rs = query.validate()
    lam = query.weight(rs)
    if args.format == "json":
        payload = demazure_payload(query)
        return render.dump_json(payload) + "\n", EXIT_CHECK_FAILED if payload_failed(payload) else EXIT_OK

    desc = cohomology(rs, query.alpha, query.r, lam, checked=False)
    report = euler_identity_check(rs, query.alpha, query.r, lam)
    code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
    case = case_label_text(rs, query.alpha, query.r, lam)
    if args.format == "latex":
        comment = f"type {rs}, lambda {lam}, alpha {query.alpha}, r {query.r}"
        return render.latex_table(desc, comment, case), code
    lines = [render.heading(f"H^*(M_(alpha_{query.alpha},{query.r}){lam}) over {rs}")]
    lines.append(f"case: {case}")
    lines.extend(render.text_cohomology(desc))
    lines.append(f"euler check: {render.verdict_text(report.verdict)}")
    return "\n".join(lines) + "\n", code


def case_label_text(rs: RootSystem, alpha: int, r: int, lam: Weight) -> str:
    if r == 0:
        return "R0 (line bundle)"
    return str(case_classify(lam[alpha - 1], r))


def cmd_rank1(args) -> tuple:
    query = _query_from_args(args, "rank1")
    if args.format == "json":
        return render.dump_json(rank1_payload(query)) + "\n", EXIT_OK
    rs = query.validate()
    lam = query.weight(rs)
    desc = cohomology_rank1(rs, query.alpha, lam)
    if args.format == "latex":
        return render.latex_table(desc, f"type {rs}, lambda {lam}, alpha {query.alpha}, r 1"), EXIT_OK
    lines = [render.heading(f"H^*(M_(alpha_{query.alpha},1){lam}) over {rs}")]
    lines.extend(render.text_cohomology(desc))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_euler_check(args) -> tuple:
    query = _query_from_args(args, "euler-check")
    rs = query.validate()
    report = euler_identity_check(rs, query.alpha, query.r, query.weight(rs))
    code = EXIT_OK if report.passed else EXIT_CHECK_FAILED
    if args.format == "json":
        return render.dump_json(euler_payload(query)) + "\n", code
    return render.text_report(report), code


def _summaries_output(args, summaries) -> tuple:
    ok = all(s.ok for s in summaries)
    code = EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.format == "json":
        payload = {
            "schema": render.SCHEMA_VERSION,
            "sweeps": [render.summary_to_json(s) for s in summaries],
            "verdict": "pass" if ok else "fail",
        }
        return render.dump_json(payload) + "\n", code
    return "".join(render.text_summary(s) for s in summaries), code


def cmd_sweep(args) -> tuple:
    rs = build_root_system(CartanType(args.type, args.rank))
    workers = config.worker_count(args.threads)
    summaries = [
        theorem_agreement_sweep(
            rs, args.radius, args.r_max, samples=args.samples, seed=args.seed, workers=workers
        )
    ]
    if not args.no_duality:
        summaries.append(duality_sweep(rs, args.radius, workers=workers))
    return _summaries_output(args, summaries)


def cmd_selftest(args) -> tuple:
    return _summaries_output(args, selftest(config.worker_count(args.threads)))


def cmd_batch(args) -> tuple:
    workers = config.worker_count(args.threads)
    if args.infile == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.infile, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    logger.info(f"Evaluating {len(lines)} batch lines on {workers} threads")
    out_lines = []
    failed = False
    for payload in run_batch_lines(lines, evaluate_json_query, workers):
        failed = failed or payload_failed(payload)
        out_lines.append(render.dump_json(payload))
    text = "".join(line + "\n" for line in out_lines)
    return text, EXIT_CHECK_FAILED if failed else EXIT_OK


HANDLERS = {
    "roots": cmd_roots,
    "bott": cmd_bott,
    "demazure": cmd_demazure,
    "rank1": cmd_rank1,
    "euler-check": cmd_euler_check,
    "sweep": cmd_sweep,
    "selftest": cmd_selftest,
    "batch": cmd_batch,
}


def run(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one subcommand and write its serialized output.

    Returns:
        0 on success, 1 when a computation-level check fails, 2 on usage errors
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_normalize_argv(argv))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    _configure_logging(args)
    render.set_color(args.format == "text" and not args.no_color and not args.out)

    start_time = time.time()
    try:
        text, code = HANDLERS[args.command](args)
    except OracleMismatchError as e:
        logger.error(f"Check failed in {args.command}: {e}")
        return EXIT_CHECK_FAILED
    except BottforgeError as e:
        logger.debug(traceback.format_exc())
        parser.print_usage(err)
        err.write(f"bottforge {args.command}: error: {e}\n")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"Error in {args.command}: {str(e)}")
        logger.error(traceback.format_exc())
        return EXIT_CHECK_FAILED

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        out.write(text)
        out.flush()

    elapsed_time = time.time() - start_time
    logger.info(f"{args.command} completed in {elapsed_time:.2f} seconds (exit {code})")
    return code


def main():
    colorama.init()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

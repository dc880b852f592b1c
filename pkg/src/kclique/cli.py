"""Command line interface: ``kclique {solve,sweep,power,verify}``.

Exit status is 0 on success (an optimal solve, a passing verify), 2 when a
node or time limit cut a solve short, and 1 on errors or a failing verify.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from kclique.bench import SelfCheckError, probability_grid, run_instance, sweep, write_sweep_csv
from kclique.graph import Graph, ParseError, parse_dimacs, parse_edge_list, write_dimacs
from kclique.oracle import verify_clique, verify_k_clique, verify_k_club
from kclique.power import power_graph
from kclique.solver import SolverOptions

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ABORTED = 2

log = logging.getLogger("kclique")


class CliError(Exception):
    pass


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        return "dimacs" if stripped[0] in "cpe" else "edges"
    return "edges"


def load_graph(path: str, fmt: str = "auto") -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    if fmt == "auto":
        fmt = _detect_format(text)
    try:
        return parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _read_labels(path: str) -> list[int]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    labels = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for tok in line.split():
            try:
                labels.append(int(tok))
            except ValueError:
                raise CliError(f"{path}: line {lineno}: non-integer label {tok!r}") from None
    return labels


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args.file, args.format)
    opts = SolverOptions(
        use_domination=not args.no_domination,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
    )
    try:
        record, solution = run_instance(g, Path(args.file).name, args.k, opts, check=not args.no_check)
    except SelfCheckError as exc:
        raise CliError(str(exc)) from exc
    print(record.to_tsv(solution.sorted_members()))
    return EXIT_OK if solution.optimal else EXIT_ABORTED


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        grid = probability_grid(args.p_min, args.p_max, args.p_step)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.samples < 1:
        raise CliError("--samples must be at least 1")
    if args.n < 0:
        raise CliError("--n must be non-negative")
    records = sweep(
        args.n,
        args.k,
        grid,
        args.samples,
        seed=args.seed,
        use_domination=args.domination,
        jobs=args.jobs,
    )
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                write_sweep_csv(records, fh)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        write_sweep_csv(records, sys.stdout)
    return EXIT_OK


def cmd_power(args: argparse.Namespace) -> int:
    g = power_graph(load_graph(args.file, args.format), args.k)
    if args.out and args.out != "-":
        try:
            with open(args.out, "w", newline="\n") as fh:
                write_dimacs(g, fh)
        except OSError as exc:
            raise CliError(f"cannot write {args.out}: {exc.strerror or exc}") from exc
    else:
        write_dimacs(g, sys.stdout)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.file, args.format)
    labels = _read_labels(args.solution)
    missing = [label for label in labels if label not in g.labels]
    if missing:
        raise CliError(f"labels not in graph: {' '.join(map(str, missing))}")
    if args.mode == "clique":
        ok = verify_clique(g, labels)
    elif args.mode == "kclique":
        ok = verify_k_clique(g, args.k, labels)
    else:
        ok = verify_k_club(g, args.k, labels)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_ERROR


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kclique", description="Exact maximum k-clique search.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="graph file")
        p.add_argument(
            "--format",
            choices=("auto", "dimacs", "edges"),
            default="auto",
            help="input format (default: detect from content)",
        )

    p = sub.add_parser("solve", help="find a maximum k-clique and print one TSV record")
    add_input(p)
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--no-domination", action="store_true", help="disable lazy global domination")
    p.add_argument("--node-limit", type=_positive_int)
    p.add_argument("--time-limit", type=_positive_float, help="seconds")
    p.add_argument("--no-check", action="store_true", help="skip re-verifying the answer")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="mean k-clique size and nodes over G(n, p) samples, as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=_positive_int, default=2)
    p.add_argument("--p-min", type=float, default=0.0)
    p.add_argument("--p-max", type=float, default=1.0)
    p.add_argument("--p-step", type=float, default=0.05)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--domination", action="store_true", help="enable lazy global domination")
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("power", help="write G^k in DIMACS format")
    add_input(p)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="check a vertex set against a graph")
    add_input(p)
    p.add_argument("solution", help="file of whitespace-separated vertex labels")
    p.add_argument("--k", type=_positive_int, default=1)
    p.add_argument("--mode", choices=("clique", "kclique", "kclub"), default="kclique")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"kclique: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface: one executable, subcommand per analysis.

Every JSON document carries schema_version, the seed, and graph provenance
(file hash or generator spec), and is serialized deterministically so that
identical argv gives byte-identical output no matter the thread count.

Exit codes: 0 success, 2 usage error (bad flags, malformed generator spec),
1 guard or numeric error (size limits, invalid inputs, sampling failure).
"""

from __future__ import annotations

import argparse
import sys

from . import kernels
from .bounds import ROUTE_EXACT, ROUTE_SPECTRAL, build_bound_table, check_hypotheses
from .errors import DomainError, StrongOrientError
from .exposure import (
    ENUMERATE_MAX_K,
    count_exposure_sequences,
    enumerate_exposure_sequences,
    lemma_checks,
)
from .generators import build_graph, parse_genspec
from .graph import cheeger_constant_exact, format_graph, load_graph
from .orientation import (
    mc_sink_statistics,
    mc_strong_probability,
    orientation_census,
)
from .reporting import (
    csv_table,
    dumps,
    envelope,
    error_line,
    file_provenance,
    genspec_provenance,
)
from .sieve import example1_experiment, sieve_sandwich, sieve_term
from .spectral import spectrum

_ROUTES = {"exact": ROUTE_EXACT, "spectral": ROUTE_SPECTRAL}
_CSV_SUBCOMMANDS = ("bounds-table", "exposure")


class UsageError(Exception):
    """Bad argv shape; maps to exit code 2."""


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: '{text}'")
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _add_graph_source(p: argparse.ArgumentParser):
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph", metavar="FILE", help="edge-list file")
    grp.add_argument(
        "--gen", metavar="SPEC", help="generator spec family:param[,param...]"
    )


def _add_common(p: argparse.ArgumentParser, threads: bool = False):
    p.add_argument("--seed", type=_u64, default=0, help="64-bit seed (default 0)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", metavar="PATH", help="write output to PATH")
    if threads:
        p.add_argument(
            "--threads", type=_positive, default=None,
            help="worker threads (never changes output bytes)",
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongorient",
        description="Random strong orientations: exact Cheeger constants, "
        "spectra, orientation censuses, Monte Carlo sampling, and the "
        "accompanying combinatorial bounds.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("generate", help="emit a generated graph as edge-list text")
    p.add_argument("--gen", metavar="SPEC", required=True)
    _add_common(p)

    p = sub.add_parser("cheeger", help="exact Cheeger constant (n <= 24)")
    _add_graph_source(p)
    _add_common(p, threads=True)

    p = sub.add_parser("spectrum", help="normalized Laplacian eigenvalues")
    _add_graph_source(p)
    _add_common(p)

    p = sub.add_parser("orient-mc", help="Monte Carlo strong-connectivity rate")
    _add_graph_source(p)
    p.add_argument("--trials", type=_positive, default=1000)
    _add_common(p, threads=True)

    p = sub.add_parser("census", help="exact orientation census (m <= 24)")
    _add_graph_source(p)
    _add_common(p, threads=True)

    p = sub.add_parser("sinks", help="sampled sink-count statistics")
    _add_graph_source(p)
    p.add_argument("--trials", type=_positive, default=1000)
    _add_common(p, threads=True)

    p = sub.add_parser("theorem-check", help="main-theorem hypothesis check")
    _add_graph_source(p)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--xi", type=float, default=4.1)
    p.add_argument("--route", choices=("exact", "spectral"), default="exact")
    _add_common(p, threads=True)

    p = sub.add_parser("bounds-table", help="failure-probability bound table")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--delta", type=_positive, required=True)
    p.add_argument("--phi", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("exposure", help="exposure-sequence combinatorics")
    p.add_argument("--k", type=_positive, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list", dest="mode", action="store_const", const="list")
    mode.add_argument("--count", dest="mode", action="store_const", const="count")
    mode.add_argument("--lemma", dest="mode", action="store_const", const="lemma")
    p.set_defaults(mode="count")
    _add_common(p)

    p = sub.add_parser("sieve", help="sink-event sieve sums")
    _add_graph_source(p)
    p.add_argument("--k", type=_positive, required=True)
    _add_common(p)

    p = sub.add_parser("example1", help="disconnection experiment on "
                       "random regular graphs")
    p.add_argument("--t", type=_positive, required=True)
    p.add_argument("--trials", type=_positive, default=1000)
    _add_common(p, threads=True)

    return parser


def _resolve_graph(args):
    """Graph plus provenance dict from --graph or --gen."""
    if getattr(args, "graph", None):
        g = load_graph(args.graph)
        return g, file_provenance(args.graph, g)
    try:
        spec = parse_genspec(args.gen)
    except DomainError as e:
        raise UsageError(str(e))
    g = build_graph(spec, args.seed)
    return g, genspec_provenance(spec, args.seed, g)


def _cmd_generate(args) -> str:
    try:
        spec = parse_genspec(args.gen)
    except DomainError as e:
        raise UsageError(str(e))
    g = build_graph(spec, args.seed)
    header = f"# {spec.spec_string()} seed={args.seed}\n"
    return header + format_graph(g)


def _cmd_cheeger(args) -> str:
    g, prov = _resolve_graph(args)
    rep = cheeger_constant_exact(g)
    return dumps(envelope("cheeger", rep.to_json_dict(), args.seed, prov))


def _cmd_spectrum(args) -> str:
    g, prov = _resolve_graph(args)
    rep = spectrum(g)
    return dumps(envelope("spectrum", rep.to_json_dict(), args.seed, prov))


def _cmd_orient_mc(args) -> str:
    g, prov = _resolve_graph(args)
    rep = mc_strong_probability(g, args.trials, args.seed)
    return dumps(envelope("orient-mc", rep.to_json_dict(), args.seed, prov))


def _cmd_census(args) -> str:
    g, prov = _resolve_graph(args)
    rep = orientation_census(g)
    return dumps(envelope("census", rep.to_json_dict(), args.seed, prov))


def _cmd_sinks(args) -> str:
    g, prov = _resolve_graph(args)
    rep = mc_sink_statistics(g, args.trials, args.seed)
    return dumps(envelope("sinks", rep.to_json_dict(), args.seed, prov))


def _cmd_theorem_check(args) -> str:
    g, prov = _resolve_graph(args)
    rep = check_hypotheses(g, args.alpha, args.xi, route=_ROUTES[args.route])
    return dumps(envelope("theorem-check", rep.to_json_dict(), args.seed, prov))


def _cmd_bounds_table(args) -> str:
    table = build_bound_table(args.n, args.alpha, args.delta, phi=args.phi)
    if args.format == "csv":
        rows = [["regime1", k, v] for k, v in table.regime1]
        rows += [["regime2", k, v] for k, v in table.regime2]
        rows += [
            ["regime1_sum", None, table.regime1_sum],
            ["regime2_sum", None, table.regime2_sum],
            ["total", None, table.total],
        ]
        return csv_table(["section", "k", "bound"], rows)
    return dumps(envelope("bounds-table", table.to_json_dict(), args.seed, None))


def _cmd_exposure(args) -> str:
    k = args.k
    if args.mode == "count":
        report = {"k": k, "count": count_exposure_sequences(k)}
        if args.format == "csv":
            return csv_table(["k", "count"], [[k, report["count"]]])
        return dumps(envelope("exposure", report, args.seed, None))
    if k > ENUMERATE_MAX_K:
        raise DomainError(
            f"enumeration needs 2 <= k <= {ENUMERATE_MAX_K}; "
            f"use --count for larger k"
        )
    seqs = enumerate_exposure_sequences(k)
    if args.mode == "list":
        if args.format == "csv":
            rows = [
                [k, " ".join(map(str, s.pi)), s.leaves, s.ones] for s in seqs
            ]
            return csv_table(["k", "pi", "leaves", "ones"], rows)
        report = {
            "k": k,
            "count": len(seqs),
            "sequences": [s.to_json_dict() for s in seqs],
        }
        return dumps(envelope("exposure", report, args.seed, None))
    checks = [lemma_checks(s) for s in seqs]
    if args.format == "csv":
        rows = [
            [
                k, " ".join(map(str, s.pi)), c["p"], c["leaves"],
                c["sum_big"], c["ok1"], c["ok2"],
            ]
            for s, c in zip(seqs, checks)
        ]
        return csv_table(
            ["k", "pi", "p", "leaves", "sum_big", "ok1", "ok2"], rows
        )
    report = {"k": k, "count": len(seqs), "checks": checks}
    return dumps(envelope("exposure", report, args.seed, None))


def _cmd_sieve(args) -> str:
    g, prov = _resolve_graph(args)
    degs = set(g.deg)
    t = g.n.bit_length() - 1
    if len(degs) == 1 and (1 << t) == g.n and degs == {t}:
        rep = sieve_sandwich(g, args.k, strict=True)
    else:
        rep = sieve_term(g, args.k)
    return dumps(envelope("sieve", rep.to_json_dict(), args.seed, prov))


def _cmd_example1(args) -> str:
    rep = example1_experiment(args.t, args.trials, args.seed)
    prov = {
        "source": "resampled_genspec",
        "spec": f"regular:{1 << args.t},{args.t}",
        "block_size": rep.block_size,
    }
    return dumps(envelope("example1", rep.to_json_dict(), args.seed, prov))


_HANDLERS = {
    "generate": _cmd_generate,
    "cheeger": _cmd_cheeger,
    "spectrum": _cmd_spectrum,
    "orient-mc": _cmd_orient_mc,
    "census": _cmd_census,
    "sinks": _cmd_sinks,
    "theorem-check": _cmd_theorem_check,
    "bounds-table": _cmd_bounds_table,
    "exposure": _cmd_exposure,
    "sieve": _cmd_sieve,
    "example1": _cmd_example1,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    sub = args.subcommand
    try:
        if args.format == "csv" and sub not in _CSV_SUBCOMMANDS:
            raise UsageError(
                "csv output is only available for: "
                + ", ".join(_CSV_SUBCOMMANDS)
            )
        if getattr(args, "threads", None):
            kernels.set_threads(args.threads)
        text = _HANDLERS[sub](args)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except UsageError as e:
        sys.stderr.write(error_line(str(e), sub))
        return 2
    except StrongOrientError as e:
        sys.stderr.write(error_line(str(e), sub))
        return 1
    except OSError as e:
        sys.stderr.write(error_line(str(e), sub))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

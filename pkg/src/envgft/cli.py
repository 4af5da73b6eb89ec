"""Command-line driver.

Subcommands: enumerate, filter, report, convolve, metrics, cayley,
repro-line, repro-friendship. Exit codes: 0 success, 1 validation/usage
error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .convolution import SystemPolynomial, convolution_context, convolve
from .errors import EdgeListError, InadmissibleError, MultiEdgeError, NumericalError
from .extension import ConnectionSet, cayley_adjacency, cayley_spectrum
from .graph import (
    Digraph,
    load_edge_list,
    rank_profile,
    signal_from_json,
    signal_to_json,
    unit_impulse,
)
from .metrics import structural_report, pagerank
from .pipeline import (
    FilterSpec,
    apply_filters,
    detect_duplicate_rows,
    emit_reports,
    load_scorecards,
    repro_friendship,
    repro_line,
    run_enumeration,
)
from .spectral import DEFAULT_TOL_GAP, DEFAULT_TOL_ZERO, dft_matrix


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="envgft", description=__doc__)
    parser.add_argument("--tol-zero", type=float, default=DEFAULT_TOL_ZERO)
    parser.add_argument("--tol-gap", type=float, default=DEFAULT_TOL_GAP)
    parser.add_argument("--weight", type=float, default=1.0, help="weight for added edges")
    parser.add_argument("--allow-multi", action="store_true", help="sum weights on edge collisions")
    parser.add_argument(
        "--restrict-rows",
        metavar="FILE",
        help="file of row indices every row dependency list must contain",
    )
    parser.add_argument("--jobs", type=int, default=1, metavar="K")
    parser.add_argument(
        "--out",
        default=os.environ.get("ENVELOPE_OUT", "envgft-out"),
        help="output directory (default: $ENVELOPE_OUT or ./envgft-out)",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized helpers")

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="search and score extensions")
    p.add_argument("edges", help="edge-list file")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--n", type=int, default=None, help="explicit vertex count")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--canonical-q", action="store_true", help="one pseudo-permutation per pair")
    p.add_argument("--detect-duplicate-rows", action="store_true")

    p = sub.add_parser("filter", help="apply tau/cond thresholds")
    p.add_argument("rundir", help="directory produced by enumerate")
    p.add_argument("--tau-min", type=float, default=0.91)
    p.add_argument("--cond-max", type=float, default=80.0)

    p = sub.add_parser("report", help="emit figure CSVs for a selection")
    p.add_argument("rundir")
    p.add_argument("--base", required=True, help="base graph edge list")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tau-min", type=float, default=0.91)
    p.add_argument("--cond-max", type=float, default=80.0)

    p = sub.add_parser("convolve", help="x ⊛ y on an admissible digraph")
    p.add_argument("edges")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--x", required=True, help="signal: delta:k, ones, or JSON [[re,im],...]")
    p.add_argument("--y", required=True)

    p = sub.add_parser("metrics", help="structural metrics report")
    p.add_argument("edges")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--reference", default=None, help="edge list whose PageRank anchors tau")

    p = sub.add_parser("cayley", help="spectrum of Cay(Z_n, Γ)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", required=True, help="comma-separated residues, e.g. 1,2")

    p = sub.add_parser("repro-line", help="weighted line→cycle closed forms")
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--weights", default="1,0.5,0.01")

    p = sub.add_parser("repro-friendship", help="full survey-digraph pipeline")
    p.add_argument("edges")
    p.add_argument("--format", choices=("plain", "csv"), default="plain")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tau-min", type=float, default=0.91)
    p.add_argument("--cond-max", type=float, default=80.0)
    p.add_argument("--no-weighted-extrema", action="store_true")
    return parser


def _parse_signal(text: str, n: int) -> np.ndarray:
    if text.startswith("delta:"):
        return unit_impulse(n, int(text.split(":", 1)[1]))
    if text == "ones":
        return np.ones(n, dtype=complex)
    if text.startswith("@"):
        obj = json.loads(Path(text[1:]).read_text())
    else:
        obj = json.loads(text)
    return signal_from_json(obj, n=n)


def _load_rows_file(path) -> frozenset[int]:
    text = Path(path).read_text()
    parts = text.replace(",", " ").split()
    return frozenset(int(p) for p in parts)


def _cmd_enumerate(args) -> int:
    g = load_edge_list(args.edges, format=args.format, n=args.n)
    if args.detect_duplicate_rows:
        groups = detect_duplicate_rows(g.adjacency())
        print(json.dumps({"duplicate_row_groups": [list(t) for t in groups]}))
        return 0
    restrict = _load_rows_file(args.restrict_rows) if args.restrict_rows else None
    spec = FilterSpec(allow_multi=args.allow_multi, weight=args.weight, restrict_rows=restrict)
    summary = run_enumeration(
        g,
        spec,
        args.out,
        jobs=args.jobs,
        count_only=args.count_only,
        limit=args.limit,
        canonical_q_only=args.canonical_q,
        tol_zero=args.tol_zero,
        tol_gap=args.tol_gap,
    )
    print(json.dumps(summary, sort_keys=True))
    return 0


def _cmd_filter(args) -> int:
    cards = load_scorecards(args.rundir)
    spec = FilterSpec(tau_min=args.tau_min, cond_max=args.cond_max)
    outcome = apply_filters(cards, spec)
    result = {
        "status": outcome.status,
        "selected": [
            {"candidate_id": c.candidate_id, "tau": c.tau, "cond": c.cond}
            for c in outcome.selected
        ],
        "max_tau_overall": (
            {
                "candidate_id": outcome.max_tau_overall.candidate_id,
                "tau": outcome.max_tau_overall.tau,
                "cond": outcome.max_tau_overall.cond,
            }
            if outcome.max_tau_overall
            else None
        ),
    }
    print(json.dumps(result, sort_keys=True))
    return 0


def _cmd_report(args) -> int:
    base = load_edge_list(args.base, format=args.format, n=args.n)
    cards = load_scorecards(args.rundir)
    spec = FilterSpec(tau_min=args.tau_min, cond_max=args.cond_max)
    outcome = apply_filters(cards, spec)
    if not outcome.selected:
        print("no candidates pass the filters; nothing to report", file=sys.stderr)
        return 1
    manifest = emit_reports(outcome.selected, base, args.out, all_scorecards=cards)
    print(json.dumps(manifest, sort_keys=True))
    return 0


def _cmd_convolve(args) -> int:
    g = load_edge_list(args.edges, format=args.format, n=args.n)
    ctx = convolution_context(g, tol_zero=args.tol_zero, tol_gap=args.tol_gap)
    x = _parse_signal(args.x, g.n)
    y = _parse_signal(args.y, g.n)
    out = convolve(ctx, x, y)
    print(json.dumps(signal_to_json(out)))
    return 0


def _cmd_metrics(args) -> int:
    g = load_edge_list(args.edges, format=args.format, n=args.n)
    ref = None
    if args.reference:
        ref = pagerank(load_edge_list(args.reference, format=args.format))
    report = structural_report(g, reference_pagerank=ref)
    print(json.dumps(report.to_json_dict(), sort_keys=True))
    return 0


def _cmd_cayley(args) -> int:
    gamma = ConnectionSet(n=args.n, gamma=frozenset(int(k) for k in args.gamma.split(",")))
    lam = cayley_spectrum(gamma)
    a = cayley_adjacency(gamma).adjacency()
    v = np.conj(dft_matrix(args.n))
    residual = float(np.linalg.norm(a @ v - v @ np.diag(lam), 2))
    result = {
        "n": args.n,
        "gamma": sorted(gamma.gamma),
        "eigenvalues": signal_to_json(lam),
        "diagonalization_residual": residual,
        "verified": residual <= 1e-8 * max(1.0, float(np.abs(lam).max())),
    }
    print(json.dumps(result))
    return 0 if result["verified"] else 2


def _cmd_repro_line(args) -> int:
    weights = [float(w) for w in args.weights.split(",")]
    rows = repro_line(n=args.n, weights=weights)
    print(f"{'w':>8} {'delta':>12} {'Delta':>12} {'cond':>14}")
    for row in rows:
        print(f"{row['w']:>8g} {row['delta']:>12.6g} {row['Delta']:>12.6g} {row['cond']:>14.6f}")
    worst = max(
        max(r["check_eig_rel"], r["check_cond_rel"]) for r in rows
    )
    print(f"# closed form vs dense eigensolver, worst relative deviation: {worst:.3e}")
    return 0 if worst < 1e-9 else 2


def _cmd_repro_friendship(args) -> int:
    restrict = _load_rows_file(args.restrict_rows) if args.restrict_rows else None
    summary = repro_friendship(
        args.edges,
        args.out,
        fmt=args.format,
        n=args.n,
        tau_min=args.tau_min,
        cond_max=args.cond_max,
        jobs=args.jobs,
        weighted_extrema=not args.no_weighted_extrema,
    )
    if restrict is not None:
        summary["restrict_rows_flag"] = sorted(restrict)
    print(json.dumps(summary, sort_keys=True, default=str))
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "filter": _cmd_filter,
    "report": _cmd_report,
    "convolve": _cmd_convolve,
    "metrics": _cmd_metrics,
    "cayley": _cmd_cayley,
    "repro-line": _cmd_repro_line,
    "repro-friendship": _cmd_repro_friendship,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (EdgeListError, MultiEdgeError, InadmissibleError, ValueError, OSError) as exc:
        print(f"envgft: error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"envgft: numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: rank, compare, generate, sweep.

Exit codes: 0 success, 1 input/data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import io as qio
from .combine import RankKey, ranking_from_hits, ranking_from_pagerank
from .compare import RankingMismatch, compare_rankings
from .graph import GraphError
from .hits import HitsConfig, Normalization, hits_rank
from .netgen import GeneratorConfig, GeneratorError, generate
from .pagerank import BaseConstant, Dangling, PageRankConfig, pagerank

DATA_ERRORS = (OSError, qio.FormatError, GraphError, RankingMismatch, GeneratorError)


class DataError(Exception):
    pass


def parse_alpha(text: str) -> Fraction:
    """'2/3' is kept exact; '0.6667' becomes 6667/10000."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"alpha must be >= 0, got {text}")
    return value


def _alpha_list(text: str) -> list[Fraction]:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("alpha list is empty")
    return [parse_alpha(t) for t in items]


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("k values must be positive integers")
    return vals


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _pos_int(text: str) -> int:
    v = _nonneg_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _pos_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return v


def _range(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'lo,hi', got {text!r}") from None
    return lo, hi


def _precision(text: str):
    if text == "full":
        return None
    return _nonneg_int(text)


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        qio._write_text(text, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qhrank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rank", help="score and rank the nodes of an edge-list graph")
    r.add_argument("graph_file")
    r.add_argument("--algo", choices=["hits", "whits", "pagerank"], default="whits")
    r.add_argument("--alpha", type=parse_alpha, help="weight exponent for whits (default 2/3)")
    r.add_argument("--damping", type=float, help="pagerank damping factor (default 0.85)")
    r.add_argument("--key", choices=[k.value for k in RankKey])
    r.add_argument("--normalization", choices=[m.value for m in Normalization])
    r.add_argument("--pr-mode", choices=[m.value for m in BaseConstant])
    r.add_argument("--dangling", choices=[m.value for m in Dangling])
    r.add_argument("--weighted", action="store_true", help="pagerank: split rank by edge weight")
    r.add_argument("--tol", type=_pos_float)
    r.add_argument("--max-iter", type=_pos_int)
    r.add_argument("--precision", type=_precision, default=6, help="decimal places, or 'full'")
    r.add_argument("--out")

    c = sub.add_parser("compare", help="compare a score report with a reference ranking")
    c.add_argument("report_file")
    c.add_argument("reference_file")
    c.add_argument("--k", type=_int_list, default=None, help="comma-separated top-k sizes (default 1,3,5)")
    c.add_argument("--out")

    g = sub.add_parser("generate", help="generate a quasi-hierarchical network")
    g.add_argument("--depth", type=_pos_int, default=3)
    g.add_argument("--branching", type=_pos_int, default=3)
    g.add_argument("--extra", type=_nonneg_int, default=0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--down", type=_range, default=(5.0, 10.0), help="manager->subordinate weights lo,hi")
    g.add_argument("--up", type=_range, default=(1.0, 4.0), help="subordinate->manager weights lo,hi")
    g.add_argument("--extra-weight", type=_range, default=(1.0, 2.0))
    g.add_argument("--out-graph")
    g.add_argument("--out-truth")
    g.add_argument("--out-reference", help="ground-truth order (by level, then id)")

    s = sub.add_parser("sweep", help="compare weighted-HITS rankings for several alphas")
    s.add_argument("graph_file")
    s.add_argument("reference_file")
    s.add_argument("--alphas", type=_alpha_list, default=[Fraction(1), Fraction(2, 3), Fraction(2, 5)])
    s.add_argument("--key", choices=["auth", "hub", "f"], default="f")
    s.add_argument("--k", type=_int_list, default=None)
    s.add_argument("--normalization", choices=[m.value for m in Normalization], default="L1")
    s.add_argument("--tol", type=_pos_float, default=1e-9)
    s.add_argument("--max-iter", type=_pos_int, default=1000)
    s.add_argument("--jobs", type=_pos_int, default=1)
    s.add_argument("--out")
    return parser


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def cmd_rank(args, parser) -> int:
    hits_family = args.algo in ("hits", "whits")
    if args.algo == "pagerank":
        bad = [f for f, v in (("--alpha", args.alpha), ("--normalization", args.normalization)) if v is not None]
        if args.key not in (None, "pr"):
            bad.append(f"--key {args.key}")
    else:
        bad = [f for f, v in (("--damping", args.damping), ("--pr-mode", args.pr_mode),
                              ("--dangling", args.dangling)) if v is not None]
        if args.weighted:
            bad.append("--weighted")
        if args.key == "pr":
            bad.append("--key pr")
        if args.algo == "hits" and args.alpha is not None:
            bad.append("--alpha (basic hits always uses raw weights)")
    if bad:
        parser.error(f"{', '.join(bad)} cannot be used with --algo {args.algo}")

    loaded = qio.load_edge_list(args.graph_file)
    graph = loaded.graph
    if graph.n < 1:
        raise DataError(f"{args.graph_file}: graph has no nodes")

    meta = {"algorithm": args.algo}
    if hits_family:
        alpha = Fraction(1) if args.algo == "hits" else (args.alpha if args.alpha is not None else Fraction(2, 3))
        kwargs = {"alpha": float(alpha)}
        if args.tol is not None:
            kwargs["tolerance"] = args.tol
        if args.max_iter is not None:
            kwargs["max_iter"] = args.max_iter
        if args.normalization is not None:
            kwargs["normalization"] = args.normalization
        config = HitsConfig(**kwargs)
        result = hits_rank(graph, config)
        key = args.key or "auth"
        ranking = ranking_from_hits(result, key)
        meta.update(alpha=str(alpha), normalization=config.normalization,
                    tolerance=config.tolerance, max_iter=config.max_iter)
    else:
        kwargs = {"weighted": args.weighted}
        for name, val in (("damping", args.damping), ("tolerance", args.tol), ("max_iter", args.max_iter),
                          ("base_constant", args.pr_mode), ("dangling", args.dangling)):
            if val is not None:
                kwargs[name] = val
        try:
            config = PageRankConfig(**kwargs)
        except ValueError as exc:
            parser.error(str(exc))
        result = pagerank(graph, config)
        key = "pr"
        ranking = ranking_from_pagerank(result.scores)
        meta.update(damping=config.damping, mode=config.base_constant, dangling=config.dangling,
                    weighted=config.weighted, normalization="L1",
                    tolerance=config.tolerance, max_iter=config.max_iter)
    meta.update(key=key, iterations=result.iterations, converged=result.converged,
                nodes=graph.n, edges=graph.num_edges)
    if loaded.duplicates:
        meta["duplicates_aggregated"] = loaded.duplicates
    if not result.converged:
        _warn(f"{args.algo} did not converge after {result.iterations} iterations")

    text = qio.format_report(ranking, meta, graph.node_labels(), args.precision)
    _emit(text, args.out)
    return 0


def _default_ks(n: int) -> list[int]:
    return [k for k in (1, 3, 5) if k <= n]


def format_comparison(report, ks) -> str:
    lines = [
        f"n\t{report.n}",
        f"kendall_tau\t{report.kendall_tau:.6f}",
        f"exact_matches\t{report.exact_matches}",
    ]
    lines += [f"top_{k}_overlap\t{report.top_k_overlap[k]:.6f}" for k in ks]
    return "\n".join(lines) + "\n"


def cmd_compare(args, parser) -> int:
    scores = qio.read_report(args.report_file)
    reference = qio.read_reference(args.reference_file, nodes=scores.order)
    ks = args.k if args.k is not None else _default_ks(len(reference))
    report = compare_rankings(scores.order, reference, ks)
    _emit(format_comparison(report, ks), args.out)
    return 0


def cmd_generate(args, parser) -> int:
    try:
        config = GeneratorConfig(
            depth=args.depth,
            branching=args.branching,
            extra_links=args.extra,
            down_weight_range=args.down,
            up_weight_range=args.up,
            extra_weight_range=args.extra_weight,
            seed=args.seed,
        )
    except GeneratorError as exc:
        parser.error(str(exc))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        net = generate(config)
    for w in caught:
        _warn(str(w.message))

    meta = [f"generator {k}={qio._meta_value(v)}" for k, v in config.metadata().items()]
    _emit(qio.format_edge_list(net.graph, meta), args.out_graph)
    if args.out_truth:
        qio._write_text(qio.format_truth(net.truth, config.metadata()), args.out_truth)
    if args.out_reference:
        qio.write_reference(net.truth.reference_order(), args.out_reference)
    return 0


def sweep_rows(graph, reference_ids, alphas, key, ks, base_kwargs, jobs=1):
    """One (alpha, result, comparison) per alpha, in input order."""

    def run(alpha):
        result = hits_rank(graph, HitsConfig(alpha=float(alpha), **base_kwargs))
        ranking = ranking_from_hits(result, key)
        return alpha, result, compare_rankings(ranking, reference_ids, ks)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, alphas))
    return [run(a) for a in alphas]


def cmd_sweep(args, parser) -> int:
    alphas = []
    for a in args.alphas:
        if a in alphas:
            _warn(f"duplicate alpha {a} ignored")
        else:
            alphas.append(a)

    graph = qio.read_edge_list(args.graph_file)
    labels = graph.node_labels()
    reference = qio.read_reference(args.reference_file, nodes=labels)
    ids = {lab: i for i, lab in enumerate(labels, start=1)}
    reference_ids = [ids[lab] for lab in reference]
    ks = args.k if args.k is not None else _default_ks(graph.n)

    base = {"tolerance": args.tol, "max_iter": args.max_iter, "normalization": args.normalization}
    rows = sweep_rows(graph, reference_ids, alphas, args.key, ks, base, args.jobs)

    lines = [
        "# algorithm=whits",
        f"# key={args.key}",
        f"# normalization={args.normalization}",
        f"# tolerance={args.tol}",
        f"# max_iter={args.max_iter}",
        "\t".join(["alpha", "kendall_tau", "exact_matches", *[f"top_{k}_overlap" for k in ks],
                   "iterations", "converged"]),
    ]
    for alpha, result, rep in rows:
        if not result.converged:
            _warn(f"alpha={alpha} did not converge after {result.iterations} iterations")
        lines.append("\t".join([
            str(alpha),
            f"{rep.kendall_tau:.6f}",
            str(rep.exact_matches),
            *[f"{rep.top_k_overlap[k]:.6f}" for k in ks],
            str(result.iterations),
            "true" if result.converged else "false",
        ]))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


COMMANDS = {"rank": cmd_rank, "compare": cmd_compare, "generate": cmd_generate, "sweep": cmd_sweep}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, parser)
    except DATA_ERRORS + (DataError,) as exc:
        if isinstance(exc, OSError) and exc.filename:
            msg = f"{exc.filename}: {exc.strerror}"
        else:
            msg = str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

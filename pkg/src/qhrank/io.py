"""Tab-separated text formats for graphs, score reports and rankings.

Edge list::

    # nodes=6
    1	5	1
    2	4	1

Endpoints are used as node ids when every endpoint is a positive integer and
no ``# label`` lines are present; otherwise they are treated as labels and
given dense ids in order of first appearance. ``# label<TAB>id<TAB>name``
lines pin the mapping explicitly (the writer emits them for labelled graphs).
Any other ``#`` line is a comment.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .combine import RankingResult
from .graph import GraphError, WeightedDigraph, build_graph
from .netgen import GroundTruth

_HEADER = re.compile(r"#\s*nodes\s*=\s*(\S+)\s*$")
COLUMN_ORDER = ("auth", "hub", "f", "pr")


class FormatError(ValueError):
    """Malformed input file; the message names the line when possible."""


@dataclass
class EdgeListFile:
    graph: WeightedDigraph
    duplicates: int = 0
    comments: list[str] = field(default_factory=list)


def _read_lines(source) -> list[str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    else:
        text = source.read()
    return text.splitlines()


def _write_text(text: str, dest) -> None:
    if isinstance(dest, (str, os.PathLike)):
        Path(dest).write_bytes(text.encode("utf-8"))
    else:
        dest.write(text)


def _positive_int(tok: str) -> int | None:
    if tok.isdigit():
        v = int(tok)
        return v if v > 0 else None
    return None


def load_edge_list(source) -> EdgeListFile:
    declared_n = None
    label_ids: dict[str, int] = {}
    comments = []
    rows = []  # (line number, src token, dst token, weight)

    for lineno, raw in enumerate(_read_lines(source), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#"):
            m = _HEADER.match(line)
            if m:
                try:
                    declared_n = int(m.group(1))
                except ValueError:
                    raise FormatError(f"line {lineno}: bad node count {m.group(1)!r}") from None
                if declared_n < 0:
                    raise FormatError(f"line {lineno}: node count must be nonnegative")
                continue
            parts = line.split("\t")
            if parts[0].strip() == "# label":
                if len(parts) != 3 or _positive_int(parts[1]) is None:
                    raise FormatError(f"line {lineno}: expected '# label<TAB>id<TAB>name'")
                if parts[2] in label_ids:
                    raise FormatError(f"line {lineno}: label {parts[2]!r} declared twice")
                label_ids[parts[2]] = int(parts[1])
                continue
            comments.append(line)
            continue

        parts = line.split("\t")
        if len(parts) != 3:
            raise FormatError(
                f"line {lineno}: expected 3 tab-separated fields (src, dst, weight), got {len(parts)}"
            )
        src, dst, wtok = (p.strip() for p in parts)
        if not src or not dst:
            raise FormatError(f"line {lineno}: empty endpoint")
        try:
            weight = float(wtok)
        except ValueError:
            raise FormatError(f"line {lineno}: weight {wtok!r} is not a number") from None
        if not (weight > 0 and math.isfinite(weight)):
            raise FormatError(f"line {lineno}: weight must be positive, got {wtok}")
        rows.append((lineno, src, dst, weight))

    labels = None
    if label_ids:
        n = len(label_ids)
        if sorted(label_ids.values()) != list(range(1, n + 1)):
            raise FormatError("label ids must cover 1..n exactly once")
        if declared_n is not None and declared_n != n:
            raise FormatError(f"header declares {declared_n} nodes but {n} labels are listed")
        labels = [None] * n
        for name, i in label_ids.items():
            labels[i - 1] = name
        for lineno, src, dst, _ in rows:
            for tok in (src, dst):
                if tok not in label_ids:
                    raise FormatError(f"line {lineno}: unknown node label {tok!r}")
        resolve = label_ids.__getitem__
    elif all(_positive_int(s) and _positive_int(d) for _, s, d, _ in rows):
        top = max((max(int(s), int(d)) for _, s, d, _ in rows), default=0)
        if declared_n is not None and top > declared_n:
            bad = next(ln for ln, s, d, _ in rows if max(int(s), int(d)) > declared_n)
            raise FormatError(f"line {bad}: node id exceeds declared nodes={declared_n}")
        n = declared_n if declared_n is not None else top
        resolve = int
    else:
        for _, s, d, _ in rows:
            for tok in (s, d):
                label_ids.setdefault(tok, len(label_ids) + 1)
        n = len(label_ids)
        if declared_n is not None and declared_n != n:
            raise FormatError(f"header declares {declared_n} nodes but {n} labels appear")
        labels = list(label_ids)
        resolve = label_ids.__getitem__

    edges = [(resolve(s), resolve(d), w) for _, s, d, w in rows]
    pairs = {(s, d) for s, d, _ in edges}
    try:
        graph = build_graph(n, edges, labels=labels)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    return EdgeListFile(graph=graph, duplicates=len(edges) - len(pairs), comments=comments)


def read_edge_list(source) -> WeightedDigraph:
    return load_edge_list(source).graph


def format_edge_list(graph: WeightedDigraph, comments: Iterable[str] = ()) -> str:
    """Weights use repr(), which round-trips floats exactly."""
    lines = [f"# nodes={graph.n}"]
    lines += [c if c.startswith("#") else f"# {c}" for c in comments]
    if graph.labels is not None:
        lines += [f"# label\t{i}\t{name}" for i, name in enumerate(graph.labels, start=1)]
    for s, d, w in graph.edges:
        lines.append(f"{graph.label(s)}\t{graph.label(d)}\t{w!r}")
    return "\n".join(lines) + "\n"


def write_edge_list(graph: WeightedDigraph, dest, comments: Iterable[str] = ()) -> None:
    _write_text(format_edge_list(graph, comments), dest)


def _fmt(x: float, precision: int | None) -> str:
    return repr(float(x)) if precision is None else f"{x:.{precision}f}"


def format_report(
    result: RankingResult,
    metadata: dict | None = None,
    labels: Sequence[str] | None = None,
    precision: int | None = 6,
) -> str:
    """Score table sorted by rank, preceded by ``# key=value`` metadata.

    ``precision=None`` prints full-precision floats.
    """
    cols = result.columns()
    names = [c for c in COLUMN_ORDER if c in cols]
    lines = [f"# {k}={_meta_value(v)}" for k, v in (metadata or {}).items()]
    lines.append("\t".join(["node", *names, "rank"]))
    for pos, node in enumerate(result.order, start=1):
        label = labels[node - 1] if labels is not None else str(node)
        vals = [_fmt(cols[c][node - 1], precision) for c in names]
        lines.append("\t".join([label, *vals, str(pos)]))
    return "\n".join(lines) + "\n"


def _meta_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(_meta_value(x) for x in v)
    if hasattr(v, "value"):
        return str(v.value)
    return str(v)


def write_report(result: RankingResult, dest, metadata=None, labels=None, precision=6) -> None:
    _write_text(format_report(result, metadata, labels, precision), dest)


@dataclass
class ScoreReport:
    order: list[str]
    columns: dict[str, list[float]]
    metadata: dict[str, str]


def read_report(source) -> ScoreReport:
    metadata = {}
    header = None
    rows = []
    for lineno, line in enumerate(_read_lines(source), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, sep, val = line[1:].strip().partition("=")
            if sep:
                metadata[key.strip()] = val.strip()
            continue
        parts = line.split("\t")
        if header is None:
            header = parts
            if header[0] != "node" or header[-1] != "rank":
                raise FormatError(f"line {lineno}: expected a 'node ... rank' header row")
            continue
        if len(parts) != len(header):
            raise FormatError(f"line {lineno}: expected {len(header)} fields, got {len(parts)}")
        try:
            vals = [float(p) for p in parts[1:-1]]
            rank = int(parts[-1])
        except ValueError:
            raise FormatError(f"line {lineno}: unparsable number") from None
        rows.append((rank, parts[0], vals))
    if header is None:
        raise FormatError("report has no header row")
    rows.sort(key=lambda r: r[0])
    if [r[0] for r in rows] != list(range(1, len(rows) + 1)):
        raise FormatError("rank column must be 1..n without gaps")
    order = [r[1] for r in rows]
    if len(set(order)) != len(order):
        raise FormatError("report lists a node more than once")
    columns = {name: [r[2][i] for r in rows] for i, name in enumerate(header[1:-1])}
    return ScoreReport(order=order, columns=columns, metadata=metadata)


def read_reference(source, nodes: Sequence[str] | None = None) -> list[str]:
    """Node labels, best first. With ``nodes`` the file must cover exactly that set."""
    order = []
    seen = {}
    for lineno, line in enumerate(_read_lines(source), start=1):
        tok = line.strip()
        if not tok or tok.startswith("#"):
            continue
        if tok in seen:
            raise FormatError(f"line {lineno}: node {tok} already listed on line {seen[tok]}")
        seen[tok] = lineno
        order.append(tok)
    if nodes is not None:
        known = set(nodes)
        unknown = [t for t in order if t not in known]
        if unknown:
            raise FormatError(f"unknown node(s) in reference: {', '.join(unknown)}")
        missing = [t for t in nodes if t not in seen]
        if missing:
            raise FormatError(f"reference is missing node(s): {', '.join(missing)}")
    return order


def format_reference(order: Sequence) -> str:
    return "".join(f"{x}\n" for x in order)


def write_reference(order: Sequence, dest) -> None:
    _write_text(format_reference(order), dest)


def format_truth(truth: GroundTruth, metadata: dict | None = None) -> str:
    lines = [f"# {k}={_meta_value(v)}" for k, v in (metadata or {}).items()]
    lines.append("node\tlevel\tparent")
    for i, (lvl, par) in enumerate(zip(truth.level, truth.parent), start=1):
        lines.append(f"{i}\t{lvl}\t{'-' if par is None else par}")
    return "\n".join(lines) + "\n"


def read_truth(source) -> GroundTruth:
    level, parent = [], []
    header_seen = False
    for lineno, line in enumerate(_read_lines(source), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        if not header_seen:
            header_seen = True
            continue
        parts = line.split("\t")
        if len(parts) != 3 or int(parts[0]) != len(level) + 1:
            raise FormatError(f"line {lineno}: expected 'node<TAB>level<TAB>parent' in id order")
        level.append(int(parts[1]))
        parent.append(None if parts[2] == "-" else int(parts[2]))
    return GroundTruth(level=tuple(level), parent=tuple(parent))


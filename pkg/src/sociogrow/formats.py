"""Edge lists, key=value configs and result serialization.

Edge-list format: one ``label label`` pair per line, whitespace separated.
Lines starting with ``#`` or ``%`` are comments, except ``#@node LABEL``,
which declares a node (so isolated nodes and the id order survive a
round trip). Labels are opaque tokens mapped to ids in order of first
appearance.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, fields
from importlib import resources
from typing import Iterable, Sequence

from .dynamics import DynamicsParams
from .graph import Graph
from .metrics import NetworkStats

NODE_DIRECTIVE = "#@node"


class FormatError(ValueError):
    """Malformed edge list or config text."""


@dataclass
class EdgeList:
    graph: Graph
    labels: list[str]
    self_loops: int = 0
    duplicates: int = 0

    @property
    def label_to_id(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def node(self, label) -> int:
        return self.label_to_id[str(label)]


def parse_edgelist(text: str) -> EdgeList:
    """Parse edge-list text into a symmetrized simple graph.

    Self-loops and repeated edges (in either direction) are dropped and
    counted.
    """
    ids: dict[str, int] = {}
    labels: list[str] = []
    pairs: list[tuple[int, int]] = []

    def intern(tok: str) -> int:
        if tok not in ids:
            ids[tok] = len(labels)
            labels.append(tok)
        return ids[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(NODE_DIRECTIVE):
            toks = line.split()
            if toks[0] == NODE_DIRECTIVE:
                if len(toks) != 2:
                    raise FormatError(f"line {lineno}: node directive needs one label")
                intern(toks[1])
                continue
        if line[0] in "#%":
            continue
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected 2 tokens, got {len(toks)}")
        pairs.append((intern(toks[0]), intern(toks[1])))

    g = Graph(len(labels))
    loops = dups = 0
    for i, j in pairs:
        if i == j:
            loops += 1
        elif not g.add_edge(i, j):
            dups += 1
    return EdgeList(g, labels, loops, dups)


def write_edgelist(g: Graph, labels: Sequence[str] | None = None) -> str:
    """Node declarations in id order, then one line per edge."""
    if labels is None:
        labels = [str(i) for i in range(g.node_count)]
    if len(labels) != g.node_count:
        raise ValueError("one label per node required")
    out = [f"{NODE_DIRECTIVE} {lab}\n" for lab in labels]
    out.extend(f"{labels[i]} {labels[j]}\n" for i, j in g.edges())
    return "".join(out)


def read_edgelist(path) -> EdgeList:
    with open(path, encoding="utf-8") as fh:
        return parse_edgelist(fh.read())


def builtin_zachary() -> EdgeList:
    """Zachary's karate club with the usual 1-based member labels."""
    text = resources.files("sociogrow").joinpath("data/zachary.edges").read_text()
    return parse_edgelist(text)


def fmt(value) -> str:
    """Render numbers with 6 significant digits; ints and bools verbatim."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def write_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_stats(stats: NetworkStats | dict) -> str:
    items = stats.as_dict() if isinstance(stats, NetworkStats) else stats
    return "".join(f"{k}={fmt(v)}\n" for k, v in items.items())


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# config key -> (field name, parser)
_DYNAMICS_KEYS = {
    "m": ("memory", float),
    "alpha": ("alpha", float),
    "epsilon": ("epsilon", float),
    "max_iterations": ("max_iterations", int),
}
_GROWTH_KEYS = {
    "beta": ("beta", float),
    "n0": ("n0", int),
    "target_n": ("target_n", int),
    "seed": ("seed", int),
    "replicates": ("replicates", int),
    "always_link_anchor": ("always_link_anchor", _bool),
    "recompute_stride": ("recompute_stride", int),
}
CONFIG_KEYS = tuple(_GROWTH_KEYS) + tuple(_DYNAMICS_KEYS)


def parse_config(text: str, base=None):
    """Parse ``key=value`` lines into a GrowthConfig; unset keys keep defaults.

    Raises FormatError naming the offending key for unknown keys,
    unparsable values and values that violate a parameter constraint.
    """
    growth: dict = {}
    dyn: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise FormatError(f"line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in _GROWTH_KEYS:
            name, conv = _GROWTH_KEYS[key]
            target = growth
        elif key in _DYNAMICS_KEYS:
            name, conv = _DYNAMICS_KEYS[key]
            target = dyn
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
        try:
            target[name] = conv(value)
        except ValueError as exc:
            raise FormatError(f"{key}: cannot parse {value!r} ({exc})") from None
    return build_config(growth, dyn, base)


def _blame(message: str, names: dict, default: str) -> str:
    # the parameter named first in a validation message is the offender
    hits = [(message.find(n), k) for n, k in names.items() if n in message]
    return min(hits)[1] if hits else default


def build_config(growth: dict, dyn: dict, base=None):
    from .growth import GrowthConfig

    base = base or GrowthConfig()
    dyn_fields = {f.name: getattr(base.dynamics, f.name) for f in fields(DynamicsParams)}
    dyn_fields.update(dyn)
    try:
        dynamics = DynamicsParams(**dyn_fields)
    except ValueError as exc:
        key = _blame(str(exc), {n: k for k, (n, _) in _DYNAMICS_KEYS.items()}, "dynamics")
        raise FormatError(f"{key}: {exc}") from None
    kwargs = {f.name: getattr(base, f.name) for f in fields(GrowthConfig)}
    kwargs.update(growth, dynamics=dynamics)
    try:
        return GrowthConfig(**kwargs)
    except ValueError as exc:
        key = _blame(str(exc), {k: k for k in _GROWTH_KEYS}, "config")
        raise FormatError(f"{key}: {exc}") from None


def write_config(cfg) -> str:
    d = cfg.dynamics
    values = {
        "beta": cfg.beta,
        "m": d.memory,
        "alpha": d.alpha,
        "n0": cfg.n0,
        "target_n": cfg.target_n,
        "seed": cfg.seed,
        "replicates": cfg.replicates,
        "epsilon": d.epsilon,
        "max_iterations": d.max_iterations,
        "always_link_anchor": cfg.always_link_anchor,
        "recompute_stride": cfg.recompute_stride,
    }
    return "".join(f"{k}={v!r}\n" if isinstance(v, float) else f"{k}={fmt(v)}\n" for k, v in values.items())

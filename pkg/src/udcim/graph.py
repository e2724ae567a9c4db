"""Weighted directed graphs, edge-list ingestion, and weight/tendency policies.

Graphs are immutable after construction: node ids are dense integers
0..n-1 assigned in order of first appearance in the input, with the
original labels retained for reporting. Edge weights live in [0, 1]; an
edge parsed without a weight column stays unassigned (None) until
``assign_weights`` fills it in.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Iterator

from .errors import ConfigError, DataError


class Tendency(IntEnum):
    """A node's prior leaning, encoded 0/1/2 as in tendency files."""

    NEUTRAL = 0
    A = 1
    B = 2


@dataclass(frozen=True)
class IngestStats:
    """Bookkeeping from edge-list ingestion."""

    duplicate_edges_merged: int = 0
    self_loops_dropped: int = 0


@dataclass(frozen=True)
class WeightedDigraph:
    """Immutable directed graph with per-arc weights and per-node tendencies.

    ``arcs`` is canonically sorted by (source, target). ``out_adj`` and
    ``in_adj`` hold (neighbor, weight) pairs sorted by neighbor id; both
    views describe the same arc set.
    """

    n: int
    labels: tuple[str, ...]
    arcs: tuple[tuple[int, int, float | None], ...]
    tendencies: tuple[Tendency, ...]
    ingest: IngestStats = field(default=IngestStats(), compare=False)

    def __post_init__(self):
        if len(self.labels) != self.n or len(self.tendencies) != self.n:
            raise ValueError("labels/tendencies length must equal n")
        for u, v, w in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) out of range")
            if u == v:
                raise ValueError("self-loops are not allowed")
            if w is not None and not (0.0 <= w <= 1.0):
                raise ValueError(f"weight {w} outside [0,1] on arc ({u},{v})")
        out: list[list[tuple[int, float | None]]] = [[] for _ in range(self.n)]
        inc: list[list[tuple[int, float | None]]] = [[] for _ in range(self.n)]
        seen = set()
        for u, v, w in self.arcs:
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
            out[u].append((v, w))
            inc[v].append((u, w))
        object.__setattr__(self, "_out_adj", tuple(tuple(sorted(a)) for a in out))
        object.__setattr__(self, "_in_adj", tuple(tuple(sorted(a)) for a in inc))
        object.__setattr__(
            self, "_label_to_id", {lab: i for i, lab in enumerate(self.labels)}
        )

    @property
    def out_adj(self) -> tuple[tuple[tuple[int, float | None], ...], ...]:
        return self._out_adj  # type: ignore[attr-defined]

    @property
    def in_adj(self) -> tuple[tuple[tuple[int, float | None], ...], ...]:
        return self._in_adj  # type: ignore[attr-defined]

    @property
    def m(self) -> int:
        """Arc count."""
        return len(self.arcs)

    def out_degree(self, u: int) -> int:
        return len(self.out_adj[u])

    def in_degree(self, u: int) -> int:
        return len(self.in_adj[u])

    def id_of(self, label: str) -> int:
        try:
            return self._label_to_id[label]  # type: ignore[attr-defined]
        except KeyError:
            raise DataError(f"unknown node label {label!r}") from None

    @property
    def has_unassigned_weights(self) -> bool:
        return any(w is None for _, _, w in self.arcs)

    def with_arcs(self, arcs: Iterable[tuple[int, int, float | None]]) -> "WeightedDigraph":
        return WeightedDigraph(
            n=self.n,
            labels=self.labels,
            arcs=tuple(sorted(arcs)),
            tendencies=self.tendencies,
            ingest=self.ingest,
        )

    def with_tendencies(self, tendencies: Iterable[Tendency]) -> "WeightedDigraph":
        return WeightedDigraph(
            n=self.n,
            labels=self.labels,
            arcs=self.arcs,
            tendencies=tuple(Tendency(t) for t in tendencies),
            ingest=self.ingest,
        )


def build_graph(
    n: int,
    arcs: Iterable[tuple[int, int, float | None]],
    tendencies: Iterable[Tendency] | None = None,
    labels: Iterable[str] | None = None,
) -> WeightedDigraph:
    """Convenience constructor using integer labels and neutral tendencies."""
    labs = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    tend = (
        tuple(Tendency(t) for t in tendencies)
        if tendencies is not None
        else tuple(Tendency.NEUTRAL for _ in range(n))
    )
    return WeightedDigraph(n=n, labels=labs, arcs=tuple(sorted(arcs)), tendencies=tend)


_COMMENT = re.compile(r"^\s*[#%]")


def _lines(stream: Iterable[str] | str) -> Iterator[tuple[int, str]]:
    if isinstance(stream, str):
        stream = stream.splitlines()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or _COMMENT.match(line):
            continue
        yield lineno, line


def parse_edge_list(
    stream: Iterable[str] | str, directedness: str = "as-directed"
) -> WeightedDigraph:
    """Parse a whitespace-separated edge list into a dense-id digraph.

    Lines are ``u v`` or ``u v w``; ``#``/``%`` start comments. Under
    ``symmetrize`` every input line yields two arcs. Duplicate arcs are
    merged keeping the maximum weight, self-loops are dropped; both are
    counted in the result's ingest stats.
    """
    if directedness not in ("as-directed", "symmetrize"):
        raise ConfigError(f"unknown directedness policy {directedness!r}")

    label_ids: dict[str, int] = {}
    merged: dict[tuple[int, int], float | None] = {}
    duplicates = 0
    loops = 0

    def node(label: str) -> int:
        if label not in label_ids:
            label_ids[label] = len(label_ids)
        return label_ids[label]

    def add_arc(u: int, v: int, w: float | None) -> None:
        nonlocal duplicates
        if (u, v) in merged:
            duplicates += 1
            old = merged[(u, v)]
            if w is not None:
                merged[(u, v)] = w if old is None else max(old, w)
        else:
            merged[(u, v)] = w

    for lineno, line in _lines(stream):
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise DataError(f"line {lineno}: expected 2 or 3 tokens, got {len(tokens)}")
        w: float | None = None
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise DataError(f"line {lineno}: non-numeric weight {tokens[2]!r}") from None
            if not (0.0 <= w <= 1.0):
                raise DataError(f"line {lineno}: weight {w} outside [0,1]")
        u, v = node(tokens[0]), node(tokens[1])
        if u == v:
            loops += 1
            continue
        add_arc(u, v, w)
        if directedness == "symmetrize":
            add_arc(v, u, w)

    n = len(label_ids)
    labels = tuple(sorted(label_ids, key=label_ids.__getitem__))
    arcs = tuple(sorted((u, v, w) for (u, v), w in merged.items()))
    return WeightedDigraph(
        n=n,
        labels=labels,
        arcs=arcs,
        tendencies=tuple(Tendency.NEUTRAL for _ in range(n)),
        ingest=IngestStats(duplicate_edges_merged=duplicates, self_loops_dropped=loops),
    )


def assign_weights(graph: WeightedDigraph, policy: str) -> WeightedDigraph:
    """Return a copy of ``graph`` with every arc weight in [0, 1].

    Policies: ``keep`` (all weights must already be present),
    ``inverse-in-degree`` (W(v,u) = 1/|in-neighbors of u|),
    ``uniform:<c>`` (constant c), ``random-uniform:<seed>`` (i.i.d.
    uniform [0,1] draws in canonical arc order).
    """
    if policy == "keep":
        if graph.has_unassigned_weights:
            raise DataError("policy 'keep' requires every arc to carry a weight")
        return graph
    if policy == "inverse-in-degree":
        indeg = [graph.in_degree(u) for u in range(graph.n)]
        arcs = [(u, v, 1.0 / indeg[v]) for u, v, _ in graph.arcs]
        return graph.with_arcs(arcs)
    if policy.startswith("uniform:"):
        try:
            c = float(policy.split(":", 1)[1])
        except ValueError:
            raise ConfigError(f"bad uniform weight policy {policy!r}") from None
        if not (0.0 <= c <= 1.0):
            raise ConfigError(f"uniform weight {c} outside [0,1]")
        return graph.with_arcs((u, v, c) for u, v, _ in graph.arcs)
    if policy.startswith("random-uniform:"):
        try:
            seed = int(policy.split(":", 1)[1])
        except ValueError:
            raise ConfigError(f"bad random-uniform weight policy {policy!r}") from None
        rng = random.Random(seed)
        return graph.with_arcs((u, v, rng.random()) for u, v, _ in graph.arcs)
    raise ConfigError(f"unknown weight policy {policy!r}")


def parse_tendencies(
    stream: Iterable[str] | str, graph: WeightedDigraph, default: str = "neutral"
) -> tuple[Tendency, ...]:
    """Parse ``label code`` lines (codes 0/1/2) into a full tendency vector.

    Nodes absent from the stream get the ``default`` policy: ``neutral``
    or ``random:<seed>:<pA>:<pB>`` which draws A with probability pA and
    B with probability pB, independently per node in id order.
    """
    explicit: dict[int, Tendency] = {}
    for lineno, line in _lines(stream):
        tokens = line.split()
        if len(tokens) != 2:
            raise DataError(f"line {lineno}: expected 'label code', got {line!r}")
        u = graph.id_of(tokens[0])
        try:
            code = int(tokens[1])
        except ValueError:
            raise DataError(f"line {lineno}: non-integer tendency code {tokens[1]!r}") from None
        if code not in (0, 1, 2):
            raise DataError(f"line {lineno}: tendency code {code} not in {{0,1,2}}")
        explicit[u] = Tendency(code)

    filler = _default_tendency_filler(default, graph.n)
    return tuple(explicit.get(u, filler[u]) for u in range(graph.n))


def _default_tendency_filler(default: str, n: int) -> list[Tendency]:
    if default == "neutral":
        return [Tendency.NEUTRAL] * n
    if default.startswith("random:"):
        parts = default.split(":")
        try:
            seed = int(parts[1])
            p_a = float(parts[2]) if len(parts) > 2 else 1.0 / 3.0
            p_b = float(parts[3]) if len(parts) > 3 else 1.0 / 3.0
        except (ValueError, IndexError):
            raise ConfigError(f"bad tendency default {default!r}") from None
        if p_a < 0 or p_b < 0 or p_a + p_b > 1.0:
            raise ConfigError(f"tendency probabilities ({p_a}, {p_b}) invalid")
        rng = random.Random(seed)
        out = []
        for _ in range(n):
            x = rng.random()
            if x < p_a:
                out.append(Tendency.A)
            elif x < p_a + p_b:
                out.append(Tendency.B)
            else:
                out.append(Tendency.NEUTRAL)
        return out
    raise ConfigError(f"unknown tendency default {default!r}")


def write_edge_list(graph: WeightedDigraph) -> str:
    """Serialize arcs as ``label label weight`` lines (canonical order)."""
    lines = []
    for u, v, w in graph.arcs:
        if w is None:
            lines.append(f"{graph.labels[u]} {graph.labels[v]}")
        else:
            lines.append(f"{graph.labels[u]} {graph.labels[v]} {w!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def write_tendencies(graph: WeightedDigraph) -> str:
    """Serialize the tendency vector as ``label code`` lines."""
    lines = [f"{graph.labels[u]} {int(graph.tendencies[u])}" for u in range(graph.n)]
    return "\n".join(lines) + ("\n" if lines else "")

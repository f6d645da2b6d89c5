"""Exact minimum-line searches over small instance universes.

Three universes are supported: 3-uniform hypergraphs with their hyperlines,
1-2 spaces reached from arbitrary graphs (edge = distance 1), and
shortest-path metrics of connected graphs.  Enumeration is isomorph-free, so
a search touches each class exactly once and the reported witness is the
first optimum in canonical order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Union

from .enumeration import MAX_GRAPH_N, MAX_TRIPLES_N, enum_graphs, enum_triple_systems
from .errors import BadParams, EmptyUniverse, SizeCap
from .fileio import dump_graph, dump_triples
from .graphs import Graph, graph_dist_rows, int_metric_line_masks, onetwo_line_masks
from .triples import TripleSystem

UNIVERSES = ("hypergraphs", "one_two", "graph_metrics")

_CAPS = {
    "hypergraphs": MAX_TRIPLES_N,
    "one_two": 7,
    "graph_metrics": MAX_GRAPH_N,
}

# f and the graph-metric question exclude the universal line; h does not.
DEFAULT_EXCLUDE = {
    "hypergraphs": True,
    "one_two": False,
    "graph_metrics": True,
}


@dataclass(frozen=True)
class SearchReport:
    universe: str
    n: int
    exclude_universal: bool
    minimum: int
    witness: Union[TripleSystem, Graph]
    instances_examined: int
    iso_classes: int
    elapsed: float

    def witness_text(self) -> str:
        if isinstance(self.witness, TripleSystem):
            return dump_triples(self.witness)
        return dump_graph(self.witness)

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "universe": self.universe,
            "n": self.n,
            "exclude_universal": self.exclude_universal,
            "minimum": self.minimum,
            "witness": self.witness_text(),
            "instances_examined": self.instances_examined,
            "iso_classes": self.iso_classes,
        }
        if include_timing:
            out["elapsed_ms"] = int(self.elapsed * 1000)
        return out


@dataclass(frozen=True)
class ScanReport:
    n_max: int
    violators: tuple[Graph, ...]
    minima: Mapping[int, int]
    instances_examined: int
    iso_classes: int
    elapsed: float

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "n_max": self.n_max,
            "violators": [dump_graph(g) for g in self.violators],
            "minima": {str(n): self.minima[n] for n in sorted(self.minima)},
            "instances_examined": self.instances_examined,
            "iso_classes": self.iso_classes,
        }
        if include_timing:
            out["elapsed_ms"] = int(self.elapsed * 1000)
        return out


def triple_line_masks(T: TripleSystem) -> list[int]:
    """Point-set bitmask of every hyperline, one entry per vertex pair."""
    n = T.n
    masks = []
    index = {}
    for u in range(n):
        for v in range(u + 1, n):
            index[(u, v)] = len(masks)
            masks.append((1 << u) | (1 << v))
    for a, b, c in T.sorted_edges():
        masks[index[(a, b)]] |= 1 << c
        masks[index[(a, c)]] |= 1 << b
        masks[index[(b, c)]] |= 1 << a
    return masks


def _instance_masks(universe: str, instance) -> list[int]:
    if universe == "hypergraphs":
        return triple_line_masks(instance)
    if universe == "one_two":
        return onetwo_line_masks(instance.n, instance.adj)
    return int_metric_line_masks(instance.n, graph_dist_rows(instance))


def min_lines(
    universe: str,
    n: int,
    exclude_universal: bool | None = None,
) -> SearchReport:
    """Exact minimum number of distinct lines over a whole universe."""
    if universe not in UNIVERSES:
        raise BadParams(f"unknown universe {universe!r}")
    if exclude_universal is None:
        exclude_universal = DEFAULT_EXCLUDE[universe]
    cap = _CAPS[universe]
    if n > cap:
        raise SizeCap(f"universe {universe} is capped at n <= {cap}, got {n}")
    if exclude_universal and n < 3:
        raise BadParams("excluding the universal line needs n >= 3")
    if n < 2:
        raise BadParams("a line needs two points, so n >= 2 is required")

    start = time.monotonic()
    if universe == "hypergraphs":
        instances = enum_triple_systems(n)
    else:
        instances = enum_graphs(n, connected=(universe == "graph_metrics"))

    full = (1 << n) - 1
    best: int | None = None
    witness = None
    examined = 0
    for inst in instances:
        examined += 1
        masks = set(_instance_masks(universe, inst))
        if exclude_universal and full in masks:
            continue
        count = len(masks)
        if best is None or count < best:
            best = count
            witness = inst
    if best is None:
        raise EmptyUniverse(
            f"every {universe} instance on {n} points has a universal line"
        )
    return SearchReport(
        universe=universe,
        n=n,
        exclude_universal=exclude_universal,
        minimum=best,
        witness=witness,
        instances_examined=examined,
        iso_classes=len(instances),
        elapsed=time.monotonic() - start,
    )


def conjecture_scan(n_max: int) -> ScanReport:
    """Hunt for a connected graph metric with no universal line and < n lines.

    Scans every connected isomorphism class with 3 <= n <= n_max; sizes 1
    and 2 are vacuous.  Also records, per n, the minimum line count among
    the no-universal-line classes.
    """
    if n_max > MAX_GRAPH_N:
        raise SizeCap(f"scan is capped at n <= {MAX_GRAPH_N}, got {n_max}")
    if n_max < 1:
        raise BadParams(f"scan needs a positive size, got {n_max}")
    start = time.monotonic()
    violators = []
    minima: dict[int, int] = {}
    examined = 0
    for n in range(3, n_max + 1):
        full = (1 << n) - 1
        for g in enum_graphs(n, connected=True):
            examined += 1
            masks = set(int_metric_line_masks(n, graph_dist_rows(g)))
            if full in masks:
                continue
            count = len(masks)
            if n not in minima or count < minima[n]:
                minima[n] = count
            if count < n:
                violators.append(g)
    return ScanReport(
        n_max=n_max,
        violators=tuple(violators),
        minima=minima,
        instances_examined=examined,
        iso_classes=examined,
        elapsed=time.monotonic() - start,
    )

"""Unweighted spanner constructions built on the greedy distance test.

Four constructions live here: the pairwise greedy that repairs every pair at
host distance exactly d down to distance <= r, its variant over explicit path
collections, the round-based parallel greedy with matchings, and the
composite that unions two greedy runs into a (k, k-1) spanner. All of them
are deterministic: pairs are scanned in lexicographic order and the repair
path is the lexicographically smallest shortest path under id-sorted
adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Sequence

from .clustering import cluster_level
from .graphs import (
    INF,
    Multigraph,
    PathSeq,
    SpannerParams,
    hop_distance,
    hop_distances,
    weighted_dist,
)

__all__ = [
    "PathCollection",
    "SpannerResult",
    "greedy_dr_spanner",
    "greedy_path_collection_spanner",
    "parallel_greedy_spanner",
    "sqrt_k_spanner",
    "union_hybrid_spanner",
    "greedy_multiplicative_spanner",
    "matching_rounds",
    "sqrt_k_stretch",
]


@dataclass(frozen=True)
class PathCollection:
    """Ordered collection of equal-hop-length paths over n vertices."""

    n: int
    paths: tuple[PathSeq, ...]

    def __post_init__(self):
        if not self.paths:
            return
        d = self.paths[0].hop_length
        for p in self.paths:
            if p.hop_length != d:
                raise ValueError("all paths must share one hop length")
            if len(set(p.vertices)) != len(p.vertices):
                raise ValueError("path vertices must be pairwise distinct")
            if any(not 0 <= v < self.n for v in p.vertices):
                raise ValueError("path vertex outside collection range")

    @property
    def hop_length(self) -> int:
        return self.paths[0].hop_length if self.paths else 0


@dataclass(frozen=True)
class SpannerResult:
    """Edge-id subset of a host graph plus construction provenance."""

    n: int
    edges: tuple[int, ...]
    paths: tuple[PathSeq, ...]
    algorithm: str
    meta: dict = field(default_factory=dict)

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    def view(self, g: Multigraph):
        return g.view(self.edge_set)


def _result(n: int, paths: Sequence[PathSeq], algorithm: str, extra=(), **meta) -> SpannerResult:
    ids: set[int] = set(extra)
    for p in paths:
        ids.update(p.edge_ids)
    return SpannerResult(n, tuple(sorted(ids)), tuple(paths), algorithm, dict(meta))


def pairs_at_distance(g: Multigraph, d: int) -> list[tuple[int, int]]:
    """All pairs (x, y), x < y, at hop distance exactly d, in lex order."""
    full = g.view()
    out: list[tuple[int, int]] = []
    for x in range(g.n):
        dist = hop_distances(full, x, d)
        out.extend((x, y) for y in sorted(dist) if y > x and dist[y] == d)
    return out


def lex_shortest_path(g: Multigraph, x: int, y: int, d: int) -> PathSeq:
    """Lexicographically smallest d-hop shortest path from x to y."""
    dist_to_y = hop_distances(g.view(), y, d)
    if dist_to_y.get(x) != d:
        raise ValueError(f"vertices {x},{y} are not at distance {d}")
    verts = [x]
    eids = []
    cur = x
    for remaining in range(d, 0, -1):
        for nbr, eid in g.adj(cur):
            if dist_to_y.get(nbr) == remaining - 1:
                verts.append(nbr)
                eids.append(eid)
                cur = nbr
                break
    return PathSeq.from_graph(g, verts, eids)


def _assert_distant_half(dist_fn, vertices: tuple[int, ...], r: int) -> None:
    # Any freshly repaired 2-path has one half still far in the pre-addition
    # graph: the halves sum to more than r, so one exceeds r // 2.
    x, mid, y = vertices
    half = r // 2
    a = dist_fn(x, mid, half)
    b = dist_fn(mid, y, half)
    assert a > half or b > half, f"2-path ({x},{mid},{y}) lost both distant halves"


def greedy_dr_spanner(g: Multigraph, d: int, r: int) -> SpannerResult:
    """Repair every pair at host distance exactly d to distance <= r.

    Pairs are scanned once in lexicographic order; a pair still at distance
    > r in the spanner built so far contributes the lexicographically
    smallest shortest d-path of the host graph.
    """
    if g.weighted:
        raise ValueError("greedy_dr_spanner expects an unweighted graph")
    if d < 1 or r < d:
        raise ValueError("need d >= 1 and r >= d")
    included: set[int] = set()
    hview = g.view(included)
    paths: list[PathSeq] = []
    for x, y in pairs_at_distance(g, d):
        if hop_distance(hview, x, y, r) > r:
            p = lex_shortest_path(g, x, y, d)
            if d == 2:
                _assert_distant_half(
                    lambda a, b, c: hop_distance(hview, a, b, c), p.vertices, r
                )
            included.update(p.edge_ids)
            paths.append(p)
    return _result(g.n, paths, "greedy-dr", d=d, r=r)


class _UnionGraph:
    """Grow-only adjacency over a fixed vertex range, for path collections."""

    def __init__(self, n: int):
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_path(self, p: PathSeq) -> None:
        for a, b in zip(p.vertices, p.vertices[1:]):
            self.adj[a].append(b)
            self.adj[b].append(a)

    def hop_distance(self, x: int, y: int, cutoff: int) -> float:
        if x == y:
            return 0
        seen = {x}
        frontier = [x]
        depth = 0
        while frontier and depth < cutoff:
            depth += 1
            nxt = []
            for v in frontier:
                for u in self.adj[v]:
                    if u not in seen:
                        if u == y:
                            return depth
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return INF


def greedy_path_collection_spanner(coll: PathCollection, r: int) -> SpannerResult:
    """Greedy pass over an explicit path collection.

    Each path is kept iff its endpoints are still at distance > r in the
    union of previously kept paths.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    union = _UnionGraph(coll.n)
    kept: list[PathSeq] = []
    for p in coll.paths:
        if union.hop_distance(p.x, p.y, r) > r:
            if p.hop_length == 2:
                _assert_distant_half(union.hop_distance, p.vertices, r)
            union.add_path(p)
            kept.append(p)
    return _result(coll.n, kept, "greedy-paths", r=r, offered=len(coll.paths))


def matching_rounds(g: Multigraph, edge_order: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Greedy matching decomposition of the edge set, scanning ids in order.

    Each round collects the maximal matching formed by taking every remaining
    edge whose endpoints are still free in that round. Deterministic, and on
    dimension-ordered hypercube edge lists it recovers the dimension
    matchings exactly.
    """
    remaining = list(edge_order) if edge_order is not None else list(range(g.m))
    rounds: list[tuple[int, ...]] = []
    while remaining:
        used: set[int] = set()
        taken: list[int] = []
        leftover: list[int] = []
        for eid in remaining:
            u, v = g.endpoints(eid)
            if u in used or v in used:
                leftover.append(eid)
            else:
                used.update((u, v))
                taken.append(eid)
        rounds.append(tuple(taken))
        remaining = leftover
    return rounds


def parallel_greedy_spanner(
    g: Multigraph, k: int, matchings: Sequence[Iterable[int]]
) -> SpannerResult:
    """Round-based greedy: every edge of a round tests distance > 2k-1
    against the spanner as it stood before the round, and all passing edges
    join together.

    Each round must be a matching in g. The result records, per added edge,
    an orientation toward the endpoint whose cluster level was lower in the
    pre-round spanner (ties toward the smaller id); in-degrees under this
    orientation witness the arboricity bound.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    params = SpannerParams(n=g.n, k=k)
    threshold = 2 * k - 1
    included: set[int] = set()
    hview = g.view(included)
    orientation: dict[int, int] = {}
    rounds_added: list[tuple[int, ...]] = []
    paths: list[PathSeq] = []
    for rnd, matching in enumerate(matchings):
        ids = sorted(matching)
        used: set[int] = set()
        for eid in ids:
            if not 0 <= eid < g.m:
                raise ValueError(f"edge id {eid} not in graph")
            u, v = g.endpoints(eid)
            if u in used or v in used:
                clash = u if u in used else v
                raise ValueError(f"round {rnd} is not a matching: vertex {clash} repeats")
            used.update((u, v))
        passing = [
            eid
            for eid in ids
            if hop_distance(hview, *g.endpoints(eid), threshold) > threshold
        ]
        for eid in passing:
            u, v = g.endpoints(eid)
            lu = cluster_level(hview, u, params).level
            lv = cluster_level(hview, v, params).level
            orientation[eid] = u if (lu, u) <= (lv, v) else v
        included.update(passing)
        rounds_added.append(tuple(passing))
        paths.extend(PathSeq.from_graph(g, g.endpoints(eid), (eid,)) for eid in passing)
    return _result(
        g.n,
        paths,
        "parallel-greedy",
        k=k,
        rounds=rounds_added,
        orientation=orientation,
    )


def sqrt_k_stretch(k: int) -> tuple[int, int]:
    """Hop length and stretch target (d, r) of the sqrt-k construction."""
    d = isqrt(k)
    if d * d < k:
        d += 1
    return d, 4 * d * d + 2 * (2 * d - 1) * d


def sqrt_k_spanner(g: Multigraph, k: int) -> SpannerResult:
    """Greedy repair of pairs at distance ceil(sqrt(k)) down to O(k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    d, r = sqrt_k_stretch(k)
    base = greedy_dr_spanner(g, d, r)
    return SpannerResult(base.n, base.edges, base.paths, "sqrt-k", {"k": k, "d": d, "r": r})


def union_hybrid_spanner(g: Multigraph, k: int) -> SpannerResult:
    """Union of the 1 -> 2k-1 and 2 -> 2k greedy runs: a (k, k-1) spanner."""
    if k < 1:
        raise ValueError("k must be at least 1")
    one = greedy_dr_spanner(g, 1, 2 * k - 1)
    two = greedy_dr_spanner(g, 2, 2 * k)
    ids = sorted(set(one.edges) | set(two.edges))
    return SpannerResult(
        g.n,
        tuple(ids),
        one.paths + two.paths,
        "union-hybrid",
        {"k": k, "alpha": k, "beta": k - 1, "parts": ["greedy-dr:1", "greedy-dr:2"]},
    )


def greedy_multiplicative_spanner(g: Multigraph, t: float) -> SpannerResult:
    """Classic greedy t-spanner: scan edges by ascending (weight, id) and add
    each edge whose endpoints are farther than t times its weight."""
    if t < 1:
        raise ValueError("stretch must be at least 1")
    included: set[int] = set()
    hview = g.view(included)
    paths: list[PathSeq] = []
    order = sorted(range(g.m), key=lambda e: (g.weight(e), e))
    for eid in order:
        u, v = g.endpoints(eid)
        if g.weighted:
            cap = t * g.weight(eid)
            far = weighted_dist(hview, u, v, cap=cap) > cap
        else:
            far = hop_distance(hview, u, v, int(t)) > t
        if far:
            included.add(eid)
            paths.append(PathSeq.from_graph(g, (u, v), (eid,)))
    return _result(g.n, paths, "greedy-multiplicative", t=t)

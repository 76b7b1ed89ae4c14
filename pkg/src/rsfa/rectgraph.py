"""Rectilinear graphs: axis-parallel segment sets, weights, and service validation.

A solution (or a pre-specified tree) is a bag of axis-parallel segments.
``normalize`` merges collinear overlaps and splits segments at mutual
intersections, so the weight counts every covered piece once.  The validator
checks the defining property of an arborescence forest: every terminal has a
path in the graph to a covering root whose length equals the L1 distance
(such a path is necessarily a monotone staircase).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .geometry import GridPoint, Instance, covers, l1_dist


@dataclass(frozen=True, order=True)
class Segment:
    """Axis-parallel segment between two lattice points (possibly degenerate)."""

    a: GridPoint
    b: GridPoint

    def __post_init__(self) -> None:
        if self.a.x != self.b.x and self.a.y != self.b.y:
            raise ValueError(f"segment {self.a}-{self.b} is not axis-parallel")

    @property
    def length(self) -> int:
        return l1_dist(self.a, self.b)

    @property
    def is_degenerate(self) -> bool:
        return self.a == self.b

    def oriented(self) -> "Segment":
        """Endpoints in lexicographic order."""
        return self if self.a <= self.b else Segment(self.b, self.a)

    def contains(self, p: GridPoint) -> bool:
        if self.a.x == self.b.x:
            return p.x == self.a.x and min(self.a.y, self.b.y) <= p.y <= max(self.a.y, self.b.y)
        return p.y == self.a.y and min(self.a.x, self.b.x) <= p.x <= max(self.a.x, self.b.x)


def seg(x1: int, y1: int, x2: int, y2: int) -> Segment:
    """Shorthand constructor used heavily in tests and demos."""
    return Segment(GridPoint(x1, y1), GridPoint(x2, y2))


@dataclass(frozen=True)
class RectGraph:
    """A rectilinear graph as a tuple of segments (union semantics)."""

    segments: tuple[Segment, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(s.oriented() for s in self.segments))

    def __or__(self, other: "RectGraph") -> "RectGraph":
        return RectGraph(self.segments + other.segments)

    def contains_point(self, p: GridPoint) -> bool:
        return any(s.contains(p) for s in self.segments)

    def contains_segment(self, s: Segment) -> bool:
        """True iff every point of s lies on this graph's union."""
        s = s.oriented()
        if s.is_degenerate:
            return self.contains_point(s.a)
        if s.a.x == s.b.x:
            intervals = [(t.a.y, t.b.y) for t in self.segments
                         if t.a.x == t.b.x == s.a.x and t.b.y >= s.a.y and t.a.y <= s.b.y]
            lo, hi = s.a.y, s.b.y
        else:
            intervals = [(t.a.x, t.b.x) for t in self.segments
                         if t.a.y == t.b.y == s.a.y and t.b.x >= s.a.x and t.a.x <= s.b.x]
            lo, hi = s.a.x, s.b.x
        intervals.sort()
        reach = lo
        for a, b in intervals:
            if a > reach:
                return False
            reach = max(reach, b)
            if reach >= hi:
                return True
        return reach >= hi


EMPTY_GRAPH = RectGraph()


def _merge_runs(intervals: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Union of closed intervals; touching intervals merge into one run."""
    runs: list[list[int]] = []
    for a, b in sorted(intervals):
        if runs and a <= runs[-1][1]:
            runs[-1][1] = max(runs[-1][1], b)
        else:
            runs.append([a, b])
    return [(a, b) for a, b in runs]


def normalize(g: RectGraph, split_at: tuple[GridPoint, ...] = ()) -> RectGraph:
    """Equivalent graph with overlaps merged and segments split at crossings.

    Extra split points (e.g. instance terminals) may be supplied; they become
    segment endpoints wherever they lie on the union.  No two output segments
    share more than an endpoint.
    """
    verts: dict[int, list[tuple[int, int]]] = {}
    horiz: dict[int, list[tuple[int, int]]] = {}
    isolated: set[GridPoint] = set()
    for s in g.segments:
        if s.is_degenerate:
            isolated.add(s.a)
        elif s.a.x == s.b.x:
            verts.setdefault(s.a.x, []).append((s.a.y, s.b.y))
        else:
            horiz.setdefault(s.a.y, []).append((s.a.x, s.b.x))
    vruns = {x: _merge_runs(iv) for x, iv in verts.items()}
    hruns = {y: _merge_runs(iv) for y, iv in horiz.items()}

    out: list[Segment] = []
    for x, runs in sorted(vruns.items()):
        for y1, y2 in runs:
            cuts = {y1, y2}
            for y, hrs in hruns.items():
                if y1 <= y <= y2 and any(a <= x <= b for a, b in hrs):
                    cuts.add(y)
            for p in split_at:
                if p.x == x and y1 <= p.y <= y2:
                    cuts.add(p.y)
            ys = sorted(cuts)
            out.extend(seg(x, ya, x, yb) for ya, yb in zip(ys, ys[1:]))
    for y, runs in sorted(hruns.items()):
        for x1, x2 in runs:
            cuts = {x1, x2}
            for x, vrs in vruns.items():
                if x1 <= x <= x2 and any(a <= y <= b for a, b in vrs):
                    cuts.add(x)
            for p in split_at:
                if p.y == y and x1 <= p.x <= x2:
                    cuts.add(p.x)
            xs = sorted(cuts)
            out.extend(seg(xa, y, xb, y) for xa, xb in zip(xs, xs[1:]))
    for p in sorted(isolated):
        if not any(s.contains(p) for s in out):
            out.append(Segment(p, p))
    return RectGraph(tuple(out))


def weight(g: RectGraph) -> int:
    """Total length of the union of g's segments, overlaps counted once."""
    return sum(s.length for s in normalize(g).segments)


class PlanarGraph:
    """Planarized view of a RectGraph: vertices, weighted edges, shortest paths."""

    def __init__(self, g: RectGraph, extra_points: tuple[GridPoint, ...] = ()):
        norm = normalize(g, split_at=extra_points)
        self.adj: dict[GridPoint, list[tuple[GridPoint, int]]] = {}
        self.edges: list[Segment] = []
        for s in norm.segments:
            if s.is_degenerate:
                self.adj.setdefault(s.a, [])
                continue
            self.edges.append(s)
            self.adj.setdefault(s.a, []).append((s.b, s.length))
            self.adj.setdefault(s.b, []).append((s.a, s.length))

    def has_vertex(self, p: GridPoint) -> bool:
        return p in self.adj

    def shortest_paths(self, src: GridPoint) -> tuple[dict[GridPoint, int], dict[GridPoint, GridPoint]]:
        dist = {src: 0}
        prev: dict[GridPoint, GridPoint] = {}
        heap = [(0, src)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for v, w in self.adj.get(u, ()):
                nd = d + w
                if v not in dist or nd < dist[v]:
                    dist[v] = nd
                    prev[v] = u
                    heapq.heappush(heap, (nd, v))
        return dist, prev

    @staticmethod
    def recover_path(prev: dict[GridPoint, GridPoint], src: GridPoint, dst: GridPoint) -> list[GridPoint]:
        path = [dst]
        while path[-1] != src:
            path.append(prev[path[-1]])
        path.reverse()
        return path


@dataclass(frozen=True)
class ServiceEntry:
    point: GridPoint
    served: bool
    witness: GridPoint | None
    path: tuple[GridPoint, ...] = ()


@dataclass(frozen=True)
class ServiceReport:
    entries: tuple[ServiceEntry, ...]

    @property
    def feasible(self) -> bool:
        return all(e.served for e in self.entries)

    @property
    def unserved(self) -> tuple[GridPoint, ...]:
        return tuple(e.point for e in self.entries if not e.served)


def path_is_staircase(path: list[GridPoint] | tuple[GridPoint, ...]) -> bool:
    """Both coordinates monotone non-increasing along the path."""
    return all(covers(b, a) for a, b in zip(path, path[1:]))


def validate_rsfa(g: RectGraph, inst: Instance) -> ServiceReport:
    """Check that every instance point is served by g.

    A point is served when some covering root lies on the graph together with
    the point, and the shortest path between them along the graph has length
    exactly their L1 distance.  The witness path (a staircase from the point
    down to the root) is recorded in the report.
    """
    extra = tuple(inst.points) + tuple(inst.roots)
    pg = PlanarGraph(g, extra_points=extra)
    entries = []
    for p in inst.points:
        served, witness, path = False, None, ()
        if pg.has_vertex(p):
            dist, prev = pg.shortest_paths(p)
            for r in inst.roots:
                if covers(r, p) and pg.has_vertex(r) and dist.get(r) == l1_dist(p, r):
                    served, witness = True, r
                    path = tuple(PlanarGraph.recover_path(prev, p, r))
                    break
        entries.append(ServiceEntry(p, served, witness, path))
    return ServiceReport(tuple(entries))

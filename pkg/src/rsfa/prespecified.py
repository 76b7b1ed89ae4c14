"""Growing a fixed arborescence to cover extra points, via a forest reduction.

Given an arborescence T rooted at the origin and new points strictly off T
inside its bounding box, the task is the cheapest superset of T that is an
arborescence for old and new points together.  New material only ever needs
to attach to T at a small set of candidate anchors: vertices of T of degree 1
or with perpendicular incident segments, plus the points where each new
point's leftward/downward free sight lands on T.  Solving a forest problem
with the new points as terminals and those anchors as roots, then unioning
the answer with T, yields the combined solution.

The substrate grid for all of this consists of the bounding-box boundary, T
itself, the four maximal free sights (extensions) of every new point, and the
right/upward extensions of the anchor vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import ORIGIN, GridPoint, Instance
from .rectgraph import (PlanarGraph, RectGraph, Segment, normalize, seg,
                        validate_rsfa, weight)


@dataclass(frozen=True)
class BoundingBox:
    xmin: int
    ymin: int
    xmax: int
    ymax: int

    def contains(self, p: GridPoint) -> bool:
        return self.xmin <= p.x <= self.xmax and self.ymin <= p.y <= self.ymax

    def boundary(self) -> list[Segment]:
        return [seg(self.xmin, self.ymin, self.xmax, self.ymin),
                seg(self.xmin, self.ymax, self.xmax, self.ymax),
                seg(self.xmin, self.ymin, self.xmin, self.ymax),
                seg(self.xmax, self.ymin, self.xmax, self.ymax)]


def bounding_box(g: RectGraph) -> BoundingBox:
    xs = [c for s in g.segments for c in (s.a.x, s.b.x)]
    ys = [c for s in g.segments for c in (s.a.y, s.b.y)]
    return BoundingBox(min(xs), min(ys), max(xs), max(ys))


@dataclass(frozen=True)
class PrespecifiedInstance:
    """A fixed tree, its terminals and root, and the new points to absorb."""

    tree: RectGraph
    tree_terminals: tuple[GridPoint, ...]
    root: GridPoint
    new_points: tuple[GridPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tree_terminals", tuple(self.tree_terminals))
        object.__setattr__(self, "new_points", tuple(self.new_points))
        if self.root != ORIGIN:
            raise ValueError("the pre-specified tree must be rooted at the origin")
        report = validate_rsfa(self.tree, Instance(self.tree_terminals, (self.root,)))
        if not report.feasible:
            raise ValueError(f"tree does not serve its own terminals: {report.unserved}")
        bb = bounding_box(self.tree)
        if len(set(self.new_points)) != len(self.new_points):
            raise ValueError("duplicate new point")
        for p in self.new_points:
            if not bb.contains(p):
                raise ValueError(f"new point {p} outside the tree's bounding box")
            if self.tree.contains_point(p):
                raise ValueError(f"new point {p} lies on the tree")

    @property
    def bb(self) -> BoundingBox:
        return bounding_box(self.tree)


def _extension(p: GridPoint, t: RectGraph, bb: BoundingBox, dx: int, dy: int) -> Segment:
    """Maximal segment from p in direction (dx, dy) whose interior avoids the
    tree union and the box boundary; may degenerate to p itself.

    Obstacle points may coincide with the segment's endpoints, so a
    perpendicular obstacle through p itself does not block, while an obstacle
    collinear with the ray blocks at its near endpoint (immediately, when it
    covers points arbitrarily close to p).
    """
    if (dx > 0 and p.x >= bb.xmax) or (dx < 0 and p.x <= bb.xmin) \
            or (dy > 0 and p.y >= bb.ymax) or (dy < 0 and p.y <= bb.ymin):
        return Segment(p, p)
    obstacles = list(t.segments) + bb.boundary()
    best: int | None = None
    for s in obstacles:
        s = s.oriented()
        horizontal = s.a.y == s.b.y
        if dx != 0:
            if horizontal:  # parallel to the ray
                if s.a.y != p.y:
                    continue
                lo, hi = s.a.x - p.x, s.b.x - p.x
            else:  # perpendicular
                if not s.a.y <= p.y <= s.b.y:
                    continue
                lo = hi = s.a.x - p.x
        else:
            if not horizontal:
                if s.a.x != p.x:
                    continue
                lo, hi = s.a.y - p.y, s.b.y - p.y
            else:
                if not s.a.x <= p.x <= s.b.x:
                    continue
                lo = hi = s.a.y - p.y
        if dx < 0 or dy < 0:
            lo, hi = -hi, -lo
        if hi <= 0:
            continue
        if lo == hi == 0:
            continue  # perpendicular obstacle through p: endpoint contact only
        if lo <= 0:
            return Segment(p, p)  # collinear obstacle covers points just past p
        if best is None or lo < best:
            best = lo
    assert best is not None  # the far box edge always blocks
    end = GridPoint(p.x + dx * best, p.y + dy * best)
    return Segment(p, end).oriented()


def extensions(p: GridPoint, t: RectGraph, bb: BoundingBox) -> tuple[Segment, Segment, Segment, Segment]:
    """(right, left, up, down) maximal free sights of p; any may be degenerate."""
    return (_extension(p, t, bb, +1, 0),
            _extension(p, t, bb, -1, 0),
            _extension(p, t, bb, 0, +1),
            _extension(p, t, bb, 0, -1))


def essential_vertices(t: RectGraph) -> list[GridPoint]:
    """Vertices of degree 1, and degree-2 vertices whose segments are perpendicular."""
    pg = PlanarGraph(t)
    out = []
    for v, nbrs in pg.adj.items():
        if len(nbrs) == 1:
            out.append(v)
        elif len(nbrs) == 2:
            (u1, _), (u2, _) = nbrs
            d1_vert = u1.x == v.x
            d2_vert = u2.x == v.x
            if d1_vert != d2_vert:
                out.append(v)
    return sorted(out)


def essential_endpoints(pts, t: RectGraph, bb: BoundingBox) -> list[GridPoint]:
    """Landing points of left/downward extensions that lie on the tree."""
    out = set()
    for p in pts:
        _, left, _, down = extensions(p, t, bb)
        for cand in (left.a, down.a):
            if cand != p and t.contains_point(cand):
                out.add(cand)
    return sorted(out)


def build_subgrid(inst: PrespecifiedInstance) -> RectGraph:
    """Substrate grid: box boundary + tree + new-point extensions
    + right/up extensions of the anchor vertices."""
    bb = inst.bb
    segs: list[Segment] = list(bb.boundary())
    segs.extend(inst.tree.segments)
    for p in inst.new_points:
        for e in extensions(p, inst.tree, bb):
            if not e.is_degenerate:
                segs.append(e)
    for v in essential_vertices(inst.tree):
        right, _, up, _ = extensions(v, inst.tree, bb)
        for e in (right, up):
            if not e.is_degenerate:
                segs.append(e)
    return normalize(RectGraph(tuple(segs)))


def to_rsfa_instance(inst: PrespecifiedInstance) -> Instance:
    """Forest instance equivalent to the augmentation problem: the new points
    against the anchor roots (tree vertices and extension landing points)."""
    bb = inst.bb
    roots = set(essential_vertices(inst.tree))
    roots.update(essential_endpoints(inst.new_points, inst.tree, bb))
    points = [p for p in inst.new_points if p not in roots]
    return Instance(tuple(points), tuple(sorted(roots)))


def solve_prespecified(inst: PrespecifiedInstance, solver) -> tuple[int, RectGraph]:
    """Combined solution: the tree plus a solved forest over the reduced instance.

    ``solver`` is any forest solver taking an Instance and returning
    (value, forest).
    """
    reduced = to_rsfa_instance(inst)
    _, forest = solver(reduced)
    combined = normalize(inst.tree | forest)
    return weight(combined), combined


def attachments_within_subgrid(inst: PrespecifiedInstance, forest: RectGraph) -> list[Segment]:
    """Solver-emitted segments that leave the substrate grid (empty = conformant)."""
    sub = build_subgrid(inst)
    return [s for s in normalize(forest).segments if not sub.contains_segment(s)]

"""The Hanan grid of a point set: coordinate lines, indexed intersections, unit edges.

Intersection points are numbered 1..v*h in lexicographic order (x ascending,
then y ascending), i.e. column-major bottom-to-top.  With h rows per column,
point k has its left neighbour at k-h and the point directly below at k-1
(except at the bottom of a column).  Sweep solvers rely on exactly this
numbering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import GridPoint
from .rectgraph import RectGraph, Segment


@dataclass(frozen=True)
class HananGrid:
    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def v(self) -> int:
        return len(self.xs)

    @property
    def h(self) -> int:
        return len(self.ys)

    @property
    def num_points(self) -> int:
        return self.v * self.h

    def point_at(self, k: int) -> GridPoint:
        """Intersection point with 1-based lexicographic index k."""
        if not 1 <= k <= self.num_points:
            raise ValueError(f"index {k} out of range 1..{self.num_points}")
        col, row = divmod(k - 1, self.h)
        return GridPoint(self.xs[col], self.ys[row])

    def index_of(self, p: GridPoint) -> int:
        if p.x not in self.xs or p.y not in self.ys:
            raise ValueError(f"{p} is not a grid intersection")
        return self.xs.index(p.x) * self.h + self.ys.index(p.y) + 1

    def points(self) -> list[GridPoint]:
        return [self.point_at(k) for k in range(1, self.num_points + 1)]

    def unit_edges(self) -> list[Segment]:
        """Edges between adjacent intersections, horizontal and vertical."""
        edges = []
        for i, x in enumerate(self.xs):
            for j, y in enumerate(self.ys):
                if i + 1 < self.v:
                    edges.append(Segment(GridPoint(x, y), GridPoint(self.xs[i + 1], y)))
                if j + 1 < self.h:
                    edges.append(Segment(GridPoint(x, y), GridPoint(x, self.ys[j + 1])))
        return edges

    def as_rectgraph(self) -> RectGraph:
        return RectGraph(tuple(self.unit_edges()))


def build(points) -> HananGrid:
    """Hanan grid of the given points: all lines through their coordinates."""
    pts = list(points)
    if not pts:
        raise ValueError("cannot build a grid from no points")
    return HananGrid(tuple(sorted({p.x for p in pts})), tuple(sorted({p.y for p in pts})))

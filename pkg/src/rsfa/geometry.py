"""First-quadrant L1 geometry: points, cover order, meets, and problem instances.

All coordinates are non-negative integers. A point ``p`` covers ``q`` when both
of its coordinates are less than or equal to those of ``q``; only covering
roots can serve a point with a monotone path.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class GridPoint:
    """Integer lattice point in the first quadrant."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError(f"point {(self.x, self.y)} outside the first quadrant")

    def transpose(self) -> "GridPoint":
        return GridPoint(self.y, self.x)


ORIGIN = GridPoint(0, 0)


def l1_dist(p: GridPoint, q: GridPoint) -> int:
    """L1 (Manhattan) distance between two points."""
    return abs(p.x - q.x) + abs(p.y - q.y)


def covers(p: GridPoint, q: GridPoint) -> bool:
    """True iff p is coordinate-wise <= q, i.e. q is reachable from p going up/right."""
    return p.x <= q.x and p.y <= q.y


def meet(p: GridPoint, q: GridPoint) -> GridPoint:
    """Coordinate-wise minimum of p and q; covers both arguments."""
    return GridPoint(min(p.x, q.x), min(p.y, q.y))


def norm(p: GridPoint) -> int:
    """Sum of coordinates; the natural merge score of greedy heuristics."""
    return p.x + p.y


def nearest_covering_root(p: GridPoint, roots: list[GridPoint]) -> tuple[GridPoint, int]:
    """Nearest root that covers p, ties broken by smallest index in ``roots``.

    Always defined when the origin is present, since (0,0) covers every
    first-quadrant point.
    """
    best: tuple[GridPoint, int] | None = None
    for r in roots:
        if covers(r, p):
            d = l1_dist(p, r)
            if best is None or d < best[1]:
                best = (r, d)
    if best is None:
        raise ValueError(f"no root covers {p}")
    return best


@dataclass(frozen=True)
class Instance:
    """An arborescence-forest problem: terminals ``points`` and ``roots``.

    The origin must be a root; points and roots are disjoint and duplicate-free.
    """

    points: tuple[GridPoint, ...]
    roots: tuple[GridPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "roots", tuple(self.roots))
        if ORIGIN not in self.roots:
            raise ValueError("root (0,0) required")
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate point")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError("duplicate root")
        if set(self.points) & set(self.roots):
            raise ValueError("points and roots must be disjoint")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.roots)

    def transpose(self) -> "Instance":
        return Instance([p.transpose() for p in self.points],
                        [r.transpose() for r in self.roots])

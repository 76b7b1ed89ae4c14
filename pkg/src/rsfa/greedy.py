"""Guarded greedy baseline: merge terminals at coordinate-wise meets, or retire to roots.

The classic merge heuristic repeatedly replaces the pair p, q maximizing the
coordinate sum of their meet <p,q> by that meet.  With multiple roots this
can be arbitrarily bad: two terminals sitting next to their own roots would
merge and then drag a long connection to a far-away root.  The guard retires
a terminal straight to its nearest covering root whenever that costs no more
than the terminal's share of its best merge.  No approximation ratio is
claimed for either variant; the naive one exists to demonstrate the failure
mode quantitatively.
"""

from __future__ import annotations

from .geometry import GridPoint, Instance, l1_dist, meet, nearest_covering_root, norm
from .rectgraph import RectGraph, Segment, weight


def _connector(parent: GridPoint, child: GridPoint, out: list[Segment]) -> None:
    corner = GridPoint(child.x, parent.y)
    if corner != parent:
        out.append(Segment(parent, corner))
    if corner != child:
        out.append(Segment(corner, child))


def greedy_baseline(inst: Instance, naive: bool = False) -> tuple[int, RectGraph]:
    """Feasible forest from the guarded merge heuristic (no ratio guarantee).

    With ``naive=True`` the guard is disabled and pairs merge whenever
    possible, reproducing the known bad behaviour on multi-root inputs.
    """
    roots = list(inst.roots)
    rootset = set(roots)
    active: list[GridPoint] = list(inst.points)
    segs: list[Segment] = []

    while active:
        retire_to = {p: nearest_covering_root(p, roots) for p in active}
        if len(active) == 1:
            p = active[0]
            _connector(retire_to[p][0], p, segs)
            active = []
            break

        best_pair = None
        best_score = -1
        for i in range(len(active)):
            for j in range(i + 1, len(active)):
                score = norm(meet(active[i], active[j]))
                if score > best_score:
                    best_score, best_pair = score, (i, j)

        if not naive:
            retired = None
            for idx, p in enumerate(active):
                side_cost = norm(p) - max(norm(meet(p, q))
                                          for q in active if q is not p)
                if retire_to[p][1] <= side_cost:
                    retired = idx
                    break
            if retired is not None:
                p = active.pop(retired)
                _connector(retire_to[p][0], p, segs)
                continue

        i, j = best_pair
        p, q = active[i], active[j]
        m = meet(p, q)
        _connector(m, p, segs)
        _connector(m, q, segs)
        active = [a for k, a in enumerate(active) if k not in (i, j)]
        if m in rootset:
            continue  # the meet landed on a root; both terminals are grounded
        if m not in active:
            active.append(m)

    forest = RectGraph(tuple(segs))
    return weight(forest), forest

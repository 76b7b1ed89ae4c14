"""Ground-truth brute force: exhaustive minimum over monotone service structures.

Any feasible solution on a grid can be pruned to the union of one monotone
staircase per terminal (drop every edge no witness path uses), so the minimum
over edge subsets that serve all terminals equals the minimum over all
assignments of a descending grid path from each terminal to the first root it
meets.  The search below enumerates those assignments exhaustively with
branch-and-bound on the union weight; it is slow by design and guarded by an
edge budget.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import GridPoint, Instance
from .hanan import HananGrid, build
from .rectgraph import PlanarGraph, RectGraph, Segment

DEFAULT_EDGE_BUDGET = 24

_INF = 1 << 62


class OracleBudgetError(ValueError):
    """Raised when the grid exceeds the configured brute-force budget."""


@dataclass
class _Arena:
    """Planarized grid with indexed atomic edges and monotone adjacency."""

    edge_lengths: list[int]
    down_left: dict[GridPoint, list[tuple[GridPoint, int]]]
    edge_of: dict[tuple[GridPoint, GridPoint], int]
    edge_segs: list[Segment]

    @classmethod
    def from_graph(cls, g: RectGraph, anchors: tuple[GridPoint, ...]) -> "_Arena":
        pg = PlanarGraph(g, extra_points=anchors)
        lengths: list[int] = []
        segs: list[Segment] = []
        edge_of: dict[tuple[GridPoint, GridPoint], int] = {}
        down_left: dict[GridPoint, list[tuple[GridPoint, int]]] = {}
        for s in pg.edges:
            idx = len(lengths)
            lengths.append(s.length)
            segs.append(s)
            edge_of[(s.a, s.b)] = idx
            edge_of[(s.b, s.a)] = idx
            # oriented() puts a <= b, so a is the down/left endpoint
            down_left.setdefault(s.b, []).append((s.a, idx))
        for u in down_left:
            down_left[u].sort()
        return cls(lengths, down_left, edge_of, segs)

    def mask_weight(self, mask: int) -> int:
        total = 0
        lengths = self.edge_lengths
        while mask:
            lsb = mask & -mask
            total += lengths[lsb.bit_length() - 1]
            mask ^= lsb
        return total


def _paths_to_roots(arena: _Arena, start: GridPoint, roots: frozenset[GridPoint]) -> list[int]:
    """Edge masks of all descending paths from start to the first root met."""
    results: list[int] = []

    def walk(u: GridPoint, mask: int) -> None:
        if u in roots:
            results.append(mask)
            return
        for v, idx in arena.down_left.get(u, ()):
            walk(v, mask | (1 << idx))

    walk(start, 0)
    # distinct edge sets only; different vertex orders can repeat a set
    return sorted(set(results))


def _min_union(arena: _Arena, per_point_paths: list[list[int]], base_mask: int) -> tuple[int, int] | None:
    """Minimum-weight union of one path per point, on top of base_mask edges."""
    if any(not paths for paths in per_point_paths):
        return None
    order = sorted(range(len(per_point_paths)), key=lambda i: len(per_point_paths[i]))
    base_weight = arena.mask_weight(base_mask)
    best: list[int | None] = [None, None]  # weight, mask

    def assign(i: int, mask: int, w: int) -> None:
        if best[0] is not None and w >= best[0]:
            return
        if i == len(order):
            best[0], best[1] = w, mask
            return
        cands = []
        for pm in per_point_paths[order[i]]:
            cands.append((arena.mask_weight(pm & ~mask), pm))
        cands.sort()
        for marginal, pm in cands:
            if best[0] is not None and w + marginal >= best[0]:
                break
            assign(i + 1, mask | pm, w + marginal)

    assign(0, base_mask, base_weight)
    if best[0] is None:
        return None
    return best[0], best[1]


def _solve(points, roots, graph: RectGraph, required: RectGraph | None,
           edge_budget: int) -> tuple[int, RectGraph] | None:
    anchors = tuple(points) + tuple(roots)
    arena = _Arena.from_graph(graph, anchors)
    if len(arena.edge_lengths) > edge_budget:
        raise OracleBudgetError(
            f"grid too large for brute force: {len(arena.edge_lengths)} edges > budget {edge_budget}")
    base_mask = 0
    if required is not None:
        for s in required.segments:
            a, b = s.a, s.b
            # required segments are part of the arena by construction; map each
            # atomic piece onto its edge id
            for (u, v), idx in arena.edge_of.items():
                if u <= v and s.contains(u) and s.contains(v):
                    base_mask |= 1 << idx
    rootset = frozenset(roots)
    per_point = [_paths_to_roots(arena, p, rootset) for p in points]
    got = _min_union(arena, per_point, base_mask)
    if got is None:
        return None
    value, mask = got
    chosen = [arena.edge_segs[i] for i in range(len(arena.edge_segs)) if mask >> i & 1]
    return value, RectGraph(tuple(chosen))


def oracle_optimum(inst: Instance, grid: HananGrid | RectGraph | None = None,
                   edge_budget: int = DEFAULT_EDGE_BUDGET) -> tuple[int, RectGraph]:
    """Exhaustive optimum over subsets of the grid's edges that serve every point.

    ``grid`` defaults to the Hanan grid of the instance; a RectGraph may be
    passed to restrict the search to an arbitrary substrate.
    """
    if not inst.points:
        return 0, RectGraph()
    if grid is None:
        grid = build(list(inst.points) + list(inst.roots))
    graph = grid.as_rectgraph() if isinstance(grid, HananGrid) else grid
    got = _solve(inst.points, inst.roots, graph, None, edge_budget)
    if got is None:
        raise ValueError("instance is infeasible on the given grid")
    return got


def constrained_optimum(points, root: GridPoint, substrate: RectGraph, required: RectGraph,
                        edge_budget: int = DEFAULT_EDGE_BUDGET) -> tuple[int, RectGraph] | None:
    """Minimum-weight superset of ``required`` within ``substrate`` serving ``points``.

    Every point needs a descending path to ``root`` along the result; edges of
    ``required`` are always present and counted once.  Returns None when some
    point cannot reach the root monotonically on the substrate.
    """
    return _solve(tuple(points), (root,), substrate, required, edge_budget)

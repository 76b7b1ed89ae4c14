"""Fixed-parameter sweep over Hanan-grid points with a sliding window of gate bits.

Grid intersections are visited in lexicographic order.  A state is the 0/1
gate pattern of the last h points (h = number of grid rows, the parameter);
positions holding a terminal or root are forced to 1.  A gate at a non-root
point must be wired to an already-open gate either one column to the left
(same row) or directly below (same column), paying the geometric gap; roots
open for free.  Keeping only the cheapest value per window pattern bounds the
live states by 2^h.

The final answer is read off as the minimum over all feasible end states.
Restricting the read-off to the single end state whose gates are exactly the
terminals in the last window (the stricter rule) can miss optima that thread
a plain grid point of the last column as a through-gate, so both values are
computed and the strict one is exposed for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import GridPoint, Instance
from .hanan import HananGrid, build
from .rectgraph import RectGraph, Segment

_INF = 1 << 62


@dataclass(frozen=True)
class FptResult:
    value: int
    forest: RectGraph
    strict_value: int | None
    h: int
    v: int
    transposed: bool

    def __iter__(self):
        return iter((self.value, self.forest))


@dataclass(frozen=True)
class EligibleState:
    """A sweep state: position index, window bit-pattern, accumulated length."""

    k: int
    window: int
    value: int


def _gap(coords: tuple[int, ...], i: int) -> int:
    return coords[i] - coords[i - 1]


def enumerate_transitions(state: EligibleState, grid: HananGrid,
                          terminal_idx: frozenset[int], root_idx: frozenset[int]):
    """Successor states for the next grid point, with the edge used (if any).

    Yields (successor, edge, parent_case) triples; ``edge`` is None for bit 0
    and for roots, ``parent_case`` is 'a' (horizontal) or 'b' (vertical).
    """
    h = grid.h
    k = state.k
    nxt = k + 1  # 1-based index of the point being decided
    col, row = divmod(nxt - 1, h)
    forced = nxt in terminal_idx or nxt in root_idx
    width = min(k, h)

    def pack(bit: int) -> int:
        w = (state.window << 1) | bit
        if width + 1 > h:
            w &= (1 << h) - 1
        return w

    for bit in (0, 1):
        if forced and bit == 0:
            continue
        if bit == 0:
            yield EligibleState(nxt, pack(0), state.value), None, None
            continue
        if nxt in root_idx:
            yield EligibleState(nxt, pack(1), state.value), None, None
            continue
        p = grid.point_at(nxt)
        # case (a): horizontal edge from the same row, previous column
        if col >= 1 and state.window >> (h - 1) & 1:
            cost = _gap(grid.xs, col)
            q = grid.point_at(nxt - h)
            yield EligibleState(nxt, pack(1), state.value + cost), Segment(q, p), "a"
        # case (b): vertical edge from directly below, same column
        if row >= 1 and state.window & 1:
            cost = _gap(grid.ys, row)
            q = grid.point_at(nxt - 1)
            yield EligibleState(nxt, pack(1), state.value + cost), Segment(q, p), "b"


def _sweep(inst: Instance) -> tuple[int, list[Segment], int | None, HananGrid]:
    grid = build(list(inst.points) + list(inst.roots))
    h = grid.h
    terminal_idx = frozenset(grid.index_of(p) for p in inst.points)
    root_idx = frozenset(grid.index_of(r) for r in inst.roots)

    # per-pattern best value plus a backpointer chain for realization
    trail: list[tuple[int, int, int | None, Segment | None]] = []  # (k, prev_id, edge)
    start = EligibleState(1, 1, 0)  # c_1 = (0,0) is a root, gate forced open
    trail.append((1, 1, None, None))
    frontier: dict[int, tuple[int, int]] = {1: (0, 0)}  # window -> (value, trail id)

    for k in range(1, grid.num_points):
        nxt_frontier: dict[int, tuple[int, int]] = {}
        for window, (value, tid) in sorted(frontier.items()):
            st = EligibleState(k, window, value)
            for succ, edge, case in enumerate_transitions(st, grid, terminal_idx, root_idx):
                cur = nxt_frontier.get(succ.window)
                if cur is None or succ.value < cur[0]:
                    trail.append((succ.k, succ.window, tid, edge))
                    nxt_frontier[succ.window] = (succ.value, len(trail) - 1)
        frontier = nxt_frontier
        if not frontier:
            break

    if not frontier:
        raise AssertionError("sweep lost all states; origin root should prevent this")

    width = min(grid.num_points, h)
    lo = grid.num_points - width + 1
    strict_window = 0
    for pos in range(lo, grid.num_points + 1):
        strict_window <<= 1
        if pos in terminal_idx or pos in root_idx:
            strict_window |= 1

    best_window = min(frontier, key=lambda w: (frontier[w][0], w))
    value, tid = frontier[best_window]
    strict = frontier[strict_window][0] if strict_window in frontier else None

    edges: list[Segment] = []
    while tid is not None:
        _, _, tid_prev, edge = trail[tid]
        if edge is not None:
            edges.append(edge)
        tid = tid_prev
    edges.reverse()
    return value, edges, strict, grid


def solve_rsfa_fpt(inst: Instance, transpose: str = "auto") -> FptResult:
    """Optimal forest via the windowed sweep.

    ``transpose`` picks the sweep orientation: 'auto' makes the row count the
    smaller grid dimension, 'never'/'always' force an orientation (used by
    tests to check orientation invariance).
    """
    grid0 = build(list(inst.points) + list(inst.roots))
    do_t = {"auto": grid0.h > grid0.v, "always": True, "never": False}[transpose]
    work = inst.transpose() if do_t else inst
    value, edges, strict, grid = _sweep(work)
    if do_t:
        edges = [Segment(s.a.transpose(), s.b.transpose()) for s in edges]
    return FptResult(value, RectGraph(tuple(edges)), strict, grid.h, grid.v, do_t)

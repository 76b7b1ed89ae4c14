"""Exact solvers: subset DP for the rooted arborescence and the forest variant.

The single-root solver tabulates, for every non-empty terminal subset X, the
optimal arborescence length l(A(X)) rooted at X's local root (coordinate-wise
minimum), via

    l(A(X)) = 0                                         if |X| = 1
    l(A(X)) = min over proper nonempty U of X of
              l(A(U)) + dist(r(X), r(U)) + l(A(X\\U)) + dist(r(X), r(X\\U))

The forest solver additionally tabulates F*(X) (hang A(X) from the nearest
root covering its local root) and splits subsets into independent components.
Total work is O(3^n) plus O(m n^2) for the local-root service table.
"""

from __future__ import annotations

from .geometry import GridPoint, Instance, covers, l1_dist, nearest_covering_root
from .rectgraph import RectGraph, Segment

_INF = 1 << 62


def _connector(parent: GridPoint, child: GridPoint, out: list[Segment]) -> None:
    """Canonical monotone L-path: horizontal at the parent's y, then vertical."""
    corner = GridPoint(child.x, parent.y)
    if corner != parent:
        out.append(Segment(parent, corner))
    if corner != child:
        out.append(Segment(corner, child))


def _rsa_tables(points: list[GridPoint]):
    """DP over bit-sets of points: local roots, values, split backpointers."""
    n = len(points)
    full = (1 << n) - 1
    rx = [0] * (full + 1)
    ry = [0] * (full + 1)
    val = [0] * (full + 1)
    bp = [0] * (full + 1)
    for m in range(1, full + 1):
        lb = m & -m
        p = points[lb.bit_length() - 1]
        rest = m ^ lb
        if rest:
            rx[m] = p.x if p.x < rx[rest] else rx[rest]
            ry[m] = p.y if p.y < ry[rest] else ry[rest]
        else:
            rx[m], ry[m] = p.x, p.y
    for m in range(1, full + 1):
        lb = m & -m
        rest = m ^ lb
        if not rest:
            continue
        mx, my = rx[m], ry[m]
        best = _INF
        best_u = 0
        s = rest
        while True:
            s = (s - 1) & rest
            u = lb | s
            c = m ^ u
            cand = (val[u] + rx[u] + ry[u] - mx - my
                    + val[c] + rx[c] + ry[c] - mx - my)
            if cand < best or (cand == best and u < best_u):
                best, best_u = cand, u
            if s == 0:
                break
        val[m] = best
        bp[m] = best_u
    return rx, ry, val, bp


def _realize_tree(rx, ry, bp, mask: int, out: list[Segment]) -> None:
    if mask & (mask - 1) == 0:
        return
    u = bp[mask]
    c = mask ^ u
    parent = GridPoint(rx[mask], ry[mask])
    for sub in (u, c):
        _connector(parent, GridPoint(rx[sub], ry[sub]), out)
        _realize_tree(rx, ry, bp, sub, out)


def solve_rsa(points, root: GridPoint) -> tuple[int, RectGraph]:
    """Optimal arborescence for ``points`` hanging from ``root``.

    The root must cover every point.  Returns the optimal length and a
    segment realization of that length.
    """
    pts = list(points)
    if not pts:
        return 0, RectGraph()
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate point")
    for p in pts:
        if p == root:
            raise ValueError(f"point {p} equals the root")
        if not covers(root, p):
            raise ValueError(f"uncoverable point: {p} is not covered by root {root}")
    rx, ry, val, bp = _rsa_tables(pts)
    full = (1 << len(pts)) - 1
    local = GridPoint(rx[full], ry[full])
    value = val[full] + l1_dist(root, local)
    segs: list[Segment] = []
    _connector(root, local, segs)
    _realize_tree(rx, ry, bp, full, segs)
    return value, RectGraph(tuple(segs))


def precompute_local_root_services(inst: Instance) -> dict[GridPoint, tuple[GridPoint, int]]:
    """Nearest covering root and distance for every candidate local-root location.

    Candidate locations combine an x-coordinate of one instance point with a
    y-coordinate of another (O(n^2) locations, O(m n^2) total work).
    """
    table: dict[GridPoint, tuple[GridPoint, int]] = {}
    roots = list(inst.roots)
    for p in inst.points:
        for q in inst.points:
            loc = GridPoint(p.x, q.y)
            if loc not in table:
                table[loc] = nearest_covering_root(loc, roots)
    return table


def _forest_tables(points: list[GridPoint], roots: list[GridPoint]):
    rx, ry, val, bp = _rsa_tables(points)
    n = len(points)
    full = (1 << n) - 1
    fstar = [_INF] * (full + 1)
    service: dict[GridPoint, tuple[GridPoint, int] | None] = {}
    for m in range(1, full + 1):
        loc = GridPoint(rx[m], ry[m])
        if loc not in service:
            try:
                service[loc] = nearest_covering_root(loc, roots)
            except ValueError:
                service[loc] = None
        s = service[loc]
        if s is not None:
            fstar[m] = val[m] + s[1]
    f = [0] * (full + 1)
    fbp = [0] * (full + 1)  # 0 = single component, else canonical submask
    for m in range(1, full + 1):
        best = fstar[m]
        best_y = 0
        lb = m & -m
        rest = m ^ lb
        if rest:
            s = rest
            while True:
                s = (s - 1) & rest
                y = lb | s
                cand = f[y] + f[m ^ y]
                if cand < best:
                    best, best_y = cand, y
                elif cand == best and best_y and y < best_y:
                    best_y = y
                if s == 0:
                    break
        f[m] = best
        fbp[m] = best_y
    return rx, ry, val, bp, fstar, f, fbp, service


def solve_rsfa_core(points, roots) -> tuple[int, RectGraph] | None:
    """Optimal forest for arbitrary root sets; None when some point is unservable.

    Unlike :func:`solve_rsfa_exact` this does not require the origin to be a
    root, which the approximation scheme's windowed subinstances rely on.
    """
    pts = list(points)
    rts = list(roots)
    if not pts:
        return 0, RectGraph()
    rx, ry, val, bp, fstar, f, fbp, service = _forest_tables(pts, rts)
    full = (1 << len(pts)) - 1
    if f[full] >= _INF:
        return None
    segs: list[Segment] = []

    def realize(mask: int) -> None:
        y = fbp[mask]
        if y == 0:
            local = GridPoint(rx[mask], ry[mask])
            anchor = service[local][0]
            _connector(anchor, local, segs)
            _realize_tree(rx, ry, bp, mask, segs)
        else:
            realize(y)
            realize(mask ^ y)

    realize(full)
    return f[full], RectGraph(tuple(segs))


def solve_rsfa_exact(inst: Instance) -> tuple[int, RectGraph]:
    """Optimal forest for an instance (origin present, hence always feasible)."""
    got = solve_rsfa_core(inst.points, inst.roots)
    assert got is not None  # the origin covers everything
    return got

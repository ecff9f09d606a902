"""Free space diagrams for pairs of polygonal curves.

For curves P (n segments, horizontal axis) and Q (m segments, vertical
axis) and a distance bound eps, the free space is the set of parameter
pairs (s, t) whose curve points are within eps of each other. Per grid
cell the free space is the intersection of an ellipse with the unit
square, hence convex; the diagram stitches the cells together and keeps,
for every connected component, the interval it projects onto on each
parameter axis.

Connectivity uses the closed-set convention: two adjacent cells sharing
only a single free boundary point belong to the same component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import resolve_tol
from .curves import EMPTY, Interval, PolyCurve


@dataclass(frozen=True)
class CellFreeSpace:
    """Free space of one segment pair, restricted to the unit square.

    Edge intervals are in local edge coordinates in [0, 1]:
    ``left``/``right`` along Q at the cell's left/right vertex of P,
    ``bottom``/``top`` along P at the bottom/top vertex of Q.
    ``s_projection``/``t_projection`` are the axis extents of the whole
    free region of the cell (not only of its edges).
    """

    i: int
    j: int
    left: Interval
    right: Interval
    bottom: Interval
    top: Interval
    interior_nonempty: bool
    s_projection: Interval
    t_projection: Interval


@dataclass(frozen=True)
class BoundaryTouch:
    left: bool
    right: bool
    bottom: bool
    top: bool

    @property
    def all_four(self) -> bool:
        return self.left and self.right and self.bottom and self.top


@dataclass(frozen=True)
class Component:
    """One connected region of free space.

    ``proj_p``/``proj_q`` are single intervals: the projection of a
    connected planar set onto an axis is connected.
    """

    id: int
    cells: frozenset
    proj_p: Interval
    proj_q: Interval
    touches: BoundaryTouch


@dataclass(frozen=True)
class FreeSpaceDiagram:
    epsilon: float
    n: int
    m: int
    cells: tuple  # n-tuple of m-tuples of CellFreeSpace, indexed [i][j]
    components: tuple  # tuple of Component, ids equal to positions
    z: int  # max number of components met by any axis-aligned line

    def cell(self, i: int, j: int) -> CellFreeSpace:
        return self.cells[i][j]

    def component_count(self) -> int:
        return len(self.components)


def _point_free_interval(p, a, b, eps: float, tol: float) -> Interval:
    """Parameters u in [0, 1] with ``|a + u*(b-a) - p| <= eps``.

    Solves the quadratic in u; a discriminant within ``-tol..0`` is
    clamped to zero so tangencies survive rounding.
    """
    d = b - a
    w = a - p
    qa = float(d @ d)
    qb = float(d @ w)
    qc = float(w @ w) - eps * eps
    disc = qb * qb - qa * qc
    if disc < 0.0:
        if disc < -tol:
            return EMPTY
        disc = 0.0
    root = math.sqrt(disc)
    lo = (-qb - root) / qa
    hi = (-qb + root) / qa
    if hi < 0.0 or lo > 1.0:
        return EMPTY
    return Interval(max(lo, 0.0), min(hi, 1.0))


_EDGES = ("left", "right", "bottom", "top")


def cell_edge_interval(seg_p, seg_q, eps: float, edge: str, tol: float | None = None) -> Interval:
    """Free interval on one edge of the cell of segment pair (seg_p, seg_q).

    ``left``/``right`` fix the P endpoint and vary along seg_q (interval in
    t); ``bottom``/``top`` fix the Q endpoint and vary along seg_p
    (interval in s). Returns EMPTY when no point of the edge is free.
    """
    tol = resolve_tol(tol)
    if eps < 0.0:
        raise ValueError("eps must be >= 0")
    pa, pb = (np.asarray(v, dtype=float) for v in seg_p)
    qa, qb = (np.asarray(v, dtype=float) for v in seg_q)
    if edge == "left":
        return _point_free_interval(pa, qa, qb, eps, tol)
    if edge == "right":
        return _point_free_interval(pb, qa, qb, eps, tol)
    if edge == "bottom":
        return _point_free_interval(qa, pa, pb, eps, tol)
    if edge == "top":
        return _point_free_interval(qb, pa, pb, eps, tol)
    raise ValueError(f"edge must be one of {_EDGES}, got {edge!r}")


def _linear_interval(alpha: float, beta: float, lo: float, hi: float) -> tuple[float, float]:
    """Solutions of ``lo <= alpha + beta*u <= hi`` as a raw (lo, hi) pair."""
    if beta == 0.0:
        return (-math.inf, math.inf) if lo <= alpha <= hi else (math.inf, -math.inf)
    u0 = (lo - alpha) / beta
    u1 = (hi - alpha) / beta
    return (u0, u1) if u0 <= u1 else (u1, u0)


def _capsule_slice(a, b, c0, c1, eps: float, tol: float) -> Interval:
    """Parameters u in [0, 1] where ``a + u*(b-a)`` is within eps of segment c0-c1.

    The moving point lies in the eps-capsule around the segment exactly
    when it is in one of the two endpoint disks or the perpendicular
    strip; the union of the three pieces is an interval because
    point-to-segment distance is convex along a line.
    """
    pieces = [
        _point_free_interval(c0, a, b, eps, tol),
        _point_free_interval(c1, a, b, eps, tol),
    ]

    d = b - a
    e = c1 - c0
    den = float(e @ e)
    w0 = a - c0
    foot_lo, foot_hi = _linear_interval(float(w0 @ e) / den, float(d @ e) / den, 0.0, 1.0)
    norm_e = math.sqrt(den)
    gamma = (e[0] * w0[1] - e[1] * w0[0]) / norm_e
    delta = (e[0] * d[1] - e[1] * d[0]) / norm_e
    perp_lo, perp_hi = _linear_interval(gamma, delta, -eps, eps)
    lo = max(foot_lo, perp_lo, 0.0)
    hi = min(foot_hi, perp_hi, 1.0)
    if lo <= hi:
        pieces.append(Interval(lo, hi))

    out = EMPTY
    for piece in pieces:
        out = out.hull(piece)
    return out


def cell_axis_projection(seg_p, seg_q, eps: float, axis: str = "p",
                         tol: float | None = None) -> Interval:
    """Projection of a cell's free space onto one axis, in local [0, 1].

    For axis "p" this is the set of s with dist(P(s), seg_q) <= eps; axis
    "q" swaps the roles.
    """
    tol = resolve_tol(tol)
    if eps < 0.0:
        raise ValueError("eps must be >= 0")
    pa, pb = (np.asarray(v, dtype=float) for v in seg_p)
    qa, qb = (np.asarray(v, dtype=float) for v in seg_q)
    if axis == "p":
        return _capsule_slice(pa, pb, qa, qb, eps, tol)
    if axis == "q":
        return _capsule_slice(qa, qb, pa, pb, eps, tol)
    raise ValueError(f'axis must be "p" or "q", got {axis!r}')


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def build_diagram(P: PolyCurve, Q: PolyCurve, eps: float,
                  tol: float | None = None) -> FreeSpaceDiagram:
    """Compute the full free space diagram of P and Q at distance eps.

    Cells are joined into components when their shared edge carries a
    nonempty free interval (a single shared tangency point suffices).
    Components that never reach a cell edge, an ellipse interior to one
    cell, become single-cell components.
    """
    tol = resolve_tol(tol)
    if eps < 0.0:
        raise ValueError("eps must be >= 0")
    n, m = P.n, Q.n
    pseg = [P.segment(i) for i in range(n)]
    qseg = [Q.segment(j) for j in range(m)]

    # vert[i][j]: free t-interval at P-vertex i along Q-segment j (shared
    # by the cells left and right of gridline i). horiz[i][j]: free
    # s-interval along P-segment i at Q-vertex j.
    vert = [[_point_free_interval(P.vertices[i], qseg[j][0], qseg[j][1], eps, tol)
             for j in range(m)] for i in range(n + 1)]
    horiz = [[_point_free_interval(Q.vertices[j], pseg[i][0], pseg[i][1], eps, tol)
              for j in range(m + 1)] for i in range(n)]

    cells = []
    for i in range(n):
        column = []
        for j in range(m):
            s_proj = _capsule_slice(pseg[i][0], pseg[i][1], qseg[j][0], qseg[j][1], eps, tol)
            t_proj = _capsule_slice(qseg[j][0], qseg[j][1], pseg[i][0], pseg[i][1], eps, tol)
            left, right = vert[i][j], vert[i + 1][j]
            bottom, top = horiz[i][j], horiz[i][j + 1]
            # defensive hulls: the projections must contain every free edge
            if not bottom.is_empty:
                s_proj = s_proj.hull(bottom)
            if not top.is_empty:
                s_proj = s_proj.hull(top)
            if not left.is_empty:
                s_proj = s_proj.hull(Interval(0.0, 0.0))
                t_proj = t_proj.hull(left)
            if not right.is_empty:
                s_proj = s_proj.hull(Interval(1.0, 1.0))
                t_proj = t_proj.hull(right)
            column.append(CellFreeSpace(
                i=i, j=j, left=left, right=right, bottom=bottom, top=top,
                interior_nonempty=not s_proj.is_empty,
                s_projection=s_proj, t_projection=t_proj,
            ))
        cells.append(tuple(column))

    uf = _UnionFind(n * m)
    occupied = [cells[i][j].interior_nonempty for i in range(n) for j in range(m)]
    for i in range(n):
        for j in range(m):
            if i + 1 < n and not vert[i + 1][j].is_empty:
                uf.union(i * m + j, (i + 1) * m + j)
            if j + 1 < m and not horiz[i][j + 1].is_empty:
                uf.union(i * m + j, i * m + j + 1)

    groups: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        for j in range(m):
            if occupied[i * m + j]:
                groups.setdefault(uf.find(i * m + j), []).append((i, j))

    components = []
    for root in sorted(groups):
        members = groups[root]
        proj_p = EMPTY
        proj_q = EMPTY
        for (i, j) in members:
            cell = cells[i][j]
            proj_p = proj_p.hull(cell.s_projection.shift(float(i)))
            proj_q = proj_q.hull(cell.t_projection.shift(float(j)))
        touches = BoundaryTouch(
            left=proj_p.lo <= tol,
            right=proj_p.hi >= n - tol,
            bottom=proj_q.lo <= tol,
            top=proj_q.hi >= m - tol,
        )
        components.append(Component(
            id=len(components),
            cells=frozenset(members),
            proj_p=proj_p,
            proj_q=proj_q,
            touches=touches,
        ))

    z = _stab_number(components, n, m, tol)
    return FreeSpaceDiagram(epsilon=eps, n=n, m=m, cells=tuple(cells),
                            components=tuple(components), z=z)


def _stab_number(components, n: int, m: int, tol: float) -> int:
    best = 0
    for axis_len, proj in ((float(n), lambda c: c.proj_p), (float(m), lambda c: c.proj_q)):
        positions = set()
        for c in components:
            iv = proj(c)
            for e in (iv.lo, iv.hi):
                for pos in (e - tol, e, e + tol):
                    if 0.0 <= pos <= axis_len:
                        positions.add(pos)
        for pos in positions:
            count = sum(1 for c in components if proj(c).lo <= pos <= proj(c).hi)
            best = max(best, count)
    return best


def compute_z(diagram: FreeSpaceDiagram, tol: float | None = None) -> int:
    """Maximum number of components hit by any horizontal or vertical line.

    Evaluated by stabbing the component projection intervals at their
    endpoints (and a tolerance to either side); the count only changes at
    endpoints, so this finds the maximum.
    """
    tol = resolve_tol(tol)
    return _stab_number(diagram.components, diagram.n, diagram.m, tol)

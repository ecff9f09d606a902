"""Greedy interval covers and the factor-2 approximation of the budget k.

Each axis is covered greedily on its own (which is optimal per axis);
the union of the two covers is at worst twice the size of an optimal
joint selection, since the optimum must cover each axis too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import resolve_tol
from .curves import Interval
from .decide import Selection
from .freespace import FreeSpaceDiagram


@dataclass(frozen=True)
class ProjectedInterval:
    """A component's projection onto one axis ("p" or "q")."""

    component_id: int
    axis: str
    interval: Interval


def axis_projections(diagram: FreeSpaceDiagram, axis: str) -> list[ProjectedInterval]:
    """Projection intervals of every component onto one axis, by id."""
    if axis == "p":
        return [ProjectedInterval(c.id, "p", c.proj_p) for c in diagram.components]
    if axis == "q":
        return [ProjectedInterval(c.id, "q", c.proj_q) for c in diagram.components]
    raise ValueError(f'axis must be "p" or "q", got {axis!r}')


def greedy_axis_cover(intervals: Sequence[ProjectedInterval], target: Interval,
                      tol: float | None = None) -> Selection | None:
    """Minimum-cardinality cover of ``target`` by the given intervals.

    Left-to-right sweep: among the intervals starting at or before the
    current frontier, take the one reaching farthest right (ties go to
    the smaller component id). Returns None when the frontier gets stuck
    before the target's right end.
    """
    tol = resolve_tol(tol)
    axes = {pi.axis for pi in intervals}
    if len(axes) > 1:
        raise ValueError(f"intervals span multiple axes: {sorted(axes)}")
    if target.is_empty:
        return Selection(())
    if target.length == 0.0:
        holders = sorted(pi.component_id for pi in intervals
                         if pi.interval.contains(target.lo))
        return Selection(holders[:1]) if holders else None
    pool = sorted(
        ((pi.interval.lo, pi.interval.hi, pi.component_id) for pi in intervals
         if not pi.interval.is_empty),
        key=lambda t: (t[0], t[2]),
    )
    chosen: list[int] = []
    frontier = target.lo
    idx = 0
    best_hi = -float("inf")
    best_id = -1
    while frontier < target.hi - tol:
        while idx < len(pool) and pool[idx][0] <= frontier + tol:
            lo, hi, cid = pool[idx]
            if hi > best_hi or (hi == best_hi and cid < best_id):
                best_hi, best_id = hi, cid
            idx += 1
        if best_id < 0 or best_hi <= frontier + tol:
            return None
        chosen.append(best_id)
        frontier = best_hi
    return Selection(chosen)


def approximate_k(diagram: FreeSpaceDiagram, tol: float | None = None) -> Selection | None:
    """Covering selection at most twice the optimal size, or None.

    None exactly when one axis cannot be covered at all, i.e. the
    Hausdorff test fails. Components picked on both axes count once.
    """
    tol = resolve_tol(tol)
    cover_p = greedy_axis_cover(axis_projections(diagram, "p"),
                                Interval(0.0, float(diagram.n)), tol)
    if cover_p is None:
        return None
    cover_q = greedy_axis_cover(axis_projections(diagram, "q"),
                                Interval(0.0, float(diagram.m)), tol)
    if cover_q is None:
        return None
    return Selection((*cover_p, *cover_q))

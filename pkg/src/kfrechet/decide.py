"""Decision procedures over a built free space diagram.

The central question: can at most k connected components of the free
space jointly project onto the whole of both parameter axes? Besides the
two exact deciders (subset brute force and a bounded-search-tree method)
this module derives the classic decisions, Hausdorff / weak / strong
matching, from the same diagram.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .config import resolve_tol
from .curves import Interval, interval_union_covers
from .freespace import FreeSpaceDiagram


class Selection:
    """Sorted, duplicate-free set of component ids."""

    __slots__ = ("ids",)

    def __init__(self, ids: Iterable[int]):
        self.ids = tuple(sorted({int(i) for i in ids}))

    def __len__(self) -> int:
        return len(self.ids)

    def __iter__(self):
        return iter(self.ids)

    def __contains__(self, item) -> bool:
        return item in self.ids

    def __eq__(self, other) -> bool:
        return isinstance(other, Selection) and self.ids == other.ids

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self) -> str:
        return f"Selection({list(self.ids)!r})"


@dataclass(frozen=True)
class SearchTreeNode:
    """Documents the bounded-search-tree contract.

    A node stands for a component whose projection interval contains the
    parent's frontier (the right end of the prefix covered so far); the
    root (depth 0) is the axis' left boundary. The search below is run as
    a depth-first path enumeration and never materialises these nodes.
    """

    component_id: int
    depth: int
    frontier: float
    children: tuple = ()


@dataclass(frozen=True)
class Preprocessed:
    """Result of :func:`preprocess`.

    ``necessary``: components that are the sole coverer of some open
    sub-interval of an axis; every covering selection contains them.
    ``kept``: ids that survive redundancy pruning. ``dropped``: ids whose
    projection bounding box fits inside another component's box.
    """

    necessary: Selection
    kept: tuple
    dropped: tuple


def _check_ids(diagram: FreeSpaceDiagram, selection: Selection) -> None:
    count = len(diagram.components)
    for cid in selection:
        if not 0 <= cid < count:
            raise KeyError(f"unknown component id {cid}")


def covers_both(diagram: FreeSpaceDiagram, selection: Selection,
                tol: float | None = None) -> bool:
    """Whether the selected components project onto all of both axes."""
    tol = resolve_tol(tol)
    _check_ids(diagram, selection)
    comps = [diagram.components[cid] for cid in selection]
    return (
        interval_union_covers([c.proj_p for c in comps], Interval(0.0, float(diagram.n)), tol)
        and interval_union_covers([c.proj_q for c in comps], Interval(0.0, float(diagram.m)), tol)
    )


def _sole_coverers(components, axis_len: float, proj, tol: float) -> set:
    """Ids covering some open sub-interval of the axis on their own."""
    events = [0.0, axis_len]
    for c in components:
        iv = proj(c)
        events.append(min(max(iv.lo, 0.0), axis_len))
        events.append(min(max(iv.hi, 0.0), axis_len))
    events.sort()
    marks = [events[0]]
    for e in events[1:]:
        if e - marks[-1] > tol:
            marks.append(e)
    found = set()
    for a, b in zip(marks, marks[1:]):
        mid = 0.5 * (a + b)
        covering = [c.id for c in components if proj(c).lo <= mid <= proj(c).hi]
        if len(covering) == 1:
            found.add(covering[0])
    return found


def preprocess(diagram: FreeSpaceDiagram, tol: float | None = None) -> Preprocessed:
    """Identify necessary components and prune redundant ones.

    A component is redundant when its proj_p x proj_q bounding box is
    contained in a single other component's box (ties on identical boxes
    keep the smaller id, so mutually-contained components are never both
    dropped). Necessary and redundant sets are disjoint.
    """
    tol = resolve_tol(tol)
    comps = diagram.components
    necessary = _sole_coverers(comps, float(diagram.n), lambda c: c.proj_p, tol)
    necessary |= _sole_coverers(comps, float(diagram.m), lambda c: c.proj_q, tol)

    dropped = []
    for b in comps:
        for a in comps:
            if a.id == b.id:
                continue
            if a.proj_p.contains_interval(b.proj_p) and a.proj_q.contains_interval(b.proj_q):
                same_box = a.proj_p == b.proj_p and a.proj_q == b.proj_q
                if same_box and a.id > b.id:
                    continue
                dropped.append(b.id)
                break
    kept = tuple(c.id for c in comps if c.id not in set(dropped))
    return Preprocessed(necessary=Selection(necessary), kept=kept, dropped=tuple(dropped))


def decide_bruteforce(diagram: FreeSpaceDiagram, k: int, use_preprocess: bool = True,
                      tol: float | None = None) -> Selection | None:
    """Search all selections of size <= k for one covering both axes.

    The necessary components are seeded into every candidate and the
    remaining slots run through the non-redundant ids in lexicographic
    order; the first covering selection is returned.
    """
    tol = resolve_tol(tol)
    if k < 0:
        raise ValueError("k must be >= 0")
    comps = diagram.components
    if not covers_both(diagram, Selection(c.id for c in comps), tol):
        return None
    if use_preprocess:
        pre = preprocess(diagram, tol)
        base = pre.necessary
        pool = [cid for cid in pre.kept if cid not in base]
    else:
        base = Selection(())
        pool = [c.id for c in comps]
    if len(base) > k:
        return None
    for extra_count in range(k - len(base) + 1):
        for extra in itertools.combinations(pool, extra_count):
            candidate = Selection((*base, *extra))
            if covers_both(diagram, candidate, tol):
                return candidate
    return None


def _axis_intervals(diagram: FreeSpaceDiagram, axis: str):
    if axis == "p":
        return [(c.id, c.proj_p.lo, c.proj_p.hi) for c in diagram.components]
    if axis == "q":
        return [(c.id, c.proj_q.lo, c.proj_q.hi) for c in diagram.components]
    raise ValueError(f'axis must be "p" or "q", got {axis!r}')


def fpt_feasible_selections(diagram: FreeSpaceDiagram, axis: str, k: int,
                            tol: float | None = None) -> tuple[list, int]:
    """All axis-covering selections found by a depth-bounded sweep search.

    The root sits at the axis' left boundary; children of a node are the
    components whose interval contains the node's frontier and extends it
    (strictly, beyond tolerance). A path ends as soon as its component
    reaches the right boundary. Returns the duplicate-free sorted list of
    selections (as sorted id tuples) plus the raw feasible-path count.
    """
    tol = resolve_tol(tol)
    if k < 0:
        raise ValueError("k must be >= 0")
    axis_len = float(diagram.n if axis == "p" else diagram.m)
    intervals = _axis_intervals(diagram, axis)
    found: set = set()
    paths = 0

    def extend(frontier: float, path: tuple, depth: int) -> None:
        nonlocal paths
        if depth == k:
            return
        for cid, lo, hi in intervals:
            if lo <= frontier + tol and hi > frontier + tol:
                if hi >= axis_len - tol:
                    paths += 1
                    found.add(tuple(sorted((*path, cid))))
                else:
                    extend(hi, (*path, cid), depth + 1)

    extend(0.0, (), 0)
    return sorted(found), paths


def decide_fpt(diagram: FreeSpaceDiagram, k: int, tol: float | None = None) -> Selection | None:
    """Bounded-search-tree decision for budget k.

    Feasible per-axis selections are enumerated independently, then every
    pair is combined; a pair whose union stays within k components is a
    positive answer. The lexicographically smallest union is returned so
    results are deterministic.
    """
    tol = resolve_tol(tol)
    sels_p, _ = fpt_feasible_selections(diagram, "p", k, tol)
    if not sels_p:
        return None
    sels_q, _ = fpt_feasible_selections(diagram, "q", k, tol)
    if not sels_q:
        return None
    best = None
    for sp in sels_p:
        set_p = set(sp)
        for sq in sels_q:
            union = set_p.union(sq)
            if len(union) <= k:
                candidate = tuple(sorted(union))
                if best is None or candidate < best:
                    best = candidate
    return None if best is None else Selection(best)


def decide_weak_frechet(diagram: FreeSpaceDiagram, tol: float | None = None) -> bool:
    """True when a single component projects onto the whole of both axes.

    Equivalently: some component touches all four diagram boundaries.
    """
    tol = resolve_tol(tol)
    n, m = float(diagram.n), float(diagram.m)
    return any(
        c.proj_p.lo <= tol and c.proj_p.hi >= n - tol
        and c.proj_q.lo <= tol and c.proj_q.hi >= m - tol
        for c in diagram.components
    )


def decide_hausdorff(diagram: FreeSpaceDiagram, tol: float | None = None) -> bool:
    """True when the union of all components covers both axes."""
    tol = resolve_tol(tol)
    comps = diagram.components
    return (
        interval_union_covers([c.proj_p for c in comps], Interval(0.0, float(diagram.n)), tol)
        and interval_union_covers([c.proj_q for c in comps], Interval(0.0, float(diagram.m)), tol)
    )


def decide_strong_frechet(diagram: FreeSpaceDiagram, tol: float | None = None) -> bool:
    """Monotone reachability from the bottom-left to the top-right corner.

    Classic dynamic program over cell boundary intervals: within one cell
    the free space is convex, so from an entry point every exit point
    above/right of it is reachable by a monotone segment.
    """
    tol = resolve_tol(tol)
    n, m = diagram.n, diagram.m
    cells = diagram.cells
    empty = (1.0, -1.0)

    def clip_from(iv: Interval, lo: float):
        if iv.is_empty or iv.hi < lo:
            return empty
        return (max(iv.lo, lo), iv.hi)

    # reach_left[j] for the current column i: reachable part of the left
    # edge of cell (i, j); reach_bottom[i][j] handled column by column.
    reach_left = [empty] * m
    first = cells[0][0].left
    if not first.is_empty and first.lo <= tol:
        reach_left[0] = (first.lo, first.hi)
        for j in range(1, m):
            below = reach_left[j - 1]
            edge = cells[0][j].left
            if below[0] <= below[1] and below[1] >= 1.0 - tol and not edge.is_empty and edge.lo <= tol:
                reach_left[j] = (edge.lo, edge.hi)
            else:
                break

    reach_bottom = [empty] * n
    first = cells[0][0].bottom
    if not first.is_empty and first.lo <= tol:
        reach_bottom[0] = (first.lo, first.hi)
        for i in range(1, n):
            left_of = reach_bottom[i - 1]
            edge = cells[i][0].bottom
            if left_of[0] <= left_of[1] and left_of[1] >= 1.0 - tol and not edge.is_empty and edge.lo <= tol:
                reach_bottom[i] = (edge.lo, edge.hi)
            else:
                break

    for i in range(n):
        next_left = [empty] * m
        bottom_in = reach_bottom[i]
        for j in range(m):
            left_in = reach_left[j]
            cell = cells[i][j]
            has_left = left_in[0] <= left_in[1]
            has_bottom = bottom_in[0] <= bottom_in[1]
            if has_bottom:
                out_right = clip_from(cell.right, 0.0)
            elif has_left:
                out_right = clip_from(cell.right, left_in[0])
            else:
                out_right = empty
            if has_left:
                out_top = clip_from(cell.top, 0.0)
            elif has_bottom:
                out_top = clip_from(cell.top, bottom_in[0])
            else:
                out_top = empty
            next_left[j] = out_right
            bottom_in = out_top
        if i == n - 1 and bottom_in[0] <= bottom_in[1] and bottom_in[1] >= 1.0 - tol:
            # top-right corner reached through the top edge of the last cell
            return True
        reach_left = next_left
    top_right = reach_left[m - 1]
    return top_right[0] <= top_right[1] and top_right[1] >= 1.0 - tol

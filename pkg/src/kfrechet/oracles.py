"""Brute-force and sampling oracles.

Slow, independent reference implementations used to validate the
geometric code paths: a pixel-grid free space, an exhaustive minimum
interval cover, and a sampled Hausdorff distance. They ship with the
library so the validation experiments are reproducible, but nothing in
the production modules depends on them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy import ndimage
from scipy.spatial.distance import cdist

from .curves import Interval, PolyCurve


@dataclass(frozen=True)
class PixelComponent:
    label: int
    s_min: float
    s_max: float
    t_min: float
    t_max: float


@dataclass(frozen=True)
class PixelFreeSpace:
    """Sampled free-space predicate on a res x res parameter grid.

    ``mask[i, j]`` is True when the curve points at (s_values[i],
    t_values[j]) are within eps. Components are 4-connected pixel groups.
    """

    eps: float
    res: int
    s_values: np.ndarray
    t_values: np.ndarray
    mask: np.ndarray
    labels: np.ndarray
    components: tuple

    @property
    def component_count(self) -> int:
        return len(self.components)

    def covers_p(self) -> bool:
        return bool(self.mask.any(axis=1).all())

    def covers_q(self) -> bool:
        return bool(self.mask.any(axis=0).all())

    def covers_both(self) -> bool:
        return self.covers_p() and self.covers_q()

    def weak_ok(self) -> bool:
        """Some single pixel component spans the full s and t index range."""
        res = self.res
        for comp in self.components:
            rows = np.flatnonzero((self.labels == comp.label).any(axis=1))
            cols = np.flatnonzero((self.labels == comp.label).any(axis=0))
            if len(rows) and rows[0] == 0 and rows[-1] == res - 1 \
                    and len(cols) and cols[0] == 0 and cols[-1] == res - 1:
                return True
        return False


_FOUR_CONNECTED = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]])


def pixel_freespace(P: PolyCurve, Q: PolyCurve, eps: float, res: int = 256) -> PixelFreeSpace:
    """Rasterised free space of P and Q at eps.

    Only trustworthy when eps sits at least :func:`pixel_margin` away
    from critical values: free regions thinner than a pixel (tangencies)
    fall apart under 4-connected labelling.
    """
    if res < 16:
        raise ValueError("res must be >= 16")
    if eps < 0.0:
        raise ValueError("eps must be >= 0")
    s = np.linspace(0.0, P.n, res)
    t = np.linspace(0.0, Q.n, res)
    mask = cdist(P.points_at(s), Q.points_at(t)) <= eps
    labels, count = ndimage.label(mask, structure=_FOUR_CONNECTED)
    components = []
    for lab in range(1, count + 1):
        rows, cols = np.nonzero(labels == lab)
        components.append(PixelComponent(
            label=lab,
            s_min=float(s[rows.min()]), s_max=float(s[rows.max()]),
            t_min=float(t[cols.min()]), t_max=float(t[cols.max()]),
        ))
    return PixelFreeSpace(eps=eps, res=res, s_values=s, t_values=t,
                          mask=mask, labels=labels, components=tuple(components))


def pixel_margin(P: PolyCurve, Q: PolyCurve, res: int) -> float:
    """Eps separation from critical values needed to trust the raster.

    Ten grid steps' worth of distance-field variation: the free/blocked
    status of a whole region cannot flip inside that band without the
    raster noticing.
    """
    lip_p = P.max_segment_length() * P.n
    lip_q = Q.max_segment_length() * Q.n
    return 10.0 * max(lip_p, lip_q) / res


def exhaustive_min_cover(intervals, target, gap_tol: float = 0.0):
    """Minimum number of the given intervals needed to cover ``target``.

    Checks all subsets by increasing size, with its own sweep (kept
    independent of the production interval code on purpose). Accepts
    Interval objects or (lo, hi) pairs; returns None when even the full
    set leaves a gap wider than ``gap_tol``.
    """
    spans = []
    for iv in intervals:
        lo, hi = (iv.lo, iv.hi) if isinstance(iv, Interval) else (float(iv[0]), float(iv[1]))
        if lo <= hi:
            spans.append((lo, hi))
    if len(spans) > 20:
        raise ValueError(f"too many intervals for exhaustive search: {len(spans)} > 20")
    tlo, thi = (target.lo, target.hi) if isinstance(target, Interval) else (float(target[0]), float(target[1]))

    def covered(chosen) -> bool:
        if thi == tlo:
            return any(lo <= tlo <= hi for lo, hi in chosen)
        reach = tlo
        for lo, hi in sorted(chosen):
            if lo > reach + gap_tol:
                return False
            reach = max(reach, hi)
            if reach >= thi - gap_tol:
                return True
        return reach >= thi - gap_tol

    for size in range(len(spans) + 1):
        for combo in itertools.combinations(spans, size):
            if covered(combo):
                return size
    return None


def _points_to_curve_distance(points: np.ndarray, curve: PolyCurve) -> np.ndarray:
    """Exact distance from each sample point to the whole polygonal curve."""
    best = np.full(len(points), np.inf)
    for i in range(curve.n):
        a, b = curve.segment(i)
        d = b - a
        den = float(d @ d)
        u = np.clip(((points - a) @ d) / den, 0.0, 1.0)
        feet = a + u[:, None] * d
        best = np.minimum(best, np.linalg.norm(points - feet, axis=1))
    return best


def sampled_hausdorff(P: PolyCurve, Q: PolyCurve, samples: int = 1000) -> float:
    """Symmetric Hausdorff distance from uniform parameter samples.

    The outer max runs over sampled points, the inner min is the exact
    point-to-segment distance, so the result underestimates the true
    value by at most :func:`sampled_hausdorff_bound`.
    """
    if samples < 100:
        raise ValueError("samples must be >= 100")
    pts_p = P.points_at(np.linspace(0.0, P.n, samples))
    pts_q = Q.points_at(np.linspace(0.0, Q.n, samples))
    d_pq = _points_to_curve_distance(pts_p, Q).max()
    d_qp = _points_to_curve_distance(pts_q, P).max()
    return float(max(d_pq, d_qp))


def sampled_hausdorff_bound(P: PolyCurve, Q: PolyCurve, samples: int) -> float:
    """Worst-case sampling error of :func:`sampled_hausdorff`.

    Between two adjacent samples the distance-to-other-curve function
    moves by at most the segment length times the parameter step, and the
    true maximum sits at most half a step from a sample.
    """
    step_p = P.n / (samples - 1)
    step_q = Q.n / (samples - 1)
    return max(P.max_segment_length() * step_p, Q.max_segment_length() * step_q) / 2.0

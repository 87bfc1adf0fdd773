"""Polylines for the curves Re f(z) = 0 and Im f(z) = 0 over a rectangle.

Marching squares on a sampled grid: each cell's corner signs select which of
its edges the curve crosses, crossing points are linearly interpolated
along the edges, and the per-cell segments are chained into polylines
through their shared edges.  Roots of ``f`` show up as crossings of an RE
polyline with an IM polyline.
"""

from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .polynomial import as_poly, evaluate

__all__ = ["Polyline", "CurveSet", "trace", "curve_intersections", "MAX_RESOLUTION"]

MIN_RESOLUTION = 16
MAX_RESOLUTION = 8192

# cell edges: 0 bottom, 1 right, 2 top, 3 left
# corner bits: 1 bottom-left, 2 bottom-right, 4 top-right, 8 top-left
_CASES = {
    1: [(3, 0)], 14: [(3, 0)],
    2: [(0, 1)], 13: [(0, 1)],
    3: [(3, 1)], 12: [(3, 1)],
    4: [(1, 2)], 11: [(1, 2)],
    6: [(0, 2)], 9: [(0, 2)],
    7: [(3, 2)], 8: [(3, 2)],
}
# saddles, keyed by (case, center is positive)
_SADDLES = {
    (5, True): [(0, 1), (3, 2)],
    (5, False): [(3, 0), (1, 2)],
    (10, True): [(3, 0), (1, 2)],
    (10, False): [(0, 1), (3, 2)],
}


@dataclass(frozen=True)
class Polyline:
    kind: str  # "RE" or "IM"
    points: np.ndarray  # shape (m, 2)


@dataclass(frozen=True)
class CurveSet:
    curves: list[Polyline]
    bbox: tuple[float, float, float, float]
    resolution: int

    def of_kind(self, kind: str) -> list[Polyline]:
        return [c for c in self.curves if c.kind == kind]

    @property
    def cell_size(self) -> tuple[float, float]:
        x0, x1, y0, y1 = self.bbox
        return (x1 - x0) / self.resolution, (y1 - y0) / self.resolution

    def to_dict(self) -> dict:
        return {
            "bbox": list(self.bbox),
            "resolution": self.resolution,
            "curves": [
                {"kind": c.kind, "id": i, "points": c.points.tolist()}
                for i, c in enumerate(self.curves)
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "polyline_id", "x", "y"])
        for i, c in enumerate(self.curves):
            for x, y in c.points.tolist():
                w.writerow([c.kind, i, repr(x), repr(y)])
        return buf.getvalue()


def _edge_ids(res: int, i: np.ndarray, j: np.ndarray, edge: int) -> np.ndarray:
    """Integer id of a cell edge; horizontal edges first, then vertical."""
    n_h = (res + 1) * res
    if edge == 0:
        return i * res + j
    if edge == 2:
        return (i + 1) * res + j
    if edge == 3:
        return n_h + i * (res + 1) + j
    return n_h + i * (res + 1) + j + 1


def _edge_point(eid: int, res: int, xs, ys, V) -> tuple[float, float]:
    n_h = (res + 1) * res
    if eid < n_h:
        i, j = divmod(eid, res)
        v0, v1 = V[i, j], V[i, j + 1]
        t = v0 / (v0 - v1)
        return xs[j] + t * (xs[j + 1] - xs[j]), ys[i]
    i, j = divmod(eid - n_h, res + 1)
    v0, v1 = V[i, j], V[i + 1, j]
    t = v0 / (v0 - v1)
    return xs[j], ys[i] + t * (ys[i + 1] - ys[i])


def _segments(V: np.ndarray, center_sign) -> np.ndarray:
    """Edge-id pairs for every curve segment on the grid ``V`` (rows = y)."""
    res = V.shape[0] - 1
    pos = V > 0
    case = (
        pos[:-1, :-1] * 1 + pos[:-1, 1:] * 2 + pos[1:, 1:] * 4 + pos[1:, :-1] * 8
    ).astype(np.int8)
    out = []
    for c, pairs in _CASES.items():
        i, j = np.nonzero(case == c)
        for e0, e1 in pairs:
            out.append(np.stack([_edge_ids(res, i, j, e0), _edge_ids(res, i, j, e1)], 1))
    for c in (5, 10):
        i, j = np.nonzero(case == c)
        if i.size == 0:
            continue
        up = center_sign(i, j)
        for flag in (True, False):
            sel = up == flag
            for e0, e1 in _SADDLES[(c, flag)]:
                out.append(
                    np.stack(
                        [_edge_ids(res, i[sel], j[sel], e0), _edge_ids(res, i[sel], j[sel], e1)], 1
                    )
                )
    if not out:
        return np.zeros((0, 2), dtype=np.int64)
    return np.concatenate(out).astype(np.int64)


def _chain(segs: np.ndarray) -> list[list[int]]:
    """Join segments sharing an edge into edge-id chains (open ones first)."""
    touching = defaultdict(list)
    for k, (a, b) in enumerate(segs.tolist()):
        touching[a].append(k)
        touching[b].append(k)
    used = np.zeros(len(segs), bool)
    chains = []

    def walk(start_edge: int, k: int) -> list[int]:
        path = [start_edge]
        edge = start_edge
        while True:
            used[k] = True
            a, b = segs[k]
            edge = int(b if a == edge else a)
            path.append(edge)
            nxt = [m for m in touching[edge] if not used[m]]
            if not nxt:
                return path
            k = nxt[0]

    ends = sorted(e for e, ks in touching.items() if len(ks) == 1)
    for e in ends:
        k = touching[e][0]
        if not used[k]:
            chains.append(walk(e, k))
    for k in range(len(segs)):
        if not used[k]:
            chains.append(walk(int(segs[k][0]), k))
    return chains


def trace(f, bbox, resolution: int) -> CurveSet:
    """Trace Re f = 0 and Im f = 0 on ``bbox = (x_min, x_max, y_min, y_max)``.

    ``resolution`` is the number of grid cells per axis.  Saddle cells are
    resolved by the sign of ``f`` sampled at the cell center.
    """
    c = as_poly(f)
    resolution = int(resolution)
    if resolution < MIN_RESOLUTION:
        raise ValueError(f"resolution must be at least {MIN_RESOLUTION}")
    if resolution > MAX_RESOLUTION:
        raise ValueError(f"resolution above {MAX_RESOLUTION} per axis")
    x0, x1, y0, y1 = (float(v) for v in bbox)
    if not (x0 < x1 and y0 < y1) or not all(map(math.isfinite, (x0, x1, y0, y1))):
        raise ValueError(f"degenerate bounding box {bbox}")
    xs = np.linspace(x0, x1, resolution + 1)
    ys = np.linspace(y0, y1, resolution + 1)
    Z = evaluate(c, xs[None, :] + 1j * ys[:, None])
    if not np.iscomplexobj(Z):
        Z = Z.astype(complex)

    curves = []
    for kind, V, part in (("RE", Z.real, np.real), ("IM", Z.imag, np.imag)):
        V = np.ascontiguousarray(V)

        def center_sign(i, j, part=part):
            zc = 0.5 * (xs[j] + xs[j + 1]) + 0.5j * (ys[i] + ys[i + 1])
            return part(evaluate(c, zc)) > 0

        segs = _segments(V, center_sign)
        cache: dict[int, tuple[float, float]] = {}
        for chain in _chain(segs):
            pts = []
            for e in chain:
                if e not in cache:
                    cache[e] = _edge_point(e, resolution, xs, ys, V)
                pts.append(cache[e])
            if len(pts) >= 2:
                curves.append(Polyline(kind, np.array(pts, dtype=float)))
    return CurveSet(curves, (x0, x1, y0, y1), resolution)


def _cells(cs: CurveSet, p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Grid cell (row, col) holding each segment, from its midpoint."""
    x0, _, y0, _ = cs.bbox
    dx, dy = cs.cell_size
    mid = 0.5 * (p + q)
    j = np.clip(np.floor((mid[:, 0] - x0) / dx), 0, cs.resolution - 1).astype(np.int64)
    i = np.clip(np.floor((mid[:, 1] - y0) / dy), 0, cs.resolution - 1).astype(np.int64)
    return np.stack([i, j], 1)


def _segment_arrays(lines: list[Polyline]) -> tuple[np.ndarray, np.ndarray]:
    if not lines:
        return np.zeros((0, 2)), np.zeros((0, 2))
    p = np.concatenate([l.points[:-1] for l in lines])
    q = np.concatenate([l.points[1:] for l in lines])
    return p, q


def curve_intersections(cs: CurveSet, tol: float) -> list[tuple[float, float]]:
    """Crossings of RE segments with IM segments, merged when closer than ``tol``.

    Segments never leave their grid cell, so only RE/IM pairs in the same or
    adjacent cells are tested.
    """
    rp, rq = _segment_arrays(cs.of_kind("RE"))
    ip, iq = _segment_arrays(cs.of_kind("IM"))
    if len(rp) == 0 or len(ip) == 0:
        return []
    buckets = defaultdict(list)
    for k, (i, j) in enumerate(_cells(cs, ip, iq).tolist()):
        buckets[(i, j)].append(k)
    hits = []
    for k, (i, j) in enumerate(_cells(cs, rp, rq).tolist()):
        near = [m for di in (-1, 0, 1) for dj in (-1, 0, 1) for m in buckets.get((i + di, j + dj), ())]
        if not near:
            continue
        a, b = rp[k], rq[k]
        c, d = ip[near], iq[near]
        r = b - a
        s = d - c
        den = r[0] * s[:, 1] - r[1] * s[:, 0]
        ok = den != 0
        w = c - a
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (w[:, 0] * s[:, 1] - w[:, 1] * s[:, 0]) / den
            u = (w[:, 0] * r[1] - w[:, 1] * r[0]) / den
        eps = 1e-12
        sel = ok & (t >= -eps) & (t <= 1 + eps) & (u >= -eps) & (u <= 1 + eps)
        for tt in t[sel]:
            hits.append(a + tt * r)
    out: list[tuple[float, float]] = []
    for h in hits:
        if all(math.hypot(h[0] - x, h[1] - y) > tol for x, y in out):
            out.append((float(h[0]), float(h[1])))
    return out

"""SVG export of scenes: boundary curves, tangency data, tinted slabs."""

from __future__ import annotations

from fractions import Fraction

from .bivar import bp_eval

SLAB_COLORS = ["#cfe8ff", "#ffe2c9", "#d9f2d0", "#f2d0e8", "#fff3b8",
               "#d0f0f2", "#e3d5ff", "#ffd6d6", "#e0e0c8", "#c8e0dc"]


def _marching_segments(F, bbox, n=160):
    """Zero-set line segments of F on an n x n grid (floats; drawing only)."""
    x0, x1, y0, y1 = (float(v) for v in bbox)
    dx, dy = (x1 - x0) / n, (y1 - y0) / n
    vals = [[float(bp_eval(F, Fraction(x0 + i * dx).limit_denominator(10**6),
                           Fraction(y0 + j * dy).limit_denominator(10**6)))
             for j in range(n + 1)] for i in range(n + 1)]
    segs = []

    def interp(xa, ya, va, xb, yb, vb):
        t = va / (va - vb)
        return (xa + t * (xb - xa), ya + t * (yb - ya))

    for i in range(n):
        for j in range(n):
            corners = [
                (x0 + i * dx, y0 + j * dy, vals[i][j]),
                (x0 + (i + 1) * dx, y0 + j * dy, vals[i + 1][j]),
                (x0 + (i + 1) * dx, y0 + (j + 1) * dy, vals[i + 1][j + 1]),
                (x0 + i * dx, y0 + (j + 1) * dy, vals[i][j + 1]),
            ]
            pts = []
            for k in range(4):
                xa, ya, va = corners[k]
                xb, yb, vb = corners[(k + 1) % 4]
                if (va < 0 and vb >= 0) or (va >= 0 and vb < 0):
                    pts.append(interp(xa, ya, va, xb, yb, vb))
            if len(pts) >= 2:
                segs.append((pts[0], pts[1]))
            if len(pts) == 4:
                segs.append((pts[2], pts[3]))
    return segs


class _Canvas:
    def __init__(self, bbox, size=640):
        x0, x1, y0, y1 = (float(v) for v in bbox)
        self.x0, self.y1 = x0, y1
        self.scale = size / max(x1 - x0, y1 - y0)
        self.w = (x1 - x0) * self.scale
        self.h = (y1 - y0) * self.scale
        self.items = []

    def pt(self, x, y):
        return ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)

    def line(self, a, b, stroke, width=1.0, dash=None):
        (xa, ya), (xb, yb) = self.pt(*a), self.pt(*b)
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.items.append(
            f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" '
            f'stroke="{stroke}" stroke-width="{width}"{d}/>')

    def circle(self, c, r, fill):
        x, y = self.pt(*c)
        self.items.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r}" fill="{fill}"/>')

    def polygon(self, pts, fill, opacity=0.5):
        s = " ".join(f"{x:.2f},{y:.2f}" for x, y in (self.pt(*p) for p in pts))
        self.items.append(f'<polygon points="{s}" fill="{fill}" opacity="{opacity}" stroke="none"/>')

    def text(self, p, s, size=11):
        x, y = self.pt(*p)
        self.items.append(f'<text x="{x + 4:.2f}" y="{y - 4:.2f}" font-size="{size}">{s}</text>')

    def to_svg(self):
        body = "\n".join(self.items)
        return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.w:.0f}" '
                f'height="{self.h:.0f}" viewBox="0 0 {self.w:.2f} {self.h:.2f}">\n'
                f'<rect width="100%" height="100%" fill="white"/>\n{body}\n</svg>\n')


def scene_svg(scene, graph=None) -> str:
    canvas = _Canvas(scene.bbox)
    # slabs first (underneath): approximate by the stored edge samples
    if graph is not None:
        vertex_points = {v.id: v.event.point for v in graph.vertices}
        for k, e in enumerate(graph.edges):
            color = SLAB_COLORS[k % len(SLAB_COLORS)]
            band = []
            for chart, param, s_en, s_ex in sorted(e.samples):
                line = _float_line(scene, chart, graph.seam_rotation, param)
                band.append((param, (_along(line, s_en), _along(line, s_ex))))
            band.sort(key=lambda t: t[0])
            band = [pair for _, pair in band]
            # the slab pinches onto the endpoint event trajectories
            left = [a for a in e.attachments if not a[2]]
            right = [a for a in e.attachments if a[2]]
            if left:
                p = vertex_points[left[0][0]]
                band.insert(0, (p, p))
            if right:
                p = vertex_points[right[0][0]]
                band.append((p, p))
            if len(band) == 1:
                a, b = band[0]
                canvas.line(a, b, color, width=6.0)
            elif band:
                poly = [p for p, _ in band] + [p for _, p in reversed(band)]
                canvas.polygon(poly, color)
    for comp in scene.components:
        for a, b in _marching_segments(comp.implicit, scene.bbox):
            canvas.line(a, b, "#222222", width=1.4)
    if graph is not None:
        for v in graph.vertices:
            line = _float_line(scene, v.event.chart, graph.seam_rotation,
                               v.event.parameter)
            a, b = _clip_line(line, scene.bbox)
            canvas.line(a, b, "#d03030", width=1.0, dash="5,4")
            canvas.circle(v.event.point, 4.0, "#d03030")
            canvas.text(v.event.point, f'{v.id} ({"".join(map(str, v.pattern))})')
    return canvas.to_svg()


def _float_line(scene, chart, q, param):
    if scene.field.kind == "constant":
        dx, dy = (float(v) for v in scene.field.direction)
        return ((param * dy, -param * dx), (dx, dy))
    a, b = 1 - float(q) ** 2, 2 * float(q)
    sgn = 1 if chart == 0 else -1
    d0 = (1 - param * param, 2 * param)
    d = ((a * d0[0] - b * d0[1]) * sgn, (b * d0[0] + a * d0[1]) * sgn)
    return ((float(scene.field.center[0]), float(scene.field.center[1])), d)


def _along(line, s):
    (bx, by), (dx, dy) = line
    return (bx + s * dx, by + s * dy)


def _clip_line(line, bbox):
    x0, x1, y0, y1 = (float(v) for v in bbox)
    (bx, by), (dx, dy) = line
    lo, hi = -1e9, 1e9
    for (d, b, lo_b, hi_b) in ((dx, bx, x0, x1), (dy, by, y0, y1)):
        if abs(d) < 1e-15:
            continue
        t_a, t_b = (lo_b - b) / d, (hi_b - b) / d
        lo = max(lo, min(t_a, t_b))
        hi = min(hi, max(t_a, t_b))
    return _along(line, lo), _along(line, hi)
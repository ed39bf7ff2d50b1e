"""SVG drawing of the two-parabola construction.

Element classes are the contract tests rely on:

- ``circle.point.L`` / ``circle.point.T`` plus one of ``extreme``,
  ``boundary``, ``interior``
- ``line.tangent`` (one per value), ``polygon.hull``
- ``polyline.parabola.outer`` / ``polyline.parabola.inner``
- ``polygon.triangle`` for every pair with a_i < a_j < a_i + eps
"""
from __future__ import annotations

import xml.etree.ElementTree as ET

from .geom import PointClass
from .hull import compute_hull
from .numeric import rat_render
from .reductions import Instance, build_construction

WIDTH = 800
HEIGHT = 600
SAMPLES = 200

_CSS = """
.parabola { fill: none; stroke-width: 1.5; }
.outer { stroke: #1f4e9c; }
.inner { stroke: #9c1f4e; stroke-dasharray: 6 3; }
.tangent { stroke: #888; stroke-width: 1; }
.hull { fill: #f3f0d9; fill-opacity: 0.6; stroke: #444; stroke-width: 1.5; }
.triangle { fill: #f7c6c6; fill-opacity: 0.5; stroke: #c00; stroke-width: 1; }
.point { stroke: #000; stroke-width: 1.5; }
.L { fill: #000; }
.T { fill: #fff; }
.interior { stroke: #d00; stroke-width: 3; }
.boundary { stroke: #e69500; stroke-width: 2.5; }
"""

_CLASS_NAMES = {
    PointClass.EXTREME: "extreme",
    PointClass.BOUNDARY: "boundary",
    PointClass.INTERIOR: "interior",
}


class _Viewport:
    """Affine map from the data bounding box (plus 10% margin) to pixels."""

    def __init__(self, xs, ys, margin=0.1):
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        dx = (x1 - x0) or 1.0
        dy = (y1 - y0) or 1.0
        self.x0, self.x1 = x0 - margin * dx, x1 + margin * dx
        self.y0, self.y1 = y0 - margin * dy, y1 + margin * dy

    def __call__(self, x, y):
        px = (x - self.x0) / (self.x1 - self.x0) * WIDTH
        py = HEIGHT - (y - self.y0) / (self.y1 - self.y0) * HEIGHT
        return round(px, 3), round(py, 3)


def _points_attr(pairs) -> str:
    return " ".join(f"{x},{y}" for x, y in pairs)


def _parabola(view: _Viewport, lift: float) -> list:
    out = []
    for k in range(SAMPLES + 1):
        x = view.x0 + (view.x1 - view.x0) * k / SAMPLES
        y = x * x + lift
        if y <= view.y1:
            out.append(view(x, y))
    return out


def render_svg(inst: Instance) -> str:
    con = build_construction(inst)
    n, eps, a = inst.n, inst.eps, inst.values
    report = compute_hull(con.points)
    pts = con.points + con.R
    view = _Viewport([float(p.x) for p in pts], [float(p.y) for p in pts])
    lift = float(eps) ** 2 / 4

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(WIDTH),
        "height": str(HEIGHT),
        "viewBox": f"0 0 {WIDTH} {HEIGHT}",
    })
    ET.SubElement(svg, "title").text = (
        f"S(A, eps) for eps={rat_render(eps)}, A=[{', '.join(rat_render(v) for v in a)}]"
    )
    ET.SubElement(svg, "style").text = _CSS

    ET.SubElement(svg, "polygon", {
        "class": "hull",
        "points": _points_attr(view(float(p.x), float(p.y)) for p in report.hull_vertices),
    })
    for i in range(n):
        for j in range(n):
            if a[i] < a[j] < a[i] + eps:
                corners = (con.L[i], con.L[j], con.T[j])
                ET.SubElement(svg, "polygon", {
                    "class": "triangle",
                    "data-pair": f"{i + 1},{j + 1}",
                    "points": _points_attr(view(float(p.x), float(p.y)) for p in corners),
                })
    ET.SubElement(svg, "polyline", {"class": "parabola outer", "points": _points_attr(_parabola(view, 0.0))})
    ET.SubElement(svg, "polyline", {"class": "parabola inner", "points": _points_attr(_parabola(view, lift))})
    for i, line in enumerate(con.tangents):
        (x1, y1), (x2, y2) = view(float(line.p.x), float(line.p.y)), view(float(line.q.x), float(line.q.y))
        ET.SubElement(svg, "line", {
            "class": "tangent", "data-index": str(i + 1),
            "x1": str(x1), "y1": str(y1), "x2": str(x2), "y2": str(y2),
        })
    for k, p in enumerate(con.points):
        cx, cy = view(float(p.x), float(p.y))
        label = con.label(k)
        kind = _CLASS_NAMES[report.classes[k]]
        circle = ET.SubElement(svg, "circle", {
            "class": f"point {label[0]} {kind}",
            "data-label": label,
            "cx": str(cx), "cy": str(cy), "r": "5",
        })
        ET.SubElement(circle, "title").text = f"{label} = {p} ({report.classes[k].value})"
    ET.indent(svg)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(svg, encoding="unicode") + "\n"

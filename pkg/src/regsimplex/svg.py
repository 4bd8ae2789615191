"""SVG drawing of the planar cross-section A..H with the circle through E, F, G.

Coordinates stay exact everywhere else; floats appear only here, to project
the plane onto the page.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET

from .exact import dot, sq_norm, sub
from .scene import POINT_NAMES, ConstructionScene

SEGMENTS = ("AB", "CF", "AE", "BD", "GF", "EF", "CG")

SIZE = 520
MARGIN = 50


def project(scene: ConstructionScene) -> dict:
    """Orthonormal 2-D coordinates of every labeled point, origin at B."""
    u, w = scene.plane_basis
    nu, nw = math.sqrt(sq_norm(u)), math.sqrt(sq_norm(w))
    out = {}
    for name, p in scene.points().items():
        d = sub(p, scene.B)
        out[name] = (float(dot(d, u)) / nu, float(dot(d, w)) / nw)
    return out


def render_svg(scene: ConstructionScene) -> str:
    xy = project(scene)
    radius = math.sqrt(scene.circle_sq_radius)
    xs = [x for x, _ in xy.values()] + [-radius, radius]
    ys = [y for _, y in xy.values()] + [-radius, radius]
    span = max(max(xs) - min(xs), max(ys) - min(ys))
    k = (SIZE - 2 * MARGIN) / span

    def page(x, y):
        return MARGIN + (x - min(xs)) * k, SIZE - MARGIN - (y - min(ys)) * k

    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": str(SIZE), "height": str(SIZE),
        "viewBox": f"0 0 {SIZE} {SIZE}",
    })
    ET.SubElement(svg, "title").text = (
        f"Cross-section plane of the regular {scene.base_dim + 1}-simplex "
        f"over a regular {scene.base_dim}-simplex base"
    )
    ET.SubElement(svg, "rect", {"class": "background", "x": "0", "y": "0",
                                "width": str(SIZE), "height": str(SIZE), "fill": "white"})

    cx, cy = page(*xy["B"])
    ET.SubElement(svg, "circle", {
        "id": "circle-c", "cx": f"{cx:.3f}", "cy": f"{cy:.3f}", "r": f"{radius * k:.3f}",
        "fill": "none", "stroke": "#3a6ea5", "stroke-dasharray": "5,4",
    })

    lines = ET.SubElement(svg, "g", {"id": "segments", "stroke": "#333", "stroke-width": "1.5"})
    for seg in SEGMENTS:
        (x1, y1), (x2, y2) = page(*xy[seg[0]]), page(*xy[seg[1]])
        ET.SubElement(lines, "line", {"id": f"seg-{seg}",
                                      "x1": f"{x1:.3f}", "y1": f"{y1:.3f}",
                                      "x2": f"{x2:.3f}", "y2": f"{y2:.3f}"})

    pts = ET.SubElement(svg, "g", {"id": "points", "font-family": "sans-serif", "font-size": "15"})
    for name in POINT_NAMES:
        x, y = page(*xy[name])
        g = ET.SubElement(pts, "g", {"class": "point", "id": f"point-{name}"})
        # markers are squares so the only <circle> is the construction circle
        ET.SubElement(g, "rect", {"class": "marker", "x": f"{x - 3:.3f}", "y": f"{y - 3:.3f}",
                                  "width": "6", "height": "6", "fill": "#b22"})
        label = ET.SubElement(g, "text", {"x": f"{x + 6:.3f}", "y": f"{y - 6:.3f}"})
        label.text = name

    ET.indent(svg)
    return ET.tostring(svg, encoding="unicode", xml_declaration=True) + "\n"


def write_svg(scene: ConstructionScene, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(scene))

"""Deterministic SVG rendering of disc tilings and trigrid meshes.

Cell edges are drawn as true geodesics: circular arcs orthogonal to the unit
circle, or straight segments for diameters.  Output depends only on the scene
and options (floats are formatted to fixed precision), so renders are
byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import geodesic_circle

DEFAULT_PALETTE = ("#ffffff", "#3b7dd8", "#d84a3b", "#3bd875", "#d8c83b",
                   "#8e3bd8", "#3bc8d8", "#d8783b")


@dataclass
class Scene:
    """Cells to draw: each a vertex tuple plus optional label and fill state."""

    cells: list = field(default_factory=list)  # (vertices, label, state)

    def add(self, vertices, label: str | None = None, state: int | None = None):
        self.cells.append((tuple(vertices), label, state))


@dataclass
class RenderOptions:
    radius_px: float = 420.0
    stroke_width: float = 1.0
    labels: bool = False
    palette: tuple = DEFAULT_PALETTE


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    return "-0.000000" if out == "-0.000000" else out


def _arc_path(vertices, scale: float) -> str:
    """SVG path around a cell, one geodesic arc (or line) per side."""
    n = len(vertices)
    z0 = vertices[0] * scale
    parts = [f"M {_fmt(z0.real)} {_fmt(-z0.imag)}"]
    for k in range(n):
        a, b = vertices[k], vertices[(k + 1) % n]
        circ = geodesic_circle(a, b)
        bs = b * scale
        if circ is None:
            parts.append(f"L {_fmt(bs.real)} {_fmt(-bs.imag)}")
            continue
        c, r = circ
        # sweep: the arc bulges away from the circle center; SVG y runs down.
        cross = (b.real - a.real) * (c.imag - a.imag) - (b.imag - a.imag) * (c.real - a.real)
        sweep = 1 if cross > 0 else 0
        rs = r * scale
        parts.append(f"A {_fmt(rs)} {_fmt(rs)} 0 0 {sweep} {_fmt(bs.real)} {_fmt(-bs.imag)}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(scene: Scene, options: RenderOptions | None = None) -> str:
    """SVG document: one path per cell, the disc circle, optional labels."""
    opt = options or RenderOptions()
    s = opt.radius_px
    pad = 8.0
    size = 2 * (s + pad)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
        f'viewBox="{-(s + pad):.1f} {-(s + pad):.1f} {size:.1f} {size:.1f}">',
        f'<circle cx="0" cy="0" r="{_fmt(s)}" fill="none" stroke="#888888" '
        f'stroke-width="{_fmt(opt.stroke_width)}"/>',
    ]
    labels = []
    for vertices, label, state in scene.cells:
        fill = "none"
        if state is not None:
            fill = opt.palette[state % len(opt.palette)]
        lines.append(
            f'<path d="{_arc_path(vertices, s)}" fill="{fill}" '
            f'stroke="#222222" stroke-width="{_fmt(opt.stroke_width)}"/>')
        if opt.labels and label is not None:
            ctr = sum(vertices) / len(vertices) * s
            fs = max(3.0, s / 55.0)
            labels.append(
                f'<text x="{_fmt(ctr.real)}" y="{_fmt(-ctr.imag)}" '
                f'font-size="{_fmt(fs)}" text-anchor="middle" fill="#000000">{label}</text>')
    lines.extend(labels)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def tiling_scene(tiling, max_level: int, states=None) -> Scene:
    """Scene of the coordinate ball of tree level <= max_level."""
    from .geometry import coordinate_ball, place
    scene = Scene()
    for c in coordinate_ball(tiling, max_level):
        poly = place(tiling, c)
        scene.add(poly.vertices, label=str(c))
    return scene


def trigrid_scene(tiling, max_level: int, subdiv: int, states: dict | None = None) -> Scene:
    """Scene of all depth-`subdiv` triangles over the ball of level <= max_level."""
    from .geometry import coordinate_ball, place, subdivide_all
    coords = coordinate_ball(tiling, max_level)
    polys = [place(tiling, c) for c in coords]
    scene = Scene()
    for tri in subdivide_all(polys, subdiv, coords=coords):
        state = states.get(tri.coord) if states else None
        scene.add(tri.vertices, label=str(tri.coord), state=state)
    return scene


def region_scene(region, tiling, state=None) -> Scene:
    """Scene of a CA region, colouring cells by the given state vector."""
    from .geometry import place_tri
    scene = Scene()
    for i, coord in enumerate(region.cells):
        tri = place_tri(tiling, coord)
        scene.add(tri.vertices, label=str(coord),
                  state=None if state is None else state[i])
    return scene

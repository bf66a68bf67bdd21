"""SVG renderings: barycentric drawings of maps and windows of the tiling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import drawsvg as draw
import numpy as np

from trihex.core.hexlattice import HexCoord, rotocenter_lattice
from trihex.core.signature import Signature
from trihex.core.trihex_map import CombinatorialMap
from trihex.utils.error_handler import ConsistencyError, SignatureError
from trihex.utils.logger import get_logger

logger = get_logger("trihex.svg")

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class Theme:
    background: str = "#ffffff"
    triangle_fill: str = "#f4a261"
    hexagon_fill: str = "#e9f5f9"
    edge_color: str = "#264653"
    vertex_color: str = "#264653"
    rotocenter_fill: str = "#e76f51"
    tile_stroke: str = "#94a3b8"
    domain_fill: str = "#2a9d8f"
    text_color: str = "#1e293b"


DEFAULT_THEME = Theme()


# --------------------------------------------------------------------------
# Tutte drawing
# --------------------------------------------------------------------------


def outer_face(m: CombinatorialMap) -> int:
    """Lowest-numbered hexagon, or face 0 when there are none."""
    hexagons = m.hexagons()
    return hexagons[0] if hexagons else 0


def tutte_layout(m: CombinatorialMap, tolerance: float = 1e-9) -> np.ndarray:
    """
    Vertex positions with the outer face pinned to a regular polygon and
    every other vertex at the mean of its neighbours, as a ``(V, 2)`` array.
    """
    boundary = list(m.face_vertices(outer_face(m)))
    positions = np.zeros((m.num_vertices, 2))
    n = len(boundary)
    for k, vertex in enumerate(boundary):
        # the outer face keeps its region on the left, so its cycle runs clockwise
        angle = math.pi / 2 - 2 * math.pi * k / n
        positions[vertex] = (math.cos(angle), math.sin(angle))

    pinned = set(boundary)
    free = [x for x in range(m.num_vertices) if x not in pinned]
    if not free:
        return positions
    column = {x: i for i, x in enumerate(free)}

    laplacian = np.zeros((len(free), len(free)))
    rhs = np.zeros((len(free), 2))
    for x in free:
        row = column[x]
        for y in m.neighbors(x):
            laplacian[row, row] += 1.0
            if y in pinned:
                rhs[row] += positions[y]
            else:
                laplacian[row, column[y]] -= 1.0

    solution = np.linalg.solve(laplacian, rhs)
    residual = float(np.abs(laplacian @ solution - rhs).max())
    if residual > tolerance:
        raise ConsistencyError(f"barycentric solve left residual {residual:.3g}", residual=residual)
    positions[free] = solution
    return positions


def render_map_svg(
    m: CombinatorialMap,
    *,
    canvas: float = 640.0,
    tolerance: float = 1e-9,
    title: str = "",
    theme: Theme = DEFAULT_THEME,
) -> str:
    layout = tutte_layout(m, tolerance)
    margin = 0.06 * canvas
    scale = canvas / 2 - margin

    def to_canvas(x: int) -> Tuple[float, float]:
        px, py = layout[x]
        return canvas / 2 + scale * px, canvas / 2 - scale * py

    d = draw.Drawing(canvas, canvas)
    d.append(draw.Rectangle(0, 0, canvas, canvas, fill=theme.background))

    skip = outer_face(m)
    for index in range(m.num_faces):
        if index == skip:
            continue
        points: List[float] = []
        for x in m.face_vertices(index):
            points.extend(to_canvas(x))
        fill = theme.triangle_fill if len(m.faces[index]) == 3 else theme.hexagon_fill
        d.append(draw.Lines(*points, close=True, fill=fill, stroke="none", class_="face"))

    for x, y in m.edges:
        (x1, y1), (x2, y2) = to_canvas(x), to_canvas(y)
        d.append(draw.Line(x1, y1, x2, y2, stroke=theme.edge_color, stroke_width=1.5, class_="edge"))

    for x in range(m.num_vertices):
        cx, cy = to_canvas(x)
        d.append(draw.Circle(cx, cy, 3.0, fill=theme.vertex_color, class_="vertex"))

    if title:
        d.append(draw.Text(title, 14, margin / 2, margin / 2 + 7, fill=theme.text_color))
    logger.debug("Rendered map", vertices=m.num_vertices, outer_face=skip)
    return d.as_svg()


# --------------------------------------------------------------------------
# Tiling window
# --------------------------------------------------------------------------


def hex_center(h: HexCoord, radius: float) -> Tuple[float, float]:
    """Centre of ``h`` in canvas units, y pointing down, hexagons with horizontal sides."""
    return 1.5 * radius * h.q, SQRT3 * radius * (h.r - h.q / 2)


def render_tiling_svg(
    sig: Signature,
    columns: int,
    rows: int,
    *,
    radius: float = 18.0,
    theme: Theme = DEFAULT_THEME,
) -> str:
    """
    A ``columns`` by ``rows`` window of the tiling with the rotocentres
    marked and the fundamental domain spanned by ``2u`` and ``w`` shaded.
    """
    if columns < 1 or rows < 1:
        raise SignatureError(f"window must be positive, got {columns}x{rows}", columns=columns, rows=rows)
    lattice = rotocenter_lattice(sig)

    first_q = -(columns // 2)
    first_row = -(rows // 2)
    window = [
        HexCoord(q, row + (q + (q & 1)) // 2)
        for q in range(first_q, first_q + columns)
        for row in range(first_row, first_row + rows)
    ]

    centers = [hex_center(h, radius) for h in window]
    min_x = min(x for x, _ in centers) - radius
    min_y = min(y for _, y in centers) - radius
    width = max(x for x, _ in centers) + radius - min_x
    height = max(y for _, y in centers) + radius - min_y
    title_band = 24.0

    d = draw.Drawing(width, height + title_band)
    d.append(draw.Rectangle(0, 0, width, height + title_band, fill=theme.background))

    def place(x: float, y: float) -> Tuple[float, float]:
        return x - min_x, y - min_y + title_band

    corners = [(math.cos(k * math.pi / 3), -math.sin(k * math.pi / 3)) for k in range(6)]
    for h, (cx, cy) in zip(window, centers):
        points: List[float] = []
        for dx, dy in corners:
            points.extend(place(cx + radius * dx, cy + radius * dy))
        d.append(draw.Lines(*points, close=True, fill="none", stroke=theme.tile_stroke, stroke_width=1))

    domain = [HexCoord(0, 0), lattice.w, lattice.w + lattice.u.scaled(2), lattice.u.scaled(2)]
    outline: List[float] = []
    for h in domain:
        outline.extend(place(*hex_center(h, radius)))
    d.append(
        draw.Lines(
            *outline,
            close=True,
            fill=theme.domain_fill,
            fill_opacity=0.25,
            stroke=theme.domain_fill,
            stroke_width=2,
            class_="domain",
        )
    )

    marked = 0
    for h, (cx, cy) in zip(window, centers):
        if lattice.contains(h):
            x, y = place(cx, cy)
            d.append(draw.Circle(x, y, radius * 0.35, fill=theme.rotocenter_fill, class_="rotocenter"))
            marked += 1

    d.append(draw.Text(f"signature {sig.text}  {lattice.dump()}", 14, 6, 17, fill=theme.text_color))
    logger.debug("Rendered tiling", signature=sig.text, hexagons=len(window), rotocenters=marked)
    return d.as_svg()

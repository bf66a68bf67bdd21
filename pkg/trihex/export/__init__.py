"""Output formats for built maps."""

from trihex.export.document import DOCUMENT_VERSION, GraphDocument, to_dot, to_graph6
from trihex.export.svg import render_map_svg, render_tiling_svg, tutte_layout

__all__ = [
    "DOCUMENT_VERSION",
    "GraphDocument",
    "to_dot",
    "to_graph6",
    "render_map_svg",
    "render_tiling_svg",
    "tutte_layout",
]

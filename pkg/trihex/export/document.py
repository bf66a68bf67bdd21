"""
Serialization of built maps.

``GraphDocument`` is the embedding-preserving JSON format and reads back
into a ``CombinatorialMap``. DOT and graph6 carry the underlying graph only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import networkx as nx

from trihex.core.signature import SignatureClass
from trihex.core.trihex_map import CombinatorialMap
from trihex.utils.error_handler import ConsistencyError, DocumentError

DOCUMENT_VERSION = "trihex-graph/1"
_FACE_KINDS = {3: "triangle", 6: "hexagon"}


@dataclass
class GraphDocument:
    vertices: List[int]
    edges: List[List[int]]
    faces: List[Dict[str, Any]]
    rotation: List[List[int]]
    signature_class: Optional[Dict[str, Any]] = None
    method: Optional[str] = None
    version: str = DOCUMENT_VERSION
    extra: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_map(
        cls,
        m: CombinatorialMap,
        signature_class: Optional[SignatureClass] = None,
        method: Optional[str] = None,
    ) -> "GraphDocument":
        faces = []
        for index in range(m.num_faces):
            cycle = list(m.face_vertices(index))
            faces.append({"kind": _FACE_KINDS.get(len(cycle), f"{len(cycle)}-gon"), "cycle": cycle})
        return cls(
            vertices=list(range(m.num_vertices)),
            edges=[list(edge) for edge in m.edges],
            faces=faces,
            rotation=[list(m.neighbors(x)) for x in range(m.num_vertices)],
            signature_class=signature_class.to_dict() if signature_class is not None else None,
            method=method,
        )

    def to_map(self) -> CombinatorialMap:
        try:
            m = CombinatorialMap.from_rotation_system(self.rotation)
        except ConsistencyError as exc:
            raise DocumentError(f"rotation system is inconsistent: {exc.message}") from exc
        if m.num_vertices != len(self.vertices) or [list(e) for e in m.edges] != self.edges:
            raise DocumentError("edge list does not match the rotation system")
        return m

    # ------------------------------------------------------------ json
    def to_dict(self) -> Dict[str, Any]:
        payload = {
            "version": self.version,
            "signature_class": self.signature_class,
            "method": self.method,
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "rotation": self.rotation,
        }
        payload.update(self.extra)
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not a JSON document: {exc.msg}", line=exc.lineno) from exc
        if not isinstance(payload, dict):
            raise DocumentError("graph document must be a JSON object")
        if payload.get("version") != DOCUMENT_VERSION:
            raise DocumentError(f"unsupported document version {payload.get('version')!r}")
        missing = [key for key in ("vertices", "edges", "faces", "rotation") if key not in payload]
        if missing:
            raise DocumentError(f"graph document lacks {', '.join(missing)}")
        known = {"version", "signature_class", "method", "vertices", "edges", "faces", "rotation"}
        return cls(
            vertices=payload["vertices"],
            edges=payload["edges"],
            faces=payload["faces"],
            rotation=payload["rotation"],
            signature_class=payload.get("signature_class"),
            method=payload.get("method"),
            extra={key: value for key, value in payload.items() if key not in known},
        )


def to_dot(m: CombinatorialMap, signature_class: Optional[SignatureClass] = None) -> str:
    """Undirected DOT graph; faces are listed as comments."""
    lines = ["graph trihex {"]
    if signature_class is not None:
        members = " ".join(sig.text for sig in signature_class.ordered())
        lines.append(f"  // class {members}")
    for index in range(m.num_faces):
        cycle = " ".join(str(x) for x in m.face_vertices(index))
        lines.append(f"  // face {index} {_FACE_KINDS.get(len(m.faces[index]), 'polygon')}: {cycle}")
    for x in range(m.num_vertices):
        lines.append(f"  {x};")
    for x, y in m.edges:
        lines.append(f"  {x} -- {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_graph6(m: CombinatorialMap) -> str:
    """graph6 string of the underlying simple graph; the embedding is dropped."""
    return nx.to_graph6_bytes(m.to_networkx(), header=False).decode("ascii").strip()

"""
trihex: classification, construction and census of trihexes, the cubic
planar graphs whose faces are all triangles or hexagons.
"""

from trihex.core.construction import build, build_by_quotient, build_by_spines
from trihex.core.signature import Signature, SignatureClass, equivalent_signatures, mirror_signature

__all__ = [
    "Signature",
    "SignatureClass",
    "equivalent_signatures",
    "mirror_signature",
    "build",
    "build_by_quotient",
    "build_by_spines",
]

__version__ = "1.0.0"

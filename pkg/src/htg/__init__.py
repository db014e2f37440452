"""Honeycomb toroidal graphs: construction, Hamilton constructions, oracles and predicates."""

from .core import (
    CayleyGraph,
    DihedralConnection,
    EdgeKind,
    HtgError,
    HtgGraph,
    HtgParams,
    VertexId,
    VertexSeq,
    build,
    htg,
    normalize,
    validate_params,
)

__all__ = [
    "CayleyGraph",
    "DihedralConnection",
    "EdgeKind",
    "HtgError",
    "HtgGraph",
    "HtgParams",
    "VertexId",
    "VertexSeq",
    "build",
    "htg",
    "normalize",
    "validate_params",
]

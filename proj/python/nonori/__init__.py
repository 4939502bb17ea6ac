"""Census, homology, spine and Seifert tools for small non-orientable 3-manifolds."""

from pathlib import Path

from . import _core
from ._core import (
    DomainError,
    ParseError,
    chi_orb,
    data_path,
    double_cover,
    enumerate,
    euler_number,
    face_pairing_graph_count,
    fingerprint,
    geometry,
    h1,
    is_orientable,
    layered_bundle,
    recognize,
    seifert_double_cover,
    size,
    small_h2r_manifolds,
    sol_classify,
    sol_normalize,
    sol_roots,
    spine_check,
    table1,
    vertex_count,
)

__all__ = [
    "DomainError",
    "ParseError",
    "chi_orb",
    "data_path",
    "double_cover",
    "enumerate",
    "euler_number",
    "face_pairing_graph_count",
    "fingerprint",
    "geometry",
    "h1",
    "is_orientable",
    "layered_bundle",
    "recognize",
    "seifert_double_cover",
    "size",
    "small_h2r_manifolds",
    "sol_classify",
    "sol_normalize",
    "sol_roots",
    "spine_check",
    "table1",
    "vertex_count",
]

_shipped = Path(__file__).with_name("orientable_census.txt")
if _shipped.exists():
    _core._set_data_path(str(_shipped))

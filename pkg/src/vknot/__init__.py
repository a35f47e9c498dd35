"""Virtual knot diagrams: Gauss codes, planar maps, moves, meander algorithms."""

from vknot.gauss import (
    ArcSplit,
    EndpointRecord,
    GaussCode,
    KArcReport,
    brute_min_arc_number,
    carter_genus,
    chord_parity,
    delete_chord,
    is_k_arc_split,
    min_arc_number,
    parity_projection,
    parse_gauss,
    reduce_code,
    serialize_gauss,
)

__all__ = [
    "ArcSplit",
    "EndpointRecord",
    "GaussCode",
    "KArcReport",
    "brute_min_arc_number",
    "carter_genus",
    "chord_parity",
    "delete_chord",
    "is_k_arc_split",
    "min_arc_number",
    "parity_projection",
    "parse_gauss",
    "reduce_code",
    "serialize_gauss",
]

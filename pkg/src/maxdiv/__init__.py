"""Maximal division of a disk: piece areas, fairness optima, and the
moments and normal limit of the random region count."""

from maxdiv.geometry import (
    ARC_MAX,
    AreaProfile,
    Chord,
    ChordSet,
    area_circular_trapezoid,
    area_circular_triangle,
    area_profile,
    area_triangle,
    count_regions_geometric,
    max_regions,
    random_chord_set,
)

__all__ = [
    "ARC_MAX",
    "AreaProfile",
    "Chord",
    "ChordSet",
    "area_circular_trapezoid",
    "area_circular_triangle",
    "area_profile",
    "area_triangle",
    "count_regions_geometric",
    "max_regions",
    "random_chord_set",
]

__version__ = "0.1.0"

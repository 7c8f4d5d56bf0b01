"""
Z^d 格点几何模块
"""

from .geometry import (
    Vertex,
    Region,
    RADIUS_TOLERANCE,
    origin,
    floor_radius,
    graph_distance,
    translate,
    scale,
    unit_directions,
    neighbors,
    ball_offsets,
    ball_vertices,
    sphere_vertices,
    ball_size,
    distance_to_set,
)
from .animals import MAX_ANIMAL_SIZE, count_lattice_animals, animal_counts

__all__ = [
    "Vertex",
    "Region",
    "RADIUS_TOLERANCE",
    "origin",
    "floor_radius",
    "graph_distance",
    "translate",
    "scale",
    "unit_directions",
    "neighbors",
    "ball_offsets",
    "ball_vertices",
    "sphere_vertices",
    "ball_size",
    "distance_to_set",
    "MAX_ANIMAL_SIZE",
    "count_lattice_animals",
    "animal_counts",
]

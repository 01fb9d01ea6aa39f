"""Daisy cubes, induced-hypercube censuses and distance cube polynomials."""

from .bitword import Word, format_word, hamming, leq, meet, parse, weight
from .census import (
    CubeCensus,
    CubeHandle,
    bfs_distances,
    census_daisy_fast,
    census_oracle,
    census_subcube,
    closed_form_W,
    compute_census,
    cube_poly,
    cube_polynomial,
    distance_poly,
    enumerate_cubes,
    weight_poly,
)
from .estimators import DaisyCubeClosure, DistanceCubeCensus
from .family import (
    DaisyCube,
    VertexSet,
    bipartite_wheel,
    cartesian_product,
    downward_closure,
    fibonacci,
    hypercube,
    interval,
    lucas,
    maximal_antichain,
    recenter,
    run_free,
    vertex_deleted,
)
from .poly import BiPoly, RationalSeries, UniPoly

__version__ = "0.1.0"

__all__ = [
    "bfs_distances",
    "bipartite_wheel",
    "BiPoly",
    "cartesian_product",
    "census_daisy_fast",
    "census_oracle",
    "census_subcube",
    "closed_form_W",
    "compute_census",
    "cube_poly",
    "cube_polynomial",
    "CubeCensus",
    "CubeHandle",
    "DaisyCube",
    "DaisyCubeClosure",
    "distance_poly",
    "DistanceCubeCensus",
    "downward_closure",
    "enumerate_cubes",
    "fibonacci",
    "format_word",
    "hamming",
    "hypercube",
    "interval",
    "leq",
    "lucas",
    "maximal_antichain",
    "meet",
    "parse",
    "RationalSeries",
    "recenter",
    "run_free",
    "UniPoly",
    "vertex_deleted",
    "VertexSet",
    "weight",
    "weight_poly",
    "Word",
]

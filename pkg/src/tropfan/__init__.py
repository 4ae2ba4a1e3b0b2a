"""Cyclic Bergman fans of linear matroids, in exact arithmetic.

The fan of the column matroid of an integer matrix is a simplicial polyhedral
fan supported on the tropical linear space; its rays are indicators of the
proper flats that are cyclic or singletons, and its maximal cones are
enumerated one-to-one from regressive compatible pairs.  A ray-shooting
module on top computes vertices of Newton polytopes of A-discriminants.
"""

from .discriminant import (
    DiscriminantProblem,
    NewtonVertex,
    random_vertices,
    ray_hits_cone,
    setup,
    shoot_vertex,
)
from .exact import IntMat, RatMat, det, integer_kernel_basis, rank, reduce_on_basis, rref
from .fan import (
    CaterpillarTree,
    CompatiblePair,
    Cone,
    Fan,
    build_tree,
    compare_with_bergman,
    cone_from_tree,
    cyclic_bergman_fan,
    enumerate_pairs,
    fan_counts,
    fan_rays_are_cyclic_flats,
    induce_pair,
    interior_witness,
    is_in_local_trop,
    is_in_trop,
    local_trop_point,
    point_in_cone,
)
from .matroid import Matroid, TuttePoly

__all__ = [
    "IntMat",
    "RatMat",
    "rank",
    "det",
    "reduce_on_basis",
    "integer_kernel_basis",
    "rref",
    "Matroid",
    "TuttePoly",
    "CompatiblePair",
    "CaterpillarTree",
    "Cone",
    "Fan",
    "enumerate_pairs",
    "build_tree",
    "cone_from_tree",
    "cyclic_bergman_fan",
    "fan_counts",
    "is_in_trop",
    "is_in_local_trop",
    "local_trop_point",
    "induce_pair",
    "interior_witness",
    "point_in_cone",
    "compare_with_bergman",
    "fan_rays_are_cyclic_flats",
    "DiscriminantProblem",
    "NewtonVertex",
    "setup",
    "shoot_vertex",
    "random_vertices",
    "ray_hits_cone",
]

__version__ = "0.1.0"

"""Bundled example matrices.

The tangency matrices are Cayley-style exponent matrices: the first rows are
indicator vectors of a partition of the columns (one part per polynomial) and
the remaining rows carry the exponent vectors, with inverted variables for
the second part where the geometry calls for it.  They drive the discriminant
pipeline and double as large fan benchmarks.
"""

from .exact import IntMat


def cube_matrix(d: int) -> IntMat:
    """(d+1) x 2^d matrix of affine coordinates of the d-cube's vertices.

    Column v+1 is (1, bits of v); the top all-ones row homogenizes.
    """
    cols = 1 << d
    rows = [[1] * cols]
    for j in range(d):
        rows.append([(v >> (d - 1 - j)) & 1 for v in range(cols)])
    return IntMat.from_rows(rows)


#: Cycle matroid of a multigraph: a double edge {1,2}, a double edge {3,4},
#: and two bridgeless edges 5, 6 closing a triangle.
GRAPHIC_3X6 = IntMat.from_rows(
    [
        [1, 1, 0, 0, 1, 0],
        [0, 0, 1, 1, 0, 1],
        [0, 0, 0, 0, -1, -1],
    ]
)

#: Small rank-4 matrix whose fundamental circuits over the basis {1,2,3,4}
#: exercise preference functions, compatible pairs, and caterpillar trees.
DEMO_4X7 = IntMat.from_rows(
    [
        [1, 0, 0, 0, 0, 3, 1],
        [0, 1, 0, 0, 1, 1, 2],
        [0, 0, 1, 0, 0, 0, 1],
        [0, 0, 0, 1, 2, 1, 0],
    ]
)

#: Rank-2 uniform matroid on three elements.
UNIFORM_2_3 = IntMat.from_rows(
    [
        [1, 0, 1],
        [0, 1, 1],
    ]
)

#: Tangency condition between an affine linear form and a cubic in two
#: variables (with inverted variables for the cubic).
TANGENT_LINE_CUBIC_4X13 = IntMat.from_rows(
    [
        [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, -1, 0, -2, -1, 0, -3, -2, -1, 0],
        [0, 0, 1, 0, 0, -1, 0, -1, -2, 0, -1, -2, -3],
    ]
)

#: A Gale dual of TANGENT_LINE_CUBIC_4X13 (full row rank 9, orthogonal rowspace).
TANGENT_LINE_CUBIC_GALE_9X13 = IntMat.from_rows(
    [
        [0, 0, 0, 0, -1, 1, 1, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 1, 0, 0, 1, 0, 0, -1, 0, 0],
        [1, 0, -1, 0, 1, -1, 0, 1, 0, 0, -1, 0, 0],
        [0, 0, 0, 2, -2, -1, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, -1, 0, 0, 0, -1, 1, 0, 0],
        [0, 0, 0, -1, 1, 0, 0, 0, 1, 0, 0, -1, 0],
        [0, -1, 1, 0, -1, 1, 0, -1, 1, 0, 1, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0],
        [0, 0, 0, 4, -6, 0, 0, 0, 0, 0, 3, 0, -1],
    ]
)

#: Tangency condition between two quadric surfaces in three variables.
TANGENT_QUADRICS_5X20 = IntMat.from_rows(
    [
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [0, 2, 0, 0, 1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 0, 0, 1, 1, 0],
        [0, 0, 2, 0, 0, 1, 0, 1, 0, 1, 0, 0, 2, 0, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 2, 0, 0, 1, 0, 1, 1, 0, 0, 0, 2, 0, 0, 1, 0, 1, 1],
    ]
)

#: Tangency condition between a conic and a cubic plane curve (inverted
#: variables for the cubic); the standard ray-shooting example.
TANGENT_CONIC_CUBIC_4X16 = IntMat.from_rows(
    [
        [1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 2, 0, -1, 0, -2, -1, 0, -3, -2, -1, 0],
        [0, 1, 0, 2, 1, 0, 0, 0, -1, 0, -1, -2, 0, -1, -2, -3],
    ]
)

#: Double-point condition on the common zeros of three quadric surfaces;
#: enormous fan, exercised only by the stress-marked tests.
TANGENT_THREE_QUADRICS_6X30 = IntMat.from_rows(
    [
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1] + [0] * 20,
        [0] * 10 + [1, 1, 1, 1, 1, 1, 1, 1, 1, 1] + [0] * 10,
        [0] * 20 + [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [0, 2, 0, 0, 1, 0, 0, 1, 1, 0] * 3,
        [0, 0, 2, 0, 0, 1, 0, 1, 0, 1] * 3,
        [0, 0, 0, 2, 0, 0, 1, 0, 1, 1] * 3,
    ]
)

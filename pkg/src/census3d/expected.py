"""Reference counts for the verification suite.

These are the published census values this package is expected to
reproduce, embedded so that ``census3d verify`` is self-contained.
"""

# total types and split by topological type, per vertex count
MANIFOLD_COUNTS = {
    5: {"All": 1, "S3": 1, "S2xS1": 0, "S2twistS1": 0},
    6: {"All": 2, "S3": 2, "S2xS1": 0, "S2twistS1": 0},
    7: {"All": 5, "S3": 5, "S2xS1": 0, "S2twistS1": 0},
    8: {"All": 39, "S3": 39, "S2xS1": 0, "S2twistS1": 0},
    9: {"All": 1297, "S3": 1296, "S2xS1": 0, "S2twistS1": 1},
    10: {"All": 249015, "S3": 247882, "S2xS1": 518, "S2twistS1": 615},
}

# per-f-vector type counts of the 10-vertex census, keyed by edge count
FVECTOR_ROWS_10 = {
    (10, 30, 40, 20): (30, 30, 0, 0),
    (10, 31, 42, 21): (124, 124, 0, 0),
    (10, 32, 44, 22): (385, 385, 0, 0),
    (10, 33, 46, 23): (952, 952, 0, 0),
    (10, 34, 48, 24): (2142, 2142, 0, 0),
    (10, 35, 50, 25): (4340, 4340, 0, 0),
    (10, 36, 52, 26): (8106, 8106, 0, 0),
    (10, 37, 54, 27): (13853, 13853, 0, 0),
    (10, 38, 56, 28): (21702, 21702, 0, 0),
    (10, 39, 58, 29): (30526, 30526, 0, 0),
    (10, 40, 60, 30): (38575, 38553, 10, 12),
    (10, 41, 62, 31): (42581, 42498, 37, 46),
    (10, 42, 64, 32): (39526, 39299, 110, 117),
    (10, 43, 66, 33): (28439, 28087, 162, 190),
    (10, 44, 68, 34): (14057, 13745, 145, 167),
    (10, 45, 70, 35): (3677, 3540, 54, 83),
}

# triangulated 2-spheres per vertex count; the totals are published, the
# per-size split is pinned by the small-case brute-force oracle and frozen
SPHERE2_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50}
SPHERE2_TOTAL = 73

# types with a nontrivial symmetry group per vertex count
NONTRIVIAL_GROUP_COUNTS = {5: 1, 6: 1, 7: 5, 8: 36, 9: 408, 10: 7443}

# group-order histograms (order -> number of types), summed over the
# published per-group rows; trivial groups included
GROUP_ORDER_HISTOGRAMS = {
    5: {120: 1},
    6: {48: 1, 72: 1},
    7: {8: 2, 12: 1, 14: 1, 48: 1},
    8: {1: 3, 2: 13, 4: 10, 6: 1, 8: 4, 12: 4, 16: 2, 60: 1, 384: 1},
}

VERTEX_TRANSITIVE_TOTAL = 14  # over all manifolds with up to 10 vertices

# triangulated 3-balls per vertex count
BALL_COUNTS = {4: 1, 5: 3, 6: 12, 7: 167, 8: 10211, 9: 2451305}

# non-shellable balls: none through 8 vertices, then the 9-vertex batch
NONSHELLABLE_BALL_COUNTS = {4: 0, 5: 0, 6: 0, 7: 0, 8: 0, 9: 29}
STRONGLY_NONSHELLABLE_9 = 10
NONSHELLABLE_9_FACET_RANGE = (18, 22)
NONSHELLABLE_9_MIN_FVECTOR = (9, 33, 43, 18)

# balls that are not vertex-decomposable
NOT_VD_BALL_COUNTS = {4: 0, 5: 0, 6: 0, 7: 2, 8: 628, 9: 623819}

# spheres that are not vertex-decomposable, and the facet counts of the
# seven 9-vertex examples
NOT_VD_SPHERE_COUNTS = {5: 0, 6: 0, 7: 0, 8: 0, 9: 7, 10: 14468}
NOT_VD_SPHERE_9_FACETS = (25, 26, 26, 27, 27, 27, 27)

# the smallest 9-vertex sphere that is not vertex-decomposable
NOT_VD_SPHERE_9_MIN = (
    (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 6), (1, 2, 5, 7), (1, 2, 6, 8),
    (1, 2, 7, 8), (1, 3, 4, 5), (1, 4, 5, 6), (1, 5, 6, 7), (1, 6, 7, 9),
    (1, 6, 8, 9), (1, 7, 8, 9), (2, 3, 4, 8), (2, 3, 5, 9), (2, 3, 7, 8),
    (2, 3, 7, 9), (2, 4, 6, 8), (2, 5, 7, 9), (3, 4, 5, 8), (3, 5, 6, 8),
    (3, 5, 6, 9), (3, 6, 8, 9), (3, 7, 8, 9), (4, 5, 6, 8), (5, 6, 7, 9),
)

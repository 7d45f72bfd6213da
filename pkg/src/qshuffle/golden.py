"""Reference identities used by ``verify`` and the acceptance tests."""
from __future__ import annotations

from .laurent import LaurentPoly

P = LaurentPoly.parse

# positive roots in convex order, one tuple of simple-root coordinates per root
ROOT_SEQUENCES = {
    "G2": [(1, 0), (3, 1), (2, 1), (3, 2), (1, 1), (0, 1)],
    "B3": [(1, 0, 0), (2, 1, 0), (2, 1, 1), (1, 1, 0), (2, 2, 1), (1, 1, 1), (0, 1, 0), (0, 1, 1), (0, 0, 1)],
    "C3": [(1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 1, 1), (1, 2, 1), (1, 2, 2), (0, 1, 0), (0, 1, 1), (0, 0, 1)],
    "D4": [(1, 0, 0, 0), (1, 0, 1, 0), (1, 1, 1, 0), (1, 0, 1, 1), (1, 1, 1, 1), (1, 1, 2, 1),
           (0, 1, 0, 0), (0, 1, 1, 0), (0, 1, 1, 1), (0, 0, 1, 0), (0, 0, 1, 1), (0, 0, 0, 1)],
    "A5": [(1, 0, 0, 0, 0), (1, 1, 0, 0, 0), (1, 1, 1, 0, 0), (1, 1, 1, 1, 0), (1, 1, 1, 1, 1),
           (0, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 1, 1, 1, 0), (0, 1, 1, 1, 1),
           (0, 0, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 1, 1, 1),
           (0, 0, 0, 1, 0), (0, 0, 0, 1, 1), (0, 0, 0, 0, 1)],
}

# b^2 = q^shift (b^[2] + z)
IMAGINARY = {
    "G2": ((1, 0, 0, 0, 1, 0), (1, 0, 1, 0, 1, 0), -1),
    "B3": ((0, 1, 0, 0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 1, 0, 0, 1, 0), -2),
    "C3": ((0, 1, 0, 0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 1, 0, 0, 1, 0), -1),
    "D4": ((0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0), -1),
    "A5": ((0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0), (0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0), -2),
}

G2_B = {(1, 2, 1): P("1")}
G2_B_SQUARED = {
    (1, 2, 1, 1, 2, 1): P("2 + 2q^-2"),
    (1, 1, 2, 2, 1, 1): P("q^4 + 2q^2 + 1 + q^-2 + 2q^-4 + q^-6"),
    (1, 2, 1, 2, 1, 1): P("q + 2q^-1 + q^-3"),
    (1, 1, 2, 1, 2, 1): P("q + 2q^-1 + q^-3"),
}
G2_B2 = {
    (1, 2, 1, 1, 2, 1): P("q + q^-1"),
    (1, 1, 2, 2, 1, 1): P("q^5 + 2q^3 + q + q^-1 + 2q^-3 + q^-5"),
    (1, 2, 1, 2, 1, 1): P("q^2 + 2 + q^-2"),
    (1, 1, 2, 1, 2, 1): P("q^2 + 2 + q^-2"),
}
G2_Z = {(1, 2, 1, 1, 2, 1): P("q + q^-1")}

G2_CENSUS_DEGREE = 7
G2_CENSUS_TOTAL = 116
G2_IMAGINARY = sorted([(1, 0, 0, 0, 1, j) for j in range(5)]
                      + [(2, 0, 0, 0, 2, j) for j in range(2)]
                      + [(j, 1, 0, 0, 0, 1) for j in range(3)])
G2_PRIME_IMAGINARY = sorted([(1, 0, 0, 0, 1, 0), (2, 0, 0, 0, 2, 0), (0, 1, 0, 0, 0, 1)])

# type A5 labels
A5_M_SEGMENTS = "[1,2],[2,3,4],[3],[4,5]"
A5_MPRIME_SEGMENTS = "[1,2],[2,3],[3,4],[4,5],[1,2,3,4],[2,3,4,5]"
A5_MSECOND_SEGMENTS = "[1,2],[1,2],[2,3,4],[2,3,4],[3],[3],[4,5],[4,5]"
A5_DIMENSION = 252
# k -> exponents e of the roots q^-e of P_k
DRINFELD_M = {1: (6,), 2: (3, 9), 3: (6,)}
DRINFELD_MPRIME = {2: (3, 5, 7, 9), 4: (5, 7)}
DRINFELD_MSECOND = {1: (6, 6), 2: (3, 3, 9, 9), 3: (6, 6)}

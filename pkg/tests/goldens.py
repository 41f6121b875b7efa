"""Hand-checked fixtures shared across test modules.

Matrices are given row-major with None for non-admissible cells; every
value here was worked out on paper from the arc orientations and checked
against the published pictures before the engine existed.
"""

# "2|4 / 1|2|3": arcs {1,2},{3,6},{4,5} on top and {2,3},{4,6} below,
# single path 1-2-3-6-4-5, potentials normalized at vertex 6.
PHI_2_4_123 = (-1, 0, -1, 1, 2, 0)

MASK_2_4_123 = {
    (1, 1),
    (2, 1), (2, 2), (2, 3),
    (3, 3),
    (4, 3), (4, 4), (4, 5), (4, 6),
    (5, 3), (5, 4), (5, 5), (5, 6),
    (6, 3), (6, 4), (6, 5), (6, 6),
}

SIGMA_2_4_123 = (
    (0, None, None, None, None, None),
    (1, 0, 1, None, None, None),
    (None, None, 0, None, None, None),
    (None, None, 2, 0, -1, 1),
    (None, None, 3, 1, 0, 2),
    (None, None, 1, -1, -2, 0),
)

SIGMAHAT_2_4_123 = (
    (0, -1, 0, -2, -3, -1),
    (1, 0, 1, -1, -2, 0),
    (0, -1, 0, -2, -3, -1),
    (2, 1, 2, 0, -1, 1),
    (3, 2, 3, 1, 0, 2),
    (1, 0, 1, -1, -2, 0),
)

SPECTRUM_2_4_123 = {-2: 1, -1: 2, 0: 5, 1: 5, 2: 2, 3: 1}
EXTENDED_2_4_123 = {-3: 2, -2: 4, -1: 7, 0: 9, 1: 7, 2: 4, 3: 2}
SUPPORT_2_4_123 = ((2, 1), (2, 3), (4, 6), (5, 4), (6, 3))

# "5|2 / 7": path 3-5-1-7-6-2-4, potentials (1, 0, 3, 1, 2, -1, 0).
PHI_5_2_7 = (1, 0, 3, 1, 2, -1, 0)

SIGMA_5_2_7 = (
    (0, 1, -2, 0, -1, 2, 1),
    (-1, 0, -3, -1, -2, 1, 0),
    (2, 3, 0, 2, 1, 4, 3),
    (0, 1, -2, 0, -1, 2, 1),
    (1, 2, -1, 1, 0, 3, 2),
    (None, None, None, None, None, 0, -1),
    (None, None, None, None, None, 1, 0),
)

SPECTRUM_5_2_7 = {-3: 1, -2: 3, -1: 6, 0: 9, 1: 9, 2: 6, 3: 3, 4: 1}

# "3|2 / 5": path 2-4-5-1-3, potentials (1, 0, 2, -1, 0).
PHI_3_2_5 = (1, 0, 2, -1, 0)

SIGMAHAT_3_2_5 = (
    (0, 1, -1, 2, 1),
    (-1, 0, -2, 1, 0),
    (1, 2, 0, 3, 2),
    (-2, -1, -3, 0, -1),
    (-1, 0, -2, 1, 0),
)

EXTENDED_3_2_5 = {-3: 1, -2: 3, -1: 5, 0: 6, 1: 5, 2: 3, 3: 1}

# Small spectra worked out by hand from scratch.
SMALL_SPECTRA = {
    "2|1 / 3": {-1: 1, 0: 2, 1: 2, 2: 1},
    "3|1 / 4": {-2: 1, -1: 2, 0: 3, 1: 3, 2: 2, 3: 1},
    "1|2 / 3": {-1: 1, 0: 2, 1: 2, 2: 1},
    "2|2 / 3|1": {-1: 1, 0: 3, 1: 3, 2: 1},
    "1|2 / 2|1": {0: 2, 1: 2},
    "1|2|1 / 2|2": {0: 3, 1: 3},
    "2|2|1 / 5": {-1: 2, 0: 6, 1: 6, 2: 2},
    "1|1 / 2": {0: 1, 1: 1},
    "1 / 1": {},
}

# Acceptance witnesses: unimodal spectra whose profiles are not log-concave.
WITNESS_K2R = {-2: 1, -1: 2, 0: 6, 1: 6, 2: 2, 3: 1}
WITNESS_K4R2 = {-3: 1, -2: 3, -1: 10, 0: 21, 1: 21, 2: 10, 3: 3, 4: 1}
WITNESS_881 = {
    -7: 2, -6: 5, -5: 8, -4: 13, -3: 23, -2: 37, -1: 52, 0: 64,
    1: 64, 2: 52, 3: 37, 4: 23, 5: 13, 6: 8, 7: 5, 8: 2,
}

"""Vertex lists in the [a, b, c, d] encoding."""

G40_ABCD = (
    (0, 0, 0, 0), (0, 0, 96, 0), (-33, -3, 33, -3), (-33, 3, 33, -9), (-33, 3, 33, 3), (-33, 3, 63, -3),
    (-33, 9, 63, 3), (-18, 0, 48, -6), (-18, 0, 48, 6), (-18, 6, 48, 0), (-15, -9, 15, 3), (-15, -3, 15, -3),
    (-15, -3, 45, 3), (-15, 3, -15, -3), (-15, 3, 15, -9), (-15, 3, 15, 3), (-15, 3, 81, -3), (-15, 3, 111, 3),
    (-15, 9, 15, -3), (-15, 9, 81, 3), (0, -12, 0, 0), (0, -6, 30, 0), (0, -6, 66, 0), (0, 0, 30, -6),
    (0, 0, 30, 6), (0, 0, 66, -6), (0, 0, 66, 6), (0, 6, 0, -6), (0, 6, 0, 6), (0, 6, 30, 0),
    (0, 6, 66, 0), (0, 6, 96, 6), (0, 12, 30, 6), (0, 12, 66, 6), (15, 3, 15, -3), (15, 3, 81, 3),
    (18, 0, 48, -6), (18, 6, 48, 0), (33, 3, 33, -3), (33, 3, 63, 3),
)

G49_ABCD = (
    (0, 0, 0, 0), (0, 0, 0, 12), (-6, 0, 0, 6), (6, 0, 0, 6), (0, 0, -18, 6), (0, 0, 18, 6),
    (-3, -9, 9, 9), (3, 9, 9, 9), (-9, -9, 9, 3), (9, 9, 9, 3), (-3, -9, -9, 3), (3, 9, -9, 3),
    (-12, 0, 0, 0), (12, 0, 0, 0), (9, -9, -9, 3), (-9, 9, -9, 3), (3, -9, -9, 9), (-3, 9, -9, 9),
    (3, -9, 9, 3), (-3, 9, 9, 3), (-6, 0, 18, 0), (6, 0, 18, 0), (-6, 0, -18, 0), (6, 0, -18, 0),
    (0, -18, 0, 6), (0, 18, 0, 6), (-6, -18, 0, 0), (6, 18, 0, 0), (6, -18, 0, 0), (-6, 18, 0, 0),
    (-3, -9, 9, -3), (3, 9, 9, -3), (9, -9, 9, -3), (-9, 9, 9, -3), (-9, -9, -9, -3), (9, 9, -9, -3),
    (3, -9, -9, -3), (-3, 9, -9, -3), (-6, 0, 0, -6), (6, 0, 0, -6), (0, 0, 0, -12), (0, 0, -18, -6),
    (0, 0, 18, -6), (0, -18, 0, -6), (0, 18, 0, -6), (-3, -9, -9, -9), (-3, 9, 9, -9), (3, -9, 9, -9),
    (3, 9, -9, -9),
)

G51_ABCD = (
    (0, 0, 12, 0), (-6, 0, -6, 0), (6, 0, -6, 0), (0, 0, -24, 0), (0, 0, -6, -6), (0, 0, -6, 6),
    (-18, 0, -6, 0), (-12, 0, -24, 0), (-12, 0, 12, 0), (-12, 0, -6, -6), (-12, 0, -6, 6), (-6, 0, 30, 0),
    (-6, 0, 12, -6), (-6, 0, 12, 6), (18, 0, -6, 0), (12, 0, -24, 0), (12, 0, 12, 0), (12, 0, -6, -6),
    (12, 0, -6, 6), (6, 0, 30, 0), (6, 0, 12, -6), (6, 0, 12, 6), (-9, -9, 3, -3), (-9, -9, -15, 3),
    (-9, 9, 3, 3), (-9, 9, -15, -3), (-3, -9, 3, 3), (-3, -9, 21, -3), (-3, -9, -15, -3), (-3, 9, 3, -3),
    (-3, 9, 21, 3), (-3, 9, -15, 3), (9, -9, 3, 3), (9, -9, -15, -3), (9, 9, 3, -3), (9, 9, -15, 3),
    (3, -9, 3, -3), (3, -9, 21, 3), (3, -9, -15, 3), (3, 9, 3, 3), (3, 9, 21, -3), (3, 9, -15, -3),
    (0, 0, 30, 6), (-15, -9, -15, -3), (15, 9, -15, -3), (-6, 0, -24, 6), (6, 0, -24, 6), (-15, 9, 3, -3),
    (-9, 9, 21, -3), (9, -9, 21, -3), (15, -9, 3, -3),
)

HARDEST_ADDITIONS_ABCD = (
    (6, 0, -24, -6), (-15, -9, 3, 3), (9, 9, 21, 3), (12, 0, 30, -6), (-21, -9, -15, 3), (-15, -9, 21, -3),
    (15, 9, 21, -3), (9, 9, 39, -3), (3, 9, 39, 3), (-6, -6, 0, 0), (3, 3, 9, 3), (-9, 9, 39, 3),
    (-15, -9, -33, 3), (24, 0, -6, -6), (-21, -9, 3, -3), (-18, 0, 30, 0), (18, 0, 30, 0), (-15, -9, 39, 3),
    (9, -3, 15, -3), (-3, -3, 15, -3), (9, 3, 9, -3), (-18, -18, 12, 0), (-21, -3, 15, 3), (6, -6, 0, 0),
    (15, -9, 39, -3), (-18, -18, -24, 0), (-3, 3, 9, -3), (-18, -12, 6, 0), (12, 6, 6, 0), (24, 6, 24, -6),
    (-9, 3, 9, 3), (9, -3, -21, -3), (-3, 3, 45, -3), (12, -6, 18, 0), (-6, 6, 24, 0), (-12, -6, 0, 6),
    (12, 6, -30, 0), (12, 6, 42, 0), (3, 3, 45, 3), (0, -12, 24, 0), (27, -3, 33, -3), (4, 0, -6, -2),
    (0, -6, 54, 0), (-18, -12, 42, 0), (30, 6, 24, 0), (6, -6, 18, 6), (-10, -6, 18, 2), (-2, 0, -6, 4),
    (6, -6, 54, 6), (30, 6, -12, 0), (-10, -6, 54, 2), (8, -6, 0, 2), (22, 0, 12, -2), (8, -6, 36, 2),
    (16, 0, 12, 4),
)

APPENDIX_ABCD = (
    (0, 0, 12, 0), (0, 0, -24, 0), (0, 0, -6, -6), (0, 0, -6, 6), (-18, 0, -6, 0), (-12, 0, -6, -6),
    (-12, 0, -6, 6), (-6, 0, 12, -6), (-6, 0, 12, 6), (0, 0, 30, 6), (-6, 0, -24, 6), (-32, -6, -12, 2),
    (-32, 6, -12, -2), (-30, -6, -18, -6), (-30, -6, -12, 0), (-30, -6, 6, 6), (-30, -6, 24, 0), (-30, 0, 12, 6),
    (-30, 6, -18, 6), (-30, 6, -12, 0), (-30, 6, 6, -6), (-30, 6, 24, 0), (-27, -9, -15, 9), (-27, -9, 3, 3),
    (-27, -9, 21, -3), (-27, -3, -27, 3), (-27, -3, -3, 3), (-27, 3, -3, -3), (-27, 9, -15, 3), (-27, 9, 3, -3),
    (-27, 9, 21, 3), (-24, -6, -18, 0), (-24, -6, 24, -6), (-24, 0, -24, 0), (-24, 0, -6, -6), (-24, 0, -6, 6),
    (-24, 0, 12, 0), (-24, 6, -18, 0), (-24, 18, -6, 0), (-22, -6, -12, 4), (-22, 0, -6, -4), (-22, 0, -6, 4),
    (-22, 0, 12, -2), (-22, 0, 12, 2), (-21, -9, -15, -9), (-21, -9, -15, 3), (-21, -9, 3, -3), (-21, -9, 21, 3),
    (-21, -3, -3, -3), (-21, -3, 15, 3), (-21, 3, -9, -3), (-21, 3, -3, 3), (-21, 3, 15, -3), (-21, 9, -15, -3),
    (-21, 9, -15, 9), (-21, 9, 3, -9), (-21, 9, 3, 3), (-21, 9, 21, -3), (-19, -3, -3, -1), (-19, 3, -3, 1),
    (-18, -18, 12, 0), (-18, -12, 6, 0), (-18, 0, 12, -6), (-18, 0, 12, 6), (-18, 12, 6, 0), (-18, 18, -6, 6),
    (-18, 18, 12, 0), (-16, 0, 12, -4), (-16, 0, 12, 4), (-15, -9, 3, 3), (-15, -3, -3, 3), (-15, -3, 9, 3),
    (-15, 3, -3, -3), (-15, 3, 9, -3), (-15, 9, -15, 3), (-15, 9, 3, 9), (-14, -6, 6, 2), (-14, 0, 12, 2),
    (-14, 6, 6, -2), (-13, -3, -3, 5), (-12, -6, -12, 6), (-12, -6, 0, -6), (-12, -6, 0, 6), (-12, -6, 6, 0),
    (-12, 6, 0, -6), (-12, 6, 0, 6), (-12, 6, 6, 0), (-12, 12, 0, 0), (-12, 18, -6, 0), (-9, -9, 3, 9),
    (-9, -3, -9, 3), (-9, -3, -3, -3), (-9, -3, 9, -3), (-9, 3, -3, 3), (-9, 9, 3, -9), (-9, 15, -3, 3),
    (-8, -6, 0, -2), (-8, 6, 0, 2), (-6, -12, 6, 0), (-6, -6, 0, 0), (-6, -6, 6, -6), (-6, 0, -6, 12),
    (-6, 6, 0, 0), (-5, -3, -3, 1), (-5, 3, -3, -1), (-4, -6, 0, 2), (-4, 6, 0, -2), (-3, -3, -3, 3),
    (-3, 3, -3, 9),
)

# Colour classes of the hardest restricted colouring of G51 (1-based vertex numbers).
HARDEST_COLOR_CLASSES = {
    1: (1, 2, 3, 43, 44, 45, 46, 49, 51),
    2: (4, 5, 6, 8, 11, 14, 18, 20, 21, 23, 28, 33, 36, 48),
    3: (7, 13, 15, 17, 25, 26, 29, 31, 34, 37, 38, 40, 42, 47),
    4: (9, 10, 12, 16, 19, 22, 24, 27, 30, 32, 35, 39, 41, 50),
}

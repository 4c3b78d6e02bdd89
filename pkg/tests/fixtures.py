"""Hand-transcribed quivers used as ground truth across the test suite.

Each transcription lists every arrow explicitly, both halves of each skew
pair, exactly as drawn; loading asserts structural validity so transcription
typos fail loudly here rather than in downstream tests.
"""

from __future__ import annotations

from qmut.quiver import ColoredQuiver, validate

# ---------------------------------------------------------------------------
# The 2-colored mutation class of the (3,1) cycle seed, m=2: sixteen drawn
# templates, the last three parameterized by a color c in {0,1,2}.
# Vertices are 0-indexed (diagram labels 1..4 -> 0..3).  Entries are
# (i, j, color) or (i, j, color, count).

FIG4_FIXED = {
    1: [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2), (2, 3, 0), (3, 2, 2),
        (0, 3, 0), (3, 0, 2)],
    2: [(0, 1, 0), (1, 0, 2), (1, 2, 0), (2, 1, 2), (2, 3, 1), (3, 2, 1),
        (0, 3, 1), (3, 0, 1)],
    3: [(0, 1, 0), (1, 0, 2), (1, 2, 1), (2, 1, 1), (2, 3, 0), (3, 2, 2),
        (0, 3, 1), (3, 0, 1)],
    4: [(0, 1, 0), (1, 0, 2), (0, 3, 0), (3, 0, 2), (3, 2, 0), (2, 3, 2),
        (1, 3, 0), (3, 1, 2), (1, 2, 1), (2, 1, 1)],
    5: [(0, 1, 0), (1, 0, 2), (0, 3, 0), (3, 0, 2), (3, 2, 1), (2, 3, 1),
        (1, 3, 0), (3, 1, 2), (1, 2, 2), (2, 1, 0)],
    6: [(0, 1, 1), (1, 0, 1), (0, 3, 1), (3, 0, 1), (3, 2, 0), (2, 3, 2),
        (1, 3, 0), (3, 1, 2), (1, 2, 1), (2, 1, 1)],
    7: [(0, 1, 1), (1, 0, 1), (0, 3, 1), (3, 0, 1), (3, 2, 1), (2, 3, 1),
        (1, 3, 0), (3, 1, 2), (1, 2, 2), (2, 1, 0)],
    8: [(0, 1, 2), (1, 0, 0), (0, 3, 2), (3, 0, 0), (3, 2, 0), (2, 3, 2),
        (1, 3, 0), (3, 1, 2), (1, 2, 1), (2, 1, 1)],
    9: [(0, 1, 2), (1, 0, 0), (0, 3, 2), (3, 0, 0), (3, 2, 1), (2, 3, 1),
        (1, 3, 0), (3, 1, 2), (1, 2, 2), (2, 1, 0)],
    10: [(0, 1, 0), (1, 0, 2), (0, 3, 1), (3, 0, 1), (3, 2, 0), (2, 3, 2),
         (1, 3, 1), (3, 1, 1), (1, 2, 2), (2, 1, 0)],
    11: [(0, 1, 1), (1, 0, 1), (0, 3, 2), (3, 0, 0), (3, 2, 0), (2, 3, 2),
         (1, 3, 1), (3, 1, 1), (1, 2, 2), (2, 1, 0)],
    # the K4-shaped member with a double arrow between 0 and 3
    12: [(0, 2, 1), (2, 0, 1), (0, 1, 2), (1, 0, 0), (0, 3, 0, 2), (3, 0, 2, 2),
         (3, 2, 0), (2, 3, 2), (3, 1, 1), (1, 3, 1), (1, 2, 2), (2, 1, 0)],
    # the member whose central cycle has length two (double arrows 1 <-> 3)
    13: [(0, 3, 0), (3, 0, 2), (0, 1, 2), (1, 0, 0), (1, 2, 2), (2, 1, 0),
         (1, 3, 1, 2), (3, 1, 1, 2), (3, 2, 0), (2, 3, 2)],
}


def fig4_template(which: int, c: int) -> list[tuple]:
    """One of the three c-parameterized Figure-4 templates, c in {0,1,2}."""
    pendant = [(1, 2, c), (2, 1, 2 - c)]
    if which == 14:
        core = [(0, 1, 1), (1, 0, 1), (0, 3, 0, 2), (3, 0, 2, 2),
                (3, 1, 0), (1, 3, 2)]
    elif which == 15:
        core = [(0, 1, 2), (1, 0, 0), (0, 3, 0, 2), (3, 0, 2, 2),
                (3, 1, 1), (1, 3, 1)]
    elif which == 16:
        core = [(0, 1, 2), (1, 0, 0), (0, 3, 1, 2), (3, 0, 1, 2),
                (3, 1, 0), (1, 3, 2)]
    else:
        raise ValueError("parameterized templates are 14, 15, 16")
    return core + pendant


def _checked(m: int, n: int, arrows, names=None) -> ColoredQuiver:
    q = ColoredQuiver(m, n, arrows, names)
    problems = validate(q)
    assert not problems, f"transcription is broken: {problems}"
    return q


def fig4_quiver(which: int, c: int | None = None) -> ColoredQuiver:
    if which in FIG4_FIXED:
        return _checked(2, 4, FIG4_FIXED[which])
    return _checked(2, 4, fig4_template(which, c))


def fig4_all_instances() -> list[ColoredQuiver]:
    out = [fig4_quiver(k) for k in sorted(FIG4_FIXED)]
    for which in (14, 15, 16):
        out.extend(fig4_quiver(which, c) for c in range(3))
    return out


# ---------------------------------------------------------------------------
# The 11-vertex worked example (m=2): a (4,2)-central cycle with one
# peripheral component of each kind hanging off the clique {a1, a4, v, w}.
# Vertex order: a1 a2 a3 a4 v w x1 x2 y1 y2 y3  ->  0..10.

EX5_NAMES = ["a1", "a2", "a3", "a4", "v", "w", "x1", "x2", "y1", "y2", "y3"]

EX5_HALF_ARROWS = [
    (7, 4, 2),   # x2 -> v
    (6, 7, 1),   # x1 -> x2
    (1, 2, 2),   # a2 -> a3
    (0, 1, 0),   # a1 -> a2
    (0, 4, 0),   # a1 -> v
    (0, 5, 2),   # a1 -> w
    (4, 6, 2),   # v -> x1
    (4, 3, 0),   # v -> a4
    (2, 3, 1),   # a3 -> a4
    (3, 0, 1),   # a4 -> a1
    (5, 4, 1),   # w -> v
    (5, 3, 2),   # w -> a4
    (5, 8, 0),   # w -> y1
    (8, 9, 0),   # y1 -> y2
    (9, 5, 1),   # y2 -> w
    (10, 9, 0),  # y3 -> y2
]


def _with_skew(m: int, half):
    arrows = []
    for i, j, c in half:
        arrows.append((i, j, c))
        arrows.append((j, i, m - c))
    return arrows


def ex5_quiver() -> ColoredQuiver:
    return _checked(2, 11, _with_skew(2, EX5_HALF_ARROWS), EX5_NAMES)


# State after the first composition of the worked example (mutations at y1
# then x1), used as a direct oracle for the mutation engine.
EX5_AFTER_Y1_X1_HALF = [
    (1, 2, 2), (0, 1, 0), (0, 4, 0), (0, 5, 2),
    (4, 6, 0),   # v -> x1
    (4, 3, 0),
    (6, 7, 0),   # x1 -> x2
    (2, 3, 1), (3, 0, 1),
    (5, 4, 1), (5, 3, 2),
    (5, 8, 1),   # w -> y1
    (9, 8, 0),   # y2 -> y1
    (10, 9, 0),  # y3 -> y2
]


def ex5_after_y1_x1() -> ColoredQuiver:
    return _checked(2, 11, _with_skew(2, EX5_AFTER_Y1_X1_HALF), EX5_NAMES)


# The full composed mutation sequence of the worked example, left to right.
EX5_FULL_SEQUENCE = (
    [8, 6]
    + [7, 7, 6, 6, 7, 7]
    + [8, 9, 10]
    + [4]
    + [6, 7]
    + [5, 8, 9, 10]
    + [4, 6, 7]
    + [3]
)

# Final quiver drawn at the end of the worked example (all arrows color 0).
EX5_FINAL_HALF = [
    (0, 10, 0),  # a1 -> y3
    (0, 1, 0),   # a1 -> a2
    (10, 9, 0),  # y3 -> y2
    (9, 8, 0),   # y2 -> y1
    (2, 1, 0),   # a3 -> a2
    (8, 5, 0),   # y1 -> w
    (3, 2, 0),   # a4 -> a3
    (3, 7, 0),   # a4 -> x2
    (7, 6, 0),   # x2 -> x1
    (6, 4, 0),   # x1 -> v
    (4, 5, 0),   # v -> w
]


def ex5_final_quiver() -> ColoredQuiver:
    return _checked(2, 11, _with_skew(2, EX5_FINAL_HALF), EX5_NAMES)


# ---------------------------------------------------------------------------
# The 11-vertex, m=3 example whose 0-colored part illustrates the
# cluster-shape conditions.  Vertex order: a1 a2 a3 a4 w1 w2 w3 x1 x2 y z.

EX6_NAMES = ["a1", "a2", "a3", "a4", "w1", "w2", "w3", "x1", "x2", "y", "z"]

EX6_HALF_ARROWS = [
    (6, 10, 0),  # w3 -> z
    (6, 1, 0),   # w3 -> a2
    (1, 0, 0),   # a2 -> a1
    (1, 2, 0),   # a2 -> a3
    (0, 6, 2),   # a1 -> w3
    (0, 5, 0),   # a1 -> w2
    (0, 4, 2),   # a1 -> w1
    (5, 7, 0),   # w2 -> x1
    (5, 3, 2),   # w2 -> a4
    (5, 4, 1),   # w2 -> w1
    (7, 8, 1),   # x1 -> x2
    (2, 3, 0),   # a3 -> a4
    (3, 0, 0),   # a4 -> a1
    (4, 3, 0),   # w1 -> a4
    (4, 9, 0),   # w1 -> y
]


def ex6_quiver() -> ColoredQuiver:
    return _checked(3, 11, _with_skew(3, EX6_HALF_ARROWS), EX6_NAMES)

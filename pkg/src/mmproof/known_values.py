"""Reference values for the one- and two-peg games.

Each equation entry is ``(id, question, sorted terms, W coefficients)`` where
a term ``(l, r)`` stands for ``A_l(n - r)`` and ``W`` is ascending in ``n``.
"""

from __future__ import annotations

EQUATIONS = [
    ("MM.1.0.1", "0", ((0, 1),), (0, 1)),
    ("MM.2.0.1", "0,0", ((0, 1), (1, 0)), (0, 0, 1)),
    ("MM.2.0.2", "0,1", ((0, 2), (2, 0), (3, 0)), (1, 0, 1)),
    ("MM.2.0.3", "0,a", ((0, 1), (4, 0), (5, 0)), (0, 0, 1)),
    ("MM.2.1.1", "0,0", ((1, 0),), (-2, 2)),
    ("MM.2.1.2", "0,1", ((4, 1), (4, 1)), (-1, 2)),
    ("MM.2.1.3", "0,a", ((4, 0), (4, 0)), (-2, 2)),
    ("MM.2.1.4", "1,1", ((1, 1),), (1, 2)),
    ("MM.2.1.5", "1,2", ((1, 2),), (4, 2)),
    ("MM.2.1.6", "1,a", ((1, 1),), (0, 2)),
    ("MM.2.2.1", "0,0", ((4, 1), (4, 1)), (-4, 2)),
    ("MM.2.2.2", "0,1", ((2, 0),), (-4, 2)),
    ("MM.2.2.3", "0,2", ((4, 2), (4, 2)), (-2, 2)),
    ("MM.2.2.4", "0,a", ((4, 1), (4, 1)), (-4, 2)),
    ("MM.2.2.5", "1,0", ((2, 0),), (-4, 2)),
    ("MM.2.2.6", "1,2", ((4, 2), (4, 2)), (-3, 2)),
    ("MM.2.2.7", "1,a", ((4, 1), (4, 1)), (-4, 2)),
    ("MM.2.2.8", "2,2", ((2, 1),), (-1, 2)),
    ("MM.2.2.9", "2,3", ((2, 2),), (2, 2)),
    ("MM.2.2.10", "2,a", ((2, 1),), (-2, 2)),
    ("MM.2.3.1", "0,0", ((4, 1), (5, 1)), (-2, 2)),
    ("MM.2.3.2", "0,1", ((3, 0),), (-2, 2)),
    ("MM.2.3.3", "0,2", ((5, 2), (5, 2)), (-1, 2)),
    ("MM.2.3.4", "0,a", ((5, 1), (5, 1)), (-2, 2)),
    ("MM.2.3.5", "1,0", ((2, 0),), (1, 2)),
    ("MM.2.3.6", "1,2", ((4, 2), (5, 2)), (2, 2)),
    ("MM.2.3.7", "1,a", ((4, 1), (5, 1)), (-1, 2)),
    ("MM.2.3.8", "2,2", ((3, 1),), (1, 2)),
    ("MM.2.3.9", "2,3", ((3, 2),), (4, 2)),
    ("MM.2.3.10", "2,a", ((3, 1),), (0, 2)),
    ("MM.2.4.1", "0,0", ((4, 0),), (-1, 1)),
    ("MM.2.4.2", "0,1", ((4, 1),), (0, 1)),
    ("MM.2.4.3", "0,a", ((4, 0),), (-1, 1)),
    ("MM.2.4.4", "1,0", ((4, 1),), (-1, 1)),
    ("MM.2.4.5", "1,1", ((4, 1),), (0, 1)),
    ("MM.2.4.6", "1,2", ((4, 2),), (1, 1)),
    ("MM.2.4.7", "1,a", ((4, 1),), (0, 1)),
    ("MM.2.4.8", "a,0", ((4, 0),), (-1, 1)),
    ("MM.2.4.9", "a,1", ((4, 1),), (0, 1)),
    ("MM.2.5.1", "0,0", ((4, 0),), (0, 1)),
    ("MM.2.5.2", "0,1", ((5, 1),), (0, 1)),
    ("MM.2.5.3", "0,a", ((5, 0),), (0, 1)),
    ("MM.2.5.4", "1,0", ((4, 1),), (2, 1)),
    ("MM.2.5.5", "1,1", ((5, 1),), (1, 1)),
    ("MM.2.5.6", "1,2", ((5, 2),), (2, 1)),
    ("MM.2.5.7", "1,a", ((5, 1),), (1, 1)),
    ("MM.2.5.8", "a,0", ((4, 0),), (1, 1)),
    ("MM.2.5.9", "a,1", ((5, 1),), (1, 1)),
    ("AB.2.0.1", "0,1", ((0, 2), (1, 0), (1, 0)), (1, -1, 1)),
    ("AB.2.0.2", "0,a", ((0, 1), (2, 0), (2, 0)), (0, -1, 1)),
    ("AB.2.1.1", "0,1", ((1, 0),), (-4, 2)),
    ("AB.2.1.2", "0,2", ((2, 2), (2, 2)), (-2, 2)),
    ("AB.2.1.3", "0,a", ((2, 1), (2, 1)), (-4, 2)),
    ("AB.2.1.4", "1,0", ((1, 0),), (-4, 2)),
    ("AB.2.1.5", "1,2", ((2, 2), (2, 2)), (-3, 2)),
    ("AB.2.1.6", "1,a", ((2, 1), (2, 1)), (-4, 2)),
    ("AB.2.1.7", "2,3", ((1, 2),), (2, 2)),
    ("AB.2.1.8", "2,a", ((1, 1),), (-2, 2)),
    ("AB.2.2.1", "0,1", ((2, 1),), (0, 1)),
    ("AB.2.2.2", "0,a", ((2, 0),), (-1, 1)),
    ("AB.2.2.3", "1,0", ((2, 1),), (-1, 1)),
    ("AB.2.2.4", "1,2", ((2, 2),), (1, 1)),
    ("AB.2.2.5", "1,a", ((2, 1),), (0, 1)),
    ("AB.2.2.6", "a,0", ((2, 0),), (-1, 1)),
    ("AB.2.2.7", "a,1", ((2, 1),), (0, 1)),
]

# queue patterns in discovery order, written with "*" for the star
QUEUE = {
    ("MM", 1): [["*"]],
    ("MM", 2): [
        ["**"],
        ["0*", "*0"],
        ["1*", "*0"],
        ["00", "0*", "11", "*1"],
        ["*0"],
        ["00", "0*"],
    ],
    ("AB", 2): [
        ["**"],
        ["1*", "*0"],
        ["*0"],
    ],
}

# minimal external path lengths A_i(n) of the queue patterns; None = blank
VALUES = {
    "MM": {
        2: [8, 3, None, None, 1, 3],
        3: [21, 7, 3, 7, 3, 6],
        4: [45, 13, 7, 13, 6, 9],
        5: [81, 21, 13, 21, 9, 13],
    },
    "AB": {
        2: [3, None, 1],
        3: [13, 3, 3],
        4: [30, 7, 6],
        5: [60, 13, 9],
    },
}

# (patterns, equations) of the three-peg derivations
COUNTS3 = {"MM": (13388, 9096599), "AB": (7496, 4188421)}


def equations_for(game: str, p: int) -> list[tuple]:
    prefix = f"{game}.{p}."
    return [e for e in EQUATIONS if e[0].startswith(prefix)]

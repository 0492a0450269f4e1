"""
Builtin fractal triples.

Each table lists psi_i(P_1), ..., psi_i(P_N) per cell. Boundary vertices
come first (P_j is index j - 1), so condition a) reads "row j has j on the
diagonal" and condition b) reads "no other entry of any row is < N".
"""
from .exceptions import UnknownTripleError
from .triple import FractalTriple
from .validation import parse_triple

# Interval [P1, P2] halved at its midpoint M = 2.
# a) row 0 fixes P1 at column 0, row 1 fixes P2 at column 1.
# b) the only other entry is 2 >= N.
# c) both cells contain M.
INTERVAL = {
    "n_boundary": 2,
    "n_total": 3,
    "cells": [[0, 2], [2, 1]],
    "labels": ["P1", "P2", "M"],
}

# Sierpinski gasket. Q12 = 3, Q13 = 4, Q23 = 5 are the side midpoints.
# Cells {P1,Q12,Q13}, {Q12,P2,Q23}, {Q13,Q23,P3}.
# a) diagonal is 0, 1, 2.  b) off-diagonal entries are all in 3..5.
# c) Q12 joins cells 1 and 2, Q23 joins cells 2 and 3.
GASKET = {
    "n_boundary": 3,
    "n_total": 6,
    "cells": [[0, 3, 4], [3, 1, 5], [4, 5, 2]],
    "labels": ["P1", "P2", "P3", "Q12", "Q13", "Q23"],
}

# Vicsek set on the square P1=(0,0), P2=(1,0), P3=(1,1), P4=(0,1), scale 1/3.
# Corner cell i is x/3 + 2P_i/3, the centre cell is x/3 + (1/3,1/3).
# The centre cell's corners 5, 9, 10, 14 are the inner corners of the
# corner cells; every other non-boundary vertex lies in one cell only,
# so M = 4 + 4*3 = 16.
# a) diagonal of rows 0..3 is 0, 1, 2, 3.  b) entries < 4 occur only there.
# c) each corner cell meets the centre cell.
VICSEK = {
    "n_boundary": 4,
    "n_total": 16,
    "cells": [
        [0, 4, 5, 6],
        [7, 1, 8, 9],
        [10, 11, 2, 12],
        [13, 14, 15, 3],
        [5, 9, 10, 14],
    ],
}

# Lindstrom snowflake on the regular hexagon P1..P6, scale 1/3: six outer
# cells x/3 + 2P_j/3 and the centre cell x/3.
# Outer cell j meets cell j+1 at psi_j(P_{j+2}) = psi_{j+1}(P_{j-1})
# (indices 12..17) and the centre cell at psi_j(P_{j+3}) = psi_7(P_j)
# (indices 6..11). psi_j(P_{j+1}) and psi_j(P_{j-1}) are private (18..29).
# a) row j has j at column j.  b) entries < 6 occur only there.
# c) the outer cells form a ring and all meet the centre cell.
SNOWFLAKE = {
    "n_boundary": 6,
    "n_total": 30,
    "cells": [
        [0, 18, 12, 6, 17, 19],
        [21, 1, 20, 13, 7, 12],
        [13, 23, 2, 22, 14, 8],
        [9, 14, 25, 3, 24, 15],
        [16, 10, 15, 27, 4, 26],
        [28, 17, 11, 16, 29, 5],
        [6, 7, 8, 9, 10, 11],
    ],
}

# Tripod: three triangles glued at a centre C = 3, with dangling vertices
# A1 = 4, A2 = 5, A3 = 6. Cells (P1,C,A1), (A2,P2,C), (C,A3,P3).
# a) diagonal is 0, 1, 2.  b) off-diagonal entries are all in 3..6.
# c) every cell contains C.
# A form carried only by the pair {P2,P3} has zero trace: put v(C)=u(P2),
# v(A1)=v(C), v(A3)=u(P3) and every penalized edge has equal endpoints.
TRIPOD = {
    "n_boundary": 3,
    "n_total": 7,
    "cells": [[0, 3, 4], [5, 1, 3], [3, 6, 2]],
    "labels": ["P1", "P2", "P3", "C", "A1", "A2", "A3"],
}

_BUILTINS = {
    "interval": INTERVAL,
    "gasket": GASKET,
    "vicsek": VICSEK,
    "snowflake": SNOWFLAKE,
    "tripod": TRIPOD,
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> FractalTriple:
    """
    Returns the validated builtin triple with the given name.

    Raises:
        UnknownTripleError: If no such builtin exists.
    """
    try:
        raw = _BUILTINS[name]
    except KeyError:
        raise UnknownTripleError(f"Unknown builtin '{name}'. Choose from: {', '.join(BUILTIN_NAMES)}.")
    return parse_triple(raw, name=name)

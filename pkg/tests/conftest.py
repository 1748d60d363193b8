"""Shared example instances used across the test modules.

``THREE_LOOP`` is the 3-vertex digraph with arcs 0->1 and loops at 1 and 2;
its Redei--Berge function is p[3] + 2*p[2,1] + p[1,1,1] and its complement
has 4 Hamiltonian paths.  ``GESSEL`` produces the mixed-sign expansion
p[3] - p[2,1] + p[1,1,1].  ``REMARK`` has a 2-cycle yet a subtraction-free
expansion.  ``FIVE_TOURNAMENT`` is a 5-vertex tournament with 9 Hamiltonian
paths.
"""

from redei_berge import Digraph

THREE_LOOP = Digraph(3, [(0, 1), (1, 1), (2, 2)])

GESSEL = Digraph(3, [(0, 2), (1, 0), (2, 0), (2, 1)])

REMARK = Digraph(4, [(0, 1), (1, 0), (1, 2), (1, 3), (2, 3)])

FIVE_TOURNAMENT = Digraph(
    5,
    [
        (0, 1),
        (0, 3),
        (0, 4),
        (1, 4),
        (2, 0),
        (2, 1),
        (3, 1),
        (3, 2),
        (3, 4),
        (4, 2),
    ],
)


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

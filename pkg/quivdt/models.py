"""
Example quivers with potential.

Each constructor returns a `(Quiver, Potential)` pair.
"""
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/15 (initial version) ~ 2026/10/08 (last revision)"

__all__ = [
    'one_loop',
    'one_loop_free',
    'two_loop_cubic',
    'two_loop_xyxy',
    'doubled_a2',
    'milnor_example',
]

from .quiver import Quiver
from .ncalg import Potential


def one_loop(d):
    """Width-d model: one loop x with W = x^(d+1).

    The Jacobi algebra is C[x]/(x^d).

    >>> one_loop(2)
    (Quiver(1, [x:0->0]), 1*xxx)
    """
    Q = Quiver(1, [('x', 0, 0)])
    return Q, Potential(Q, [(1, ('x',) * (d + 1))])


def one_loop_free():
    """One loop with W = 0."""
    Q = Quiver(1, [('x', 0, 0)])
    return Q, Potential(Q)


def two_loop_cubic():
    """Two loops with W = x^3 + y^3 (infinite-dimensional Jacobi algebra)."""
    Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    return Q, Potential(Q, [(1, 'xxx'), (1, 'yyy')])


def two_loop_xyxy():
    """Two loops with W = xyxy."""
    Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    return Q, Potential(Q, [(1, 'xyxy')])


def doubled_a2(d):
    """Doubled A2 quiver x: 0->1, y: 1->0 with W = (xy)^(d+1).

    The Jacobi algebra has dimension 4d + 2.
    """
    Q = Quiver(2, [('x', 0, 1), ('y', 1, 0)])
    return Q, Potential(Q, [(1, ('x', 'y') * (d + 1))])


def milnor_example(e):
    """One loop with the non-quasi-homogeneous W = x^(e+1) (1 + x).

    The completed Jacobi algebra is C[[x]]/(x^e).
    """
    Q = Quiver(1, [('x', 0, 0)])
    return Q, Potential(Q, [(1, ('x',) * (e + 1)), (1, ('x',) * (e + 2))])


if __name__ == "__main__":
    import doctest
    doctest.testmod()

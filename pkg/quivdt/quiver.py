"""
Quiver Combinatorics
--------------------

Quivers, dimension vectors and the Euler form, together with the framing
construction and the existence test for simple representations that decides
which sectors can carry BPS states.

Key Features:
~~~~~~~~~~~~~
- Immutable `Quiver` with named arrows and a symmetric-quiver predicate
- Euler form and representation-space dimension
- Framed quiver with m arrows from a new vertex to every old vertex
- Le Bruyn-Procesi criterion for simple representations

Usage:
~~~~~~
::

    from quivdt.quiver import Quiver, euler_form, simple_exists

    Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    euler_form(Q, (2,), (2,))      # -4
    simple_exists(Q, (3,))         # True
"""
__version__ = "1.3"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/14 (initial version) ~ 2026/10/11 (last revision)"

__all__ = [
    'Arrow',
    'Quiver',
    'dim_vector',
    'total',
    'dim_vectors',
    'euler_form',
    'rep_dim',
    'support',
    'simple_exists',
    'framing_arrow_name',
    'frame',
]

import itertools
from collections import Counter, namedtuple

from .errors import InputError, DimensionError

Arrow = namedtuple('Arrow', ['name', 'source', 'target'])


class Quiver:
    """A finite quiver with 0-indexed vertices and named arrows.

    Arrow order is the order given here; it seeds the monomial order of the
    path algebra.

    Parameters
    ----------
    vertex_count: int
        Number of vertices, at least 1.
    arrows: iterable of (str, int, int)
        (name, source, target) triples.

    Examples
    --------
    >>> Q = Quiver(2, [('x', 0, 1), ('y', 1, 0)])
    >>> Q.is_symmetric()
    True
    >>> Q.arrow('y')
    Arrow(name='y', source=1, target=0)
    >>> Quiver(1, [('x', 0, 0), ('x', 0, 0)])
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: duplicate arrow name 'x'
    """

    def __init__(self, vertex_count, arrows=()):
        if int(vertex_count) < 1:
            raise InputError('a quiver needs at least one vertex')
        self._vertex_count = int(vertex_count)

        arrow_list = []
        for name, source, target in arrows:
            if not (0 <= source < vertex_count and 0 <= target < vertex_count):
                raise InputError(f'arrow {name!r} has an endpoint out of range')
            arrow_list.append(Arrow(str(name), int(source), int(target)))
        self._arrows = tuple(arrow_list)

        self._index = {}
        for i, a in enumerate(self._arrows):
            if a.name in self._index:
                raise InputError(f'duplicate arrow name {a.name!r}')
            self._index[a.name] = i

    @property
    def vertex_count(self):
        return self._vertex_count

    @property
    def arrows(self):
        return self._arrows

    @property
    def arrow_names(self):
        return tuple(a.name for a in self._arrows)

    def arrow(self, name):
        try:
            return self._arrows[self._index[name]]
        except KeyError:
            raise InputError(f'unknown arrow {name!r}')

    def arrow_index(self, name):
        """Position of an arrow in the canonical arrow order."""
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f'unknown arrow {name!r}')

    def has_arrow(self, name):
        return name in self._index

    def arrow_counts(self):
        """Counter of (source, target) pairs."""
        return Counter((a.source, a.target) for a in self._arrows)

    def is_symmetric(self):
        """True if there are as many arrows i->j as j->i for all i, j."""
        counts = self.arrow_counts()
        return all(counts[(i, j)] == counts[(j, i)] for i, j in counts)

    def __eq__(self, other):
        if not isinstance(other, Quiver):
            return NotImplemented
        return (self._vertex_count, self._arrows) == \
               (other._vertex_count, other._arrows)

    def __hash__(self):
        return hash((self._vertex_count, self._arrows))

    def __repr__(self):
        arrows = ', '.join(f'{a.name}:{a.source}->{a.target}'
                           for a in self._arrows)
        return f'Quiver({self._vertex_count}, [{arrows}])'

#------------------------------------------------------------------------------
# Dimension vectors
#------------------------------------------------------------------------------

def dim_vector(Q, gamma):
    """Validate `gamma` against `Q` and return it as a tuple of ints.

    Examples
    --------
    >>> dim_vector(Quiver(2), [1, 0])
    (1, 0)
    >>> dim_vector(Quiver(2), (1,))
    Traceback (most recent call last):
    ...
    quivdt.errors.DimensionError: dimension vector (1,) has length 1, expected 2
    """
    gamma = tuple(int(g) for g in gamma)
    if len(gamma) != Q.vertex_count:
        raise DimensionError(f'dimension vector {gamma} has length '
                             f'{len(gamma)}, expected {Q.vertex_count}')
    if any(g < 0 for g in gamma):
        raise DimensionError(f'dimension vector {gamma} has a negative entry')
    return gamma


def total(gamma):
    """|gamma|, the sum of the entries."""
    return sum(gamma)


def dim_vectors(Q, max_total):
    """All nonzero dimension vectors with |gamma| <= max_total, in ascending
    lexicographic order.

    Examples
    --------
    >>> dim_vectors(Quiver(2), 2)
    [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
    """
    n = Q.vertex_count
    return [g for g in itertools.product(range(max_total + 1), repeat=n)
            if 0 < sum(g) <= max_total]


def support(gamma):
    """Vertices i with gamma_i > 0."""
    return frozenset(i for i, g in enumerate(gamma) if g > 0)

#------------------------------------------------------------------------------
# Euler form
#------------------------------------------------------------------------------

def euler_form(Q, gamma, delta):
    """Euler form chi(gamma, delta) = sum_i gamma_i delta_i
    - sum_a gamma_s(a) delta_t(a).

    Examples
    --------
    >>> euler_form(Quiver(1, [('x', 0, 0)]), (1,), (1,))
    0
    >>> euler_form(Quiver(1, [('x', 0, 0), ('y', 0, 0)]), (2,), (2,))
    -4
    >>> euler_form(Quiver(2, [('x', 0, 1), ('y', 1, 0)]), (1, 1), (1, 1))
    0
    """
    gamma, delta = dim_vector(Q, gamma), dim_vector(Q, delta)
    vertex_part = sum(g * d for g, d in zip(gamma, delta))
    arrow_part = sum(gamma[a.source] * delta[a.target] for a in Q.arrows)
    return vertex_part - arrow_part


def rep_dim(Q, gamma):
    """Dimension of Rep_gamma(Q), i.e. sum_a gamma_s(a) gamma_t(a).

    Examples
    --------
    >>> rep_dim(Quiver(2, [('x', 0, 1), ('y', 1, 0)]), (2, 1))
    4
    """
    gamma = dim_vector(Q, gamma)
    return sum(gamma[a.source] * gamma[a.target] for a in Q.arrows)

#------------------------------------------------------------------------------
# Simple representations
#------------------------------------------------------------------------------

def _restricted_arrows(Q, vertices):
    return [a for a in Q.arrows
            if a.source in vertices and a.target in vertices]


def _strongly_connected(vertices, arrows):
    if not vertices:
        return False
    succ = {v: set() for v in vertices}
    pred = {v: set() for v in vertices}
    for a in arrows:
        succ[a.source].add(a.target)
        pred[a.target].add(a.source)

    def reach(start, nbrs):
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in nbrs[v] - seen:
                seen.add(w)
                stack.append(w)
        return seen

    start = min(vertices)
    return reach(start, succ) == set(vertices) == reach(start, pred)


def _single_cycle(vertices, arrows):
    if len(arrows) != len(vertices):
        return False
    outs = Counter(a.source for a in arrows)
    ins = Counter(a.target for a in arrows)
    return all(outs[v] == 1 and ins[v] == 1 for v in vertices) and \
        _strongly_connected(vertices, arrows)


def simple_exists(Q, gamma):
    """Decide whether a simple representation of dimension `gamma` exists
    over an algebraically closed field (Le Bruyn-Procesi).

    gamma is simple-supporting when it is a coordinate vector; or its
    support is a single oriented cycle and all entries are 1; or its support
    is strongly connected, not a single cycle, and at every vertex i of the
    support gamma_i is at most both the incoming sum
    sum_{t(a)=i} gamma_s(a) and the outgoing sum sum_{s(a)=i} gamma_t(a).

    Examples
    --------
    >>> simple_exists(Quiver(1, [('x', 0, 0)]), (2,))
    False
    >>> simple_exists(Quiver(1, [('x', 0, 0), ('y', 0, 0)]), (3,))
    True
    >>> simple_exists(Quiver(2, [('x', 0, 1), ('y', 1, 0)]), (2, 1))
    False
    """
    gamma = dim_vector(Q, gamma)
    if total(gamma) == 0:
        raise InputError('simple_exists needs a nonzero dimension vector')

    supp = support(gamma)
    if len(supp) == 1 and total(gamma) == 1:
        return True

    arrows = _restricted_arrows(Q, supp)
    if not _strongly_connected(supp, arrows):
        return False
    if _single_cycle(supp, arrows):
        return all(gamma[i] == 1 for i in supp)

    for i in supp:
        incoming = sum(gamma[a.source] for a in arrows if a.target == i)
        outgoing = sum(gamma[a.target] for a in arrows if a.source == i)
        if gamma[i] > incoming or gamma[i] > outgoing:
            return False
    return True

#------------------------------------------------------------------------------
# Framing
#------------------------------------------------------------------------------

def framing_arrow_name(vertex, k):
    """Name of the k-th framing arrow into `vertex`."""
    return f'h{vertex}_{k}'


def frame(Q, gamma, m):
    """Framed quiver: one new vertex (the last index) with `m` arrows into
    every original vertex, and the extended dimension vector (gamma, 1).

    Representations of the result are pairs (M, h) with h: C^m -> M_i at
    each vertex.

    Examples
    --------
    >>> Qf, gf = frame(Quiver(1, [('x', 0, 0)]), (2,), 1)
    >>> Qf.vertex_count, Qf.arrow_names, gf
    (2, ('x', 'h0_0'), (2, 1))
    >>> frame(Quiver(1, [('x', 0, 0)]), (1,), 0)
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: framing rank must be positive, got 0
    """
    gamma = dim_vector(Q, gamma)
    if m < 1:
        raise InputError(f'framing rank must be positive, got {m}')

    infinity = Q.vertex_count
    arrows = list(Q.arrows)
    for i in range(Q.vertex_count):
        for k in range(m):
            name = framing_arrow_name(i, k)
            if Q.has_arrow(name):
                raise InputError(f'arrow name {name!r} is reserved for '
                                 'framing arrows')
            arrows.append((name, infinity, i))
    return Quiver(Q.vertex_count + 1, arrows), gamma + (1,)


if __name__ == "__main__":
    import doctest
    doctest.testmod()

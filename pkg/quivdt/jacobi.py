"""
Completed Jacobi Algebras
-------------------------

Dimension of the completed Jacobi algebra C<<Q>>/closure(dW) by
degree-truncated linear reduction, with a stabilization certificate. The
same sparse elimination engine computes commutative local Milnor algebras.

Key Features:
~~~~~~~~~~~~~
- Sparse incremental row echelon over exact rationals, pivoting on the
  least monomial under the (degree, lexicographic) order
- Surviving path basis per degree up to a truncation N
- Finiteness certificate: a degree N* where every path is a leading term
- Local Milnor numbers of commutative polynomials

Usage:
~~~~~~
::

    from quivdt.models import doubled_a2
    from quivdt.jacobi import truncated_dim_profile, finiteness_certificate

    Q, W = doubled_a2(1)
    cert = finiteness_certificate(truncated_dim_profile(Q, W, 12))
    cert.dim_total                  # 6

See Also:
~~~~~~~~~
- Nakayama's lemma: if every path of length N* lies in the ideal modulo
  longer paths, then the N*-th power of the arrow ideal lies in the closure
  of the Jacobi ideal.
"""
__version__ = "1.3"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/16 (initial version) ~ 2026/10/13 (last revision)"

__all__ = [
    'TruncatedQuotient',
    'FinitenessCertificate',
    'truncated_dim_profile',
    'finiteness_certificate',
    'milnor_basis',
    'local_milnor',
]

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

import sympy

from .errors import (
    BudgetError, ConsistencyError, TruncationError, UnsupportedError,
)
from .ncalg import Path, cyclic_derivative, qh_weights, weighted_degree
from .utils import DEFAULT_TRUNCATION

logger = logging.getLogger(__name__)

MAX_MONOMIALS = 2**20

#------------------------------------------------------------------------------
# Elimination engine
#------------------------------------------------------------------------------

class _Echelon:
    """Incremental sparse row echelon form.

    Rows are dicts monomial -> Fraction. The pivot of a row is its least
    monomial under `key`; stored rows are normalized to pivot coefficient 1.
    When `grading` is given, every stored row must be homogeneous for it.
    """

    def __init__(self, key, grading=None):
        self.key = key
        self.grading = grading
        self.pivots = {}

    def insert(self, row):
        row = {m: Fraction(c) for m, c in row.items() if c}
        while row:
            lead = min(row, key=self.key)
            pivot = self.pivots.get(lead)
            if pivot is None:
                inv = 1 / row[lead]
                row = {m: c * inv for m, c in row.items()}
                self._check_homogeneous(row)
                self.pivots[lead] = row
                return lead

            factor = row[lead]
            for m, c in pivot.items():
                value = row.get(m, 0) - factor * c
                if value:
                    row[m] = value
                else:
                    row.pop(m, None)
        return None

    def _check_homogeneous(self, row):
        if self.grading is None:
            return
        grades = {self.grading(m) for m in row}
        if len(grades) > 1:
            raise ConsistencyError(f'reduction mixed degrees {sorted(grades)}')

#------------------------------------------------------------------------------
# Path algebra
#------------------------------------------------------------------------------

@dataclass(frozen=True)
class TruncatedQuotient:
    """Degree-filtered basis of C<<Q>> modulo the truncated Jacobi ideal.

    Attributes
    ----------
    truncation: int
        The truncation degree N.
    basis_by_degree: tuple of tuple of Path
        Surviving paths for each length 0..N.
    leading_by_degree: tuple of int
        Number of leading terms (eliminated paths) per length.
    relation_rows: int
        Rank of the truncated relation span.
    """
    quiver: object
    potential: object
    truncation: int
    basis_by_degree: tuple
    leading_by_degree: tuple
    relation_rows: int

    @property
    def profile(self):
        """Number of surviving paths in each degree."""
        return [len(b) for b in self.basis_by_degree]


@dataclass(frozen=True)
class FinitenessCertificate:
    certified: bool
    n_star: int = None
    dim_total: int = None
    dim_by_vertex_pair: tuple = None

    def to_records(self):
        return [{
            'certified': self.certified,
            'n_star': self.n_star,
            'dim_total': self.dim_total,
            'dim_by_vertex_pair': None if self.dim_by_vertex_pair is None
            else [list(row) for row in self.dim_by_vertex_pair],
        }]


def _path_target(Q, path):
    return Q.arrow(path.arrows[-1]).target if path.arrows else path.source


def _paths_by_length(Q, max_length):
    """All paths of length 0..max_length, grouped by length."""
    layers = [[Path(v, ()) for v in range(Q.vertex_count)]]
    outgoing = defaultdict(list)
    for a in Q.arrows:
        outgoing[a.source].append(a.name)

    count = len(layers[0])
    for _ in range(max_length):
        layer = [Path(p.source, p.arrows + (a,))
                 for p in layers[-1]
                 for a in outgoing[_path_target(Q, p)]]
        count += len(layer)
        if count > MAX_MONOMIALS:
            raise BudgetError(f'more than {MAX_MONOMIALS} paths up to length '
                              f'{max_length}; lower the truncation degree')
        layers.append(layer)
    return layers


def truncated_dim_profile(Q, W, N_max=DEFAULT_TRUNCATION):
    """Reduce C<<Q>> by the Jacobi ideal truncated at degree `N_max`.

    The relation span is generated by u * (dW/da) * v for all arrows a and
    paths u, v with total degree at most N_max; terms longer than N_max are
    dropped. Monomials are ordered by length, then lexicographically in the
    arrow order, and lower monomials lead.

    Parameters
    ----------
    Q: Quiver
        The quiver.
    W: Potential
        Potential with all words of length >= 3.
    N_max: int, optional
        Truncation degree. Defaults to DEFAULT_TRUNCATION.

    Returns
    -------
    TruncatedQuotient

    Examples
    --------
    >>> from quivdt.models import one_loop
    >>> T = truncated_dim_profile(*one_loop(2), N_max=10)
    >>> T.profile
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]
    """
    if W.words and W.min_length() < 3:
        raise UnsupportedError('potential words must have length >= 3, '
                               f'found length {W.min_length()}')
    if N_max < W.max_length():
        raise TruncationError(f'truncation {N_max} is below the longest '
                              f'word length {W.max_length()}')

    index = {name: i for i, name in enumerate(Q.arrow_names)}

    def key(path):
        return (len(path.arrows), tuple(index[a] for a in path.arrows),
                path.source)

    grading = None
    if not W.is_zero():
        qh = qh_weights(W)
        if qh is not None:
            weights = qh[0]
            grading = lambda path: weighted_degree(path.arrows, weights)

    layers = _paths_by_length(Q, N_max)
    ending_at = defaultdict(list)
    starting_at = defaultdict(list)
    for layer in layers:
        for p in layer:
            ending_at[_path_target(Q, p)].append(p)
            starting_at[p.source].append(p)

    echelon = _Echelon(key, grading)
    for a in Q.arrows:
        derivative = cyclic_derivative(W, a.name)
        if not len(derivative):
            continue
        low = min(len(p.arrows) for p in derivative.paths())
        # dW/da runs from t(a) to s(a)
        for u in ending_at[a.target]:
            room = N_max - low - len(u.arrows)
            if room < 0:
                continue
            for v in starting_at[a.source]:
                if len(v.arrows) > room:
                    continue
                row = {}
                for p, c in derivative.items():
                    arrows = u.arrows + p.arrows + v.arrows
                    if len(arrows) <= N_max:
                        row[Path(u.source, arrows)] = c
                echelon.insert(row)

    basis, leading = [], []
    for layer in layers:
        basis.append(tuple(p for p in layer if p not in echelon.pivots))
        leading.append(len(layer) - len(basis[-1]))

    logger.debug(f'Jacobi reduction at N={N_max}: {len(echelon.pivots)} '
                 f'pivots, profile {[len(b) for b in basis]}')
    return TruncatedQuotient(Q, W, N_max, tuple(basis), tuple(leading),
                             len(echelon.pivots))


def finiteness_certificate(T):
    """Certify finite dimension of the completed Jacobi algebra.

    Certified iff some length N* <= N has no surviving path, i.e. every path
    of length N* is a leading term of the relation span modulo longer paths.
    Then dim A is the number of survivors of length < N*.

    Examples
    --------
    >>> from quivdt.models import doubled_a2
    >>> Q, W = doubled_a2(2)
    >>> finiteness_certificate(truncated_dim_profile(Q, W, 12))
    FinitenessCertificate(certified=True, n_star=5, dim_total=10, \
dim_by_vertex_pair=((3, 2), (2, 3)))
    """
    Q = T.quiver
    for n_star, layer in enumerate(T.basis_by_degree):
        if n_star > 0 and not layer:
            break
    else:
        return FinitenessCertificate(False)

    pairs = [[0] * Q.vertex_count for _ in range(Q.vertex_count)]
    for layer in T.basis_by_degree[:n_star]:
        for p in layer:
            pairs[p.source][_path_target(Q, p)] += 1
    dim_total = sum(map(len, T.basis_by_degree[:n_star]))
    return FinitenessCertificate(True, n_star, dim_total,
                                 tuple(tuple(row) for row in pairs))

#------------------------------------------------------------------------------
# Commutative local algebras
#------------------------------------------------------------------------------

def _as_poly(f):
    if isinstance(f, sympy.Poly):
        return f
    f = sympy.sympify(f)
    gens = sorted(f.free_symbols, key=lambda x: x.name)
    return sympy.Poly(f, *gens, domain='QQ')


def milnor_basis(f, N_max=DEFAULT_TRUNCATION):
    """Monomial basis of C[[x]]/(df/dx_i) by truncated reduction.

    Returns
    -------
    tuple of (bool, list of tuple)
        (certified, exponent tuples of the survivors below N*); the list is
        empty when uncertified.
    """
    f = _as_poly(f)
    if any(sum(m) < 2 for m in f.monoms()):
        raise UnsupportedError('f must have no terms of degree < 2')

    n = len(f.gens)
    layers = [sorted(
        tuple(combo.count(i) for i in range(n))
        for combo in itertools.combinations_with_replacement(range(n), d))
        for d in range(N_max + 1)]

    def key(m):
        return (sum(m), m)

    echelon = _Echelon(key)
    for x in f.gens:
        g = f.diff(x)
        if g.is_zero:
            continue
        terms = [(m, Fraction(int(c.p), int(c.q))) for m, c in g.terms()]
        low = min(sum(m) for m, _ in terms)
        for d in range(N_max - low + 1):
            for shift in layers[d]:
                row = {}
                for m, c in terms:
                    mono = tuple(a + b for a, b in zip(m, shift))
                    if sum(mono) <= N_max:
                        row[mono] = c
                echelon.insert(row)

    for n_star in range(1, N_max + 1):
        if all(m in echelon.pivots for m in layers[n_star]):
            basis = [m for layer in layers[:n_star] for m in layer
                     if m not in echelon.pivots]
            return True, basis
    return False, []


def local_milnor(f, N_max=DEFAULT_TRUNCATION):
    """Dimension of the local Jacobian algebra C[[x]]/(df/dx_i).

    Returns
    -------
    int or None
        The dimension, or None when the reduction does not certify up to
        N_max (e.g. a non-isolated singularity).

    Examples
    --------
    >>> from sympy.abc import x, y
    >>> local_milnor(x**3 + y**4)
    6
    >>> local_milnor(x**3 + x**4)
    2
    >>> local_milnor(x**2 * y**2, N_max=10) is None
    True
    """
    certified, basis = milnor_basis(f, N_max)
    return len(basis) if certified else None


if __name__ == "__main__":
    import doctest
    doctest.testmod()

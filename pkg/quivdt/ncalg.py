"""
Noncommutative Calculus on Path Algebras
----------------------------------------

Potentials as cyclic words with exact rational coefficients, cyclic
derivatives, trace evaluation on representations, quasi-homogeneity and the
abelianization of one-dimensional sectors.

Key Features:
~~~~~~~~~~~~~
- `Potential`: canonical least rotation of each closed word
- `NcPolynomial`: linear combinations of composable paths
- Trace of a potential over the rationals or a finite field
- Quasi-homogeneous weights (minimal degree) and the scaling modulus
- Decomposition into powers of cycles on disjoint arrow sets

Usage:
~~~~~~
::

    from quivdt.quiver import Quiver
    from quivdt.ncalg import Potential, cyclic_derivative, qh_weights

    Q = Quiver(1, [('x', 0, 0)])
    W = Potential(Q, [(1, ['x', 'x', 'x'])])
    cyclic_derivative(W, 'x')       # 3*xx
    qh_weights(W)                   # ({'x': 1}, 3)
"""
__version__ = "1.5"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/15 (initial version) ~ 2026/10/16 (last revision)"

__all__ = [
    'Path',
    'to_fraction',
    'NcPolynomial',
    'Potential',
    'cyclic_derivative',
    'trace_evaluate',
    'weighted_degree',
    'qh_weights',
    'scaling_modulus',
    'abelianize',
    'CyclePower',
    'cycle_powers',
]

import math
from collections import Counter, namedtuple
from fractions import Fraction
from functools import reduce

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.solvers.simplex import lpmin, InfeasibleLPError, UnboundedLPError

from .errors import InputError, DimensionError, UnsupportedError
from .quiver import dim_vector, support

# A path is its start vertex plus its arrows in composition order; the empty
# arrow tuple is the idempotent at `source`.
Path = namedtuple('Path', ['source', 'arrows'])


def to_fraction(value):
    """Exact rational from an int, Fraction or 'p/q' string.

    Examples
    --------
    >>> to_fraction('-3/4')
    Fraction(-3, 4)
    >>> to_fraction(2)
    Fraction(2, 1)
    >>> to_fraction('1.5e')
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: malformed rational '1.5e'
    """
    if isinstance(value, float):
        raise InputError(f'floating point coefficient {value!r} is not exact')
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InputError(f'malformed rational {value!r}')


def _check_composable(Q, arrows):
    for a, b in zip(arrows, arrows[1:]):
        if Q.arrow(a).target != Q.arrow(b).source:
            raise InputError(f"word {' '.join(arrows)} is not composable "
                             f"at '{a} {b}'")


def _order_key(Q, arrows):
    return tuple(Q.arrow_index(a) for a in arrows)

#------------------------------------------------------------------------------
# Polynomials and potentials
#------------------------------------------------------------------------------

class NcPolynomial:
    """Finite linear combination of composable paths.

    Parameters
    ----------
    Q: Quiver
        The underlying quiver.
    terms: dict of Path to Fraction, optional
        Coefficients; zero coefficients are dropped.
    """

    def __init__(self, Q, terms=None):
        self.quiver = Q
        self._terms = {}
        for path, coeff in (terms or {}).items():
            path = Path(int(path.source), tuple(path.arrows))
            if path.arrows:
                _check_composable(Q, path.arrows)
                if Q.arrow(path.arrows[0]).source != path.source:
                    raise InputError(f'path {path} does not start at its '
                                     'source vertex')
            coeff = to_fraction(coeff)
            if coeff:
                self._terms[path] = self._terms.get(path, 0) + coeff
        self._terms = {p: c for p, c in self._terms.items() if c}

    def items(self):
        return self._terms.items()

    def paths(self):
        return self._terms.keys()

    def __getitem__(self, path):
        return self._terms.get(path, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        terms = dict(self._terms)
        for p, c in other.items():
            terms[p] = terms.get(p, 0) + c
        return NcPolynomial(self.quiver, terms)

    def __eq__(self, other):
        if not isinstance(other, NcPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return '0'
        keys = sorted(self._terms, key=lambda p: (len(p.arrows),
                      _order_key(self.quiver, p.arrows), p.source))
        return ' + '.join(
            f"{self._terms[p]}*{''.join(p.arrows) or f'e{p.source}'}"
            for p in keys)


class Potential:
    """Linear combination of cyclic words, stored by canonical rotation.

    The canonical representative of a closed word is its least rotation
    under the arrow order of the quiver.

    Parameters
    ----------
    Q: Quiver
        The underlying quiver.
    terms: iterable of (coefficient, word)
        A word is a sequence of arrow names forming a closed path.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(2, [('x', 0, 1), ('y', 1, 0)])
    >>> W = Potential(Q, [(1, ['y', 'x']), ('1/2', ['x', 'y'])])
    >>> W
    3/2*xy
    >>> Potential(Q, [(1, ['x', 'x'])])
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: word x x is not composable at 'x x'
    """

    def __init__(self, Q, terms=()):
        self.quiver = Q
        words = {}
        for coeff, word in terms:
            word = self._canonical(Q, tuple(word))
            words[word] = words.get(word, 0) + to_fraction(coeff)
        self._words = {w: c for w, c in words.items() if c}

    @staticmethod
    def _canonical(Q, word):
        if not word:
            raise InputError('empty word in potential')
        for a in word:
            Q.arrow(a)
        _check_composable(Q, word)
        if Q.arrow(word[-1]).target != Q.arrow(word[0]).source:
            raise InputError(f"word {' '.join(word)} is not closed")
        rotations = [word[i:] + word[:i] for i in range(len(word))]
        return min(rotations, key=lambda w: _order_key(Q, w))

    def items(self):
        return self._words.items()

    @property
    def words(self):
        return tuple(self._words)

    def is_zero(self):
        return not self._words

    def max_length(self):
        return max((len(w) for w in self._words), default=0)

    def min_length(self):
        return min((len(w) for w in self._words), default=0)

    def arrows_used(self):
        """Arrow names occurring in W, in arrow order."""
        used = {a for w in self._words for a in w}
        return [a for a in self.quiver.arrow_names if a in used]

    def __add__(self, other):
        return Potential(self.quiver,
                         list((c, w) for w, c in self.items()) +
                         list((c, w) for w, c in other.items()))

    def __eq__(self, other):
        if not isinstance(other, Potential):
            return NotImplemented
        return self.quiver == other.quiver and self._words == other._words

    def __repr__(self):
        if not self._words:
            return '0'
        keys = sorted(self._words,
                      key=lambda w: (len(w), _order_key(self.quiver, w)))
        return ' + '.join(f"{self._words[w]}*{''.join(w)}" for w in keys)

#------------------------------------------------------------------------------
# Cyclic derivative
#------------------------------------------------------------------------------

def cyclic_derivative(W, a):
    """Cyclic derivative dW/da = sum over occurrences a_i = a of
    a_{i+1}...a_n a_1...a_{i-1}.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    >>> cyclic_derivative(Potential(Q, [(1, 'xyxy')]), 'x')
    2*yxy
    >>> cyclic_derivative(Potential(Q, [(1, 'xyxy')]), 'z')
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: unknown arrow 'z'
    """
    Q = W.quiver
    start = Q.arrow(a).target
    terms = Counter()
    for word, coeff in W.items():
        for i, b in enumerate(word):
            if b == a:
                terms[Path(start, word[i + 1:] + word[:i])] += coeff
    return NcPolynomial(Q, dict(terms))

#------------------------------------------------------------------------------
# Trace evaluation
#------------------------------------------------------------------------------

def _vertex_dims(Q, rho, batched=False):
    dims = [None] * Q.vertex_count
    for a in Q.arrows:
        if a.name not in rho:
            raise DimensionError(f'no matrix for arrow {a.name!r}')
        shape = np.shape(rho[a.name])
        if len(shape) != 2 + batched:
            raise DimensionError(f'matrix of {a.name!r} has shape {shape}')
        shape = shape[-2:]
        for vertex, n in ((a.target, shape[0]), (a.source, shape[1])):
            if dims[vertex] is None:
                dims[vertex] = n
            elif dims[vertex] != n:
                raise DimensionError(f'matrix of {a.name!r} has shape {shape}'
                                     f' but vertex {vertex} has dimension '
                                     f'{dims[vertex]}')
    return [0 if n is None else n for n in dims]


def trace_evaluate(W, rho, field=None, batched=False):
    """Evaluate Tr W at a representation.

    Parameters
    ----------
    W: Potential
        The potential.
    rho: dict of str to matrix
        Matrix of each arrow a, of shape (gamma_t(a), gamma_s(a)).
    field: FiniteField, optional
        Evaluate over this finite field (matrices hold element codes).
        Exact rationals are used when omitted.
    batched: bool, optional
        Over a finite field, every matrix carries a leading batch axis and
        one trace code is returned per batch entry.

    Returns
    -------
    Fraction, int or numpy.ndarray
        The trace, or the element code(s) of the trace over `field`.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    >>> W = Potential(Q, [(1, 'xyxy')])
    >>> trace_evaluate(W, {'x': [[0, 1], [0, 0]], 'y': [[0, 0], [1, 0]]})
    Fraction(1, 1)
    """
    Q = W.quiver
    if batched and field is None:
        raise InputError('batched evaluation needs a finite field')
    dims = _vertex_dims(Q, rho, batched)

    if field is None:
        to_frac = np.vectorize(Fraction, otypes=[object])
        mats = {a: to_frac(np.asarray(m, dtype=object)).reshape(np.shape(m))
                for a, m in rho.items()}
        value = Fraction(0)
        for word, coeff in W.items():
            n = dims[Q.arrow(word[0]).source]
            prod = np.identity(n, dtype=object)
            for a in word:
                prod = mats[a] @ prod
            value += coeff * sum(np.diagonal(prod).tolist(), Fraction(0))
        return value

    mats = {a: np.asarray(m, dtype=np.int64) for a, m in rho.items()}
    value = 0
    for word, coeff in W.items():
        n = dims[Q.arrow(word[0]).source]
        prod = field.identity(n)
        for a in word:
            prod = field.matmul(mats[a], prod)
        term = field.mul(field.from_fraction(coeff), field.trace(prod))
        value = field.add(value, term)
    return value if batched else int(value)

#------------------------------------------------------------------------------
# Quasi-homogeneity
#------------------------------------------------------------------------------

def weighted_degree(word, weights):
    """Total weight of a word.

    >>> weighted_degree(('x', 'y', 'x'), {'x': 2, 'y': 1})
    5
    """
    return sum(weights[a] for a in word)


def _count_vectors(W, names):
    return [[word.count(a) for a in names] for word in W.words]


def _primitive(values):
    denom = reduce(math.lcm, (sympy.Rational(v).q for v in values), 1)
    ints = [int(sympy.Rational(v) * denom) for v in values]
    g = reduce(math.gcd, ints, 0)
    return [v // g for v in ints] if g else ints


def qh_weights(W):
    """Quasi-homogeneous weights of minimal degree.

    Strictly positive arrow weights are tried first, then nonnegative ones;
    in both cases the linear program minimizing the degree is solved
    exactly and its solution scaled to a primitive integer vector. Arrows
    absent from W get weight 1.

    Returns
    -------
    tuple of (dict, int) or None
        (weights by arrow name, degree d > 0), or None if W is not
        quasi-homogeneous.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(1, [('x', 0, 0)])
    >>> qh_weights(Potential(Q, [(1, 'xxx')]))
    ({'x': 1}, 3)
    >>> qh_weights(Potential(Q, [(1, 'xxx'), (1, 'xxxx')])) is None
    True
    >>> Q2 = Quiver(2, [('x', 0, 1), ('y', 1, 0)])
    >>> qh_weights(Potential(Q2, [(1, 'xyxy')]))
    ({'x': 1, 'y': 1}, 4)
    """
    if W.is_zero():
        raise InputError('qh_weights needs a nonzero potential')

    names = W.arrows_used()
    counts = _count_vectors(W, names)
    syms = sympy.symbols(f'w0:{len(names)}')
    degrees = [sum(c * w for c, w in zip(row, syms)) for row in counts]
    balance = [sympy.Eq(d - degrees[0], 0) for d in degrees[1:]
               if sympy.expand(d - degrees[0]) != 0]

    for lower in (1, 0):
        constraints = balance + [w >= lower for w in syms]
        if lower == 0:
            constraints.append(degrees[0] >= 1)
        try:
            _, solution = lpmin(degrees[0], constraints)
        except (InfeasibleLPError, UnboundedLPError):
            continue
        vector = _primitive([solution.get(w, 0) for w in syms])
        weights = {a: 1 for a in W.quiver.arrow_names}
        weights.update(zip(names, vector))
        degree = weighted_degree(W.words[0], weights)
        if degree > 0:
            return weights, degree
    return None


def scaling_modulus(W):
    """Positive generator of the degrees of all integer weightings (of any
    sign) under which W is homogeneous.

    Every nonzero fiber count of Tr W is invariant under rescaling the value
    by M-th powers. W = 0 has modulus 2 by convention. Returns None when no
    weighting makes W homogeneous of nonzero degree.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(2, [('x', 0, 1), ('y', 1, 0)])
    >>> scaling_modulus(Potential(Q, [(1, 'xyxyxy')]))
    3
    >>> Q1 = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    >>> scaling_modulus(Potential(Q1, [(1, 'xxx'), (1, 'yyy')]))
    3
    >>> scaling_modulus(Potential(Q1, [(1, 'xxx'), (1, 'xxxx')])) is None
    True
    """
    if W.is_zero():
        return 2

    C = sympy.Matrix(_count_vectors(W, W.arrows_used()))
    snf, s, _ = smith_normal_decomp(C, domain=sympy.ZZ)
    u = s * sympy.ones(C.rows, 1)

    modulus = 1
    for i in range(C.rows):
        pivot = int(snf[i, i]) if i < min(C.shape) else 0
        ui = int(u[i])
        if pivot == 0:
            if ui != 0:
                return None
            continue
        modulus = math.lcm(modulus, abs(pivot) // math.gcd(pivot, ui))
    return modulus

#------------------------------------------------------------------------------
# Abelianization
#------------------------------------------------------------------------------

def abelianize(W, gamma):
    """Restriction of Tr W to a sector with all gamma_i <= 1.

    Each cyclic word inside supp(gamma) becomes a commutative monomial in
    one variable per arrow; words leaving the support vanish there.

    Returns
    -------
    sympy.Poly
        Polynomial over QQ in the arrow symbols, in arrow order.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    >>> abelianize(Potential(Q, [(1, 'xyxy')]), (1,)).as_expr()
    x**2*y**2
    """
    Q = W.quiver
    gamma = dim_vector(Q, gamma)
    if any(g > 1 for g in gamma):
        raise UnsupportedError(f'abelianize needs gamma_i <= 1, got {gamma}')

    supp = support(gamma)
    names = [a.name for a in Q.arrows
             if a.source in supp and a.target in supp]
    if not names:
        raise UnsupportedError(f'sector {gamma} carries no arrows')

    syms = sympy.symbols(names)
    table = dict(zip(names, syms))
    expr = sympy.Integer(0)
    for word, coeff in W.items():
        if all(a in table for a in word):
            expr += sympy.Rational(coeff.numerator, coeff.denominator) * \
                sympy.Mul(*(table[a] for a in word))
    return sympy.Poly(expr, *syms, domain='QQ')

#------------------------------------------------------------------------------
# Cycle powers
#------------------------------------------------------------------------------

# A term coeff * cycle^exponent of a potential; `cycle` is a primitive closed
# word through pairwise distinct arrows.
CyclePower = namedtuple('CyclePower', ['coeff', 'cycle', 'exponent'])


def _primitive_root(word):
    n = len(word)
    for period in range(1, n + 1):
        if n % period == 0 and word[:period] * (n // period) == word:
            return word[:period], n // period


def cycle_powers(W):
    """Write W as a sum of powers of cycles on pairwise disjoint arrow sets.

    Returns
    -------
    list of CyclePower or None
        One term per word of W, or None when some cycle repeats an arrow or
        two words share one.

    Examples
    --------
    >>> from quivdt.quiver import Quiver
    >>> Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    >>> cycle_powers(Potential(Q, [(1, 'xyxy')]))
    [CyclePower(coeff=Fraction(1, 1), cycle=('x', 'y'), exponent=2)]
    >>> [t.exponent for t in cycle_powers(Potential(Q, [(1, 'xxx'), (2, 'yy')]))]
    [3, 2]
    >>> cycle_powers(Potential(Q, [(1, 'xxx'), (1, 'xy')])) is None
    True
    """
    terms, used = [], set()
    for word, coeff in W.items():
        cycle, exponent = _primitive_root(word)
        arrows = set(cycle)
        if len(arrows) != len(cycle) or arrows & used:
            return None
        used |= arrows
        terms.append(CyclePower(coeff, cycle, exponent))
    return terms


if __name__ == "__main__":
    import doctest
    doctest.testmod()

"""
Hodge Spectrum and Refined GV Polynomials
-----------------------------------------

Spectral numbers of quasi-homogeneous isolated singularities in at most two
variables, and the specialization ladder from the bivariate refined GV
polynomial down to its weight polynomial and Euler characteristic.

Key Features:
~~~~~~~~~~~~~
- Spectrum alpha = sum_i (l_i + 1) w_i / d over a monomial basis x^l of the
  Jacobian quotient (Brieskorn enumeration or truncated reduction)
- Bivariate polynomial sum_alpha z1^(alpha - n/2) z2^(n - alpha - n/2)
- Specializations z1 = z2 = q^(1/2) (wtm) and z1 = z2 = 1 (chi)

Usage:
~~~~~~
::

    from quivdt.spectrum import steenbrink_spectrum, refined_gv_poly

    S = steenbrink_spectrum((1,), 3)      # x^3
    S.to_text()                           # '1/3, 2/3'
    str(refined_gv_poly(S, 1))
"""
__version__ = "1.1"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/20 (initial version) ~ 2026/10/10 (last revision)"

__all__ = [
    'SpectrumTable',
    'BivariatePoly',
    'steenbrink_spectrum',
    'sector_spectrum',
    'refined_gv_poly',
    'width_d_poly',
    'specialize',
]

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, UnsupportedError
from .jacobi import milnor_basis
from .ncalg import abelianize, qh_weights
from .plethys import LaurentPoly
from .utils import DEFAULT_TRUNCATION, SpecializeMode, parse_enum


@dataclass(frozen=True)
class SpectrumTable:
    """Spectral numbers (sorted multiset in (0, n)) and the Milnor number."""
    spectral_numbers: tuple
    mu: int
    n_vars: int

    def is_symmetric(self):
        reflected = sorted(self.n_vars - a for a in self.spectral_numbers)
        return reflected == list(self.spectral_numbers)

    def to_records(self):
        return [{'alpha': str(a)} for a in self.spectral_numbers]

    def to_text(self):
        return ', '.join(str(a) for a in self.spectral_numbers)


class BivariatePoly:
    """Integer combination of z1^a z2^b with rational a, b and a + b integral.

    Examples
    --------
    >>> P = BivariatePoly({(Fraction(-1, 6), Fraction(1, 6)): 1})
    >>> str(P)
    'z1^(-1/6)*z2^(1/6)'
    >>> BivariatePoly({(Fraction(1, 3), Fraction(1, 3)): 1})
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: exponent sum 2/3 is not an integer
    """

    def __init__(self, terms=None):
        self._terms = {}
        for (a, b), c in (terms or {}).items():
            a, b = Fraction(a), Fraction(b)
            if (a + b).denominator != 1:
                raise InputError(f'exponent sum {a + b} is not an integer')
            if c:
                self._terms[(a, b)] = self._terms.get((a, b), 0) + int(c)
        self._terms = {k: c for k, c in self._terms.items() if c}

    def terms(self):
        return sorted(self._terms.items())

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def swap(self):
        """Exchange z1 and z2."""
        return BivariatePoly({(b, a): c for (a, b), c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return '0'

        def factor(var, e):
            return f'{var}^({e})'

        parts = []
        for (a, b), c in self.terms():
            mono = f"{factor('z1', a)}*{factor('z2', b)}"
            parts.append(mono if c == 1 else f'{c}*{mono}')
        return ' + '.join(parts)

    def __repr__(self):
        return f"BivariatePoly('{self}')"

#------------------------------------------------------------------------------
# Spectrum
#------------------------------------------------------------------------------

def _is_brieskorn(poly, weights, degree):
    """True if poly is sum c_i x_i^(d/w_i) with every c_i nonzero."""
    n = len(weights)
    pure = {tuple(degree // w if j == i else 0 for j in range(n))
            for i, w in enumerate(weights)}
    return set(poly.monoms()) == pure


def steenbrink_spectrum(weights, degree, poly=None,
                        N_max=DEFAULT_TRUNCATION):
    """Spectrum of a quasi-homogeneous isolated singularity.

    Parameters
    ----------
    weights: sequence of int
        Positive variable weights, at most two.
    degree: int
        Weighted degree d, larger than every weight.
    poly: sympy.Poly, optional
        The polynomial itself. Needed unless w_i divides d for every i, in
        which case the Brieskorn form sum x_i^(d/w_i) is assumed.
    N_max: int, optional
        Truncation for the reduction of non-Brieskorn polynomials.

    Returns
    -------
    SpectrumTable

    Examples
    --------
    >>> steenbrink_spectrum((1,), 3).to_text()
    '1/3, 2/3'
    >>> steenbrink_spectrum((1, 1), 3).to_text()
    '2/3, 1, 1, 4/3'
    >>> steenbrink_spectrum((1,), 2).to_text()
    '1/2'
    >>> steenbrink_spectrum((1,), 1)
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: degree 1 must exceed every weight (1,)
    """
    weights = tuple(int(w) for w in weights)
    n = len(weights)
    if not 1 <= n <= 2:
        raise UnsupportedError(f'spectra are computed in 1 or 2 variables, '
                               f'got {n}')
    if any(w <= 0 for w in weights):
        raise InputError(f'weights {weights} must be positive')
    if degree <= max(weights):
        raise InputError(f'degree {degree} must exceed every weight '
                         f'{weights}')

    if all(degree % w == 0 for w in weights) and \
            (poly is None or _is_brieskorn(poly, weights, degree)):
        ranges = [range(degree // w - 1) for w in weights]
        monomials = list(itertools.product(*ranges))
        mu = math.prod(degree // w - 1 for w in weights)
        if len(monomials) != mu:
            raise InputError(f'Milnor number mismatch: {len(monomials)} '
                             f'monomials, expected {mu}')
    else:
        if poly is None:
            raise UnsupportedError(f'weights {weights} with degree {degree} '
                                   'need the polynomial itself')
        certified, monomials = milnor_basis(poly, N_max)
        if not certified:
            raise UnsupportedError(f'{poly.as_expr()} is not an isolated '
                                   'singularity')
        mu = len(monomials)

    alphas = sorted(sum(Fraction((l + 1) * w, degree)
                        for l, w in zip(m, weights)) for m in monomials)
    return SpectrumTable(tuple(alphas), mu, n)


def sector_spectrum(W, gamma, N_max=DEFAULT_TRUNCATION):
    """Spectrum of Tr W restricted to a sector with all gamma_i <= 1.

    Examples
    --------
    >>> from quivdt.models import one_loop
    >>> Q, W = one_loop(3)
    >>> sector_spectrum(W, (1,)).to_text()
    '1/4, 1/2, 3/4'
    """
    f = abelianize(W, gamma)
    qh = qh_weights(W)
    if qh is None:
        raise UnsupportedError('the potential is not quasi-homogeneous')
    weights, degree = qh
    return steenbrink_spectrum([weights[str(x)] for x in f.gens], degree,
                               poly=f, N_max=N_max)

#------------------------------------------------------------------------------
# Refined GV polynomials
#------------------------------------------------------------------------------

def refined_gv_poly(S, n_vars=None):
    """sum over alpha in S of z1^(alpha - n/2) z2^(n - alpha - n/2).

    Examples
    --------
    >>> str(refined_gv_poly(steenbrink_spectrum((1,), 3)))
    'z1^(-1/6)*z2^(1/6) + z1^(1/6)*z2^(-1/6)'
    """
    n = S.n_vars if n_vars is None else n_vars
    half = Fraction(n, 2)
    terms = {}
    for alpha in S.spectral_numbers:
        key = (alpha - half, n - alpha - half)
        terms[key] = terms.get(key, 0) + 1
    return BivariatePoly(terms)


def width_d_poly(d):
    """(z1 z2)^(-1/2) sum_{i=1}^d z1^(i/(d+1)) z2^((d+1-i)/(d+1)).

    >>> width_d_poly(2) == refined_gv_poly(steenbrink_spectrum((1,), 3))
    True
    """
    half = Fraction(1, 2)
    return BivariatePoly({(Fraction(i, d + 1) - half,
                           Fraction(d + 1 - i, d + 1) - half): 1
                          for i in range(1, d + 1)})


def specialize(P, mode=SpecializeMode.WTM):
    """Specialize a bivariate polynomial.

    Parameters
    ----------
    P: BivariatePoly
        The polynomial.
    mode: SpecializeMode or str
        WTM substitutes z1 = z2 = q^(1/2) and returns a Laurent polynomial
        in q^(1/2); CHI substitutes 1 and returns an integer.

    Examples
    --------
    >>> str(specialize(width_d_poly(3), 'wtm'))
    '3'
    >>> specialize(width_d_poly(3), 'chi')
    3
    >>> specialize(BivariatePoly(), 'chi')
    0
    """
    mode = parse_enum(SpecializeMode, mode)
    if mode == SpecializeMode.CHI:
        return sum(c for _, c in P.terms())

    terms = {}
    for (a, b), c in P.terms():
        e = int(a + b)
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms, var='q^(1/2)')


if __name__ == "__main__":
    import doctest
    doctest.testmod()

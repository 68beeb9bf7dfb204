"""
Lambda-Ring Calculus on Graded Series
-------------------------------------

Laurent polynomials in the line element s, series graded by dimension
vector, Adams operations, plethystic Exp/Log and Laurent reconstruction
from values sampled at several fields.

Key Features:
~~~~~~~~~~~~~
- `LaurentPoly`: exact Laurent polynomial with integer or rational
  coefficients
- `GradedSeries` with two carriers: symbolic (Laurent polynomials in s) and
  numeric (exact rationals at one field size, with a resampling callback
  that supplies the same series at q^n)
- Adams operations psi_n: t^gamma -> t^(n gamma), s -> s^n
- Exp(f) = exp(sum psi_n(f)/n) and Log(g) = sum mu(n)/n psi_n(log g)
- Vandermonde reconstruction of a Laurent polynomial from its values

Usage:
~~~~~~
::

    from quivdt.plethys import LaurentPoly, GradedSeries, exp_series

    s = LaurentPoly.monomial(1, 1)
    f = GradedSeries({(1,): s}, truncation=3, rank=1)
    exp_series(f)[(3,)]             # 1*s^3
"""
__version__ = "1.5"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/17 (initial version) ~ 2026/10/14 (last revision)"

__all__ = [
    'LaurentPoly',
    'GradedSeries',
    'adams',
    'exp_series',
    'log_series',
    'interpolate_laurent',
]

import math
from fractions import Fraction

import sympy
from sympy.functions.combinatorial.numbers import mobius

from .errors import (
    InputError, InterpolationError, ConventionError, ResampleError,
)
from .utils import Carrier

#------------------------------------------------------------------------------
# Laurent polynomials
#------------------------------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial sum_e c_e var^e with exact coefficients.

    Parameters
    ----------
    terms: dict of int to int or Fraction, optional
        Coefficient of each exponent; zeros are dropped.
    var: str, optional
        Name used when printing. Defaults to 's'.

    Examples
    --------
    >>> p = LaurentPoly({-1: 1, 1: 1})
    >>> str(p * p)
    '1*s^-2 + 2 + 1*s^2'
    >>> p.is_palindromic(), p.evaluate(2), p.at_one()
    (True, Fraction(5, 2), 2)
    """

    def __init__(self, terms=None, var='s'):
        self.var = var
        self._terms = {}
        for e, c in (terms or {}).items():
            if c:
                self._terms[int(e)] = c

    @classmethod
    def constant(cls, c, var='s'):
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, c, e, var='s'):
        return cls({e: c}, var)

    @classmethod
    def coerce(cls, value, var='s'):
        if isinstance(value, LaurentPoly):
            return value
        return cls.constant(value, var)

    def terms(self):
        """Sorted (exponent, coefficient) pairs."""
        return sorted(self._terms.items())

    def coefficient(self, e):
        return self._terms.get(e, 0)

    def exponents(self):
        return sorted(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = LaurentPoly.coerce(other, self.var)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other, self.var))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other, self.var) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self._terms.items()},
                               self.var)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(terms, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = LaurentPoly.constant(1, self.var)
        for _ in range(n):
            result = result * self
        return result

    def adams(self, n):
        """Substitute s -> s^n."""
        return LaurentPoly({e * n: c for e, c in self._terms.items()},
                           self.var)

    def evaluate(self, x):
        """Exact value at a nonzero rational x."""
        x = Fraction(x)
        return sum((c * x**e for e, c in self._terms.items()), Fraction(0))

    def at_one(self):
        return sum(self._terms.values(), 0)

    def is_palindromic(self):
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def is_nonnegative(self):
        return all(c >= 0 for c in self._terms.values())

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self._terms.values())

    def to_sympy(self, symbol=None):
        symbol = symbol or sympy.Symbol(self.var)
        return sum((sympy.Rational(Fraction(c).numerator,
                                   Fraction(c).denominator) * symbol**e
                    for e, c in self._terms.items()), sympy.Integer(0))

    @classmethod
    def from_sympy(cls, expr, symbol, var=None):
        """Laurent polynomial from a sympy expression in `symbol`.

        >>> from sympy.abc import s
        >>> str(LaurentPoly.from_sympy((s + 1/s)**2, s))
        '1*s^-2 + 2 + 1*s^2'
        """
        terms = {}
        for term in sympy.Add.make_args(sympy.expand(expr)):
            coeff, e = term.as_coeff_exponent(symbol)
            if coeff.has(symbol) or not coeff.is_Rational or \
               not e.is_Integer:
                raise InputError(f'{expr} is not a Laurent polynomial '
                                 f'in {symbol}')
            f = Fraction(int(coeff.p), int(coeff.q))
            terms[int(e)] = terms.get(int(e), 0) + \
                (f.numerator if f.denominator == 1 else f)
        return cls(terms, var or str(symbol))

    def __str__(self):
        if not self._terms:
            return '0'
        return ' + '.join(str(c) if e == 0 else f'{c}*{self.var}^{e}'
                          for e, c in self.terms())

    def __repr__(self):
        return f"LaurentPoly('{self}')"

#------------------------------------------------------------------------------
# Graded series
#------------------------------------------------------------------------------

def _is_zero(c):
    return not c


class GradedSeries:
    """Truncated series sum_gamma f_gamma t^gamma over dimension vectors.

    Parameters
    ----------
    coeffs: dict of tuple to coefficient
        Coefficients by dimension vector; terms with |gamma| > truncation
        and zero terms are dropped.
    truncation: int
        Total-degree bound G.
    rank: int
        Length of the dimension vectors.
    carrier: Carrier, optional
        SYMBOLIC (LaurentPoly coefficients) or NUMERIC (Fractions at the
        field size `base_q`). Defaults to SYMBOLIC.
    base_q: int, optional
        Field size of a numeric series.
    resample: callable, optional
        resample(n) returns this numeric series at field size base_q**n,
        truncated at truncation // n. Adams operations need it.
    """

    def __init__(self, coeffs, truncation, rank, carrier=Carrier.SYMBOLIC,
                 base_q=None, resample=None):
        self.truncation = int(truncation)
        self.rank = int(rank)
        self.carrier = carrier
        self.base_q = base_q
        self.resample = resample
        self.coeffs = {}
        for gamma, c in coeffs.items():
            gamma = tuple(int(g) for g in gamma)
            if len(gamma) != self.rank:
                raise InputError(f'dimension vector {gamma} does not have '
                                 f'length {self.rank}')
            if sum(gamma) <= self.truncation and not _is_zero(c):
                self.coeffs[gamma] = c

    def _like(self, coeffs, truncation=None, resample=None):
        return GradedSeries(coeffs,
                            self.truncation if truncation is None
                            else truncation,
                            self.rank, self.carrier, self.base_q, resample)

    @property
    def zero_vector(self):
        return (0,) * self.rank

    def zero(self):
        if self.carrier == Carrier.SYMBOLIC:
            return LaurentPoly()
        return Fraction(0)

    def one(self):
        if self.carrier == Carrier.SYMBOLIC:
            return LaurentPoly.constant(1)
        return Fraction(1)

    @property
    def constant_term(self):
        return self[self.zero_vector]

    def __getitem__(self, gamma):
        return self.coeffs.get(tuple(gamma), self.zero())

    def items(self):
        return sorted(self.coeffs.items())

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for g, c in other.coeffs.items():
            coeffs[g] = coeffs.get(g, self.zero()) + c
        return self._like(coeffs, min(self.truncation, other.truncation))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        return self._like({g: c * factor for g, c in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        G = min(self.truncation, other.truncation)
        coeffs = {}
        for g1, c1 in self.coeffs.items():
            for g2, c2 in other.coeffs.items():
                g = tuple(a + b for a, b in zip(g1, g2))
                if sum(g) <= G:
                    coeffs[g] = coeffs.get(g, self.zero()) + c1 * c2
        return self._like(coeffs, G)

    def map(self, fn, carrier=None):
        """Apply `fn` to every coefficient."""
        series = self._like({g: fn(c) for g, c in self.coeffs.items()})
        if carrier is not None:
            series.carrier = carrier
        return series

    def evaluate(self, s_value, base_q=None):
        """Numeric series from a symbolic one at s = s_value."""
        return GradedSeries({g: LaurentPoly.coerce(c).evaluate(s_value)
                             for g, c in self.coeffs.items()},
                            self.truncation, self.rank, Carrier.NUMERIC,
                            base_q)

    def equals(self, other):
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self[g] == other[g] for g in keys)

    def __repr__(self):
        body = ', '.join(f'{g}: {c}' for g, c in self.items())
        return f'GradedSeries({{{body}}}, G={self.truncation})'


def _stretch(f, n, truncation):
    coeffs = {tuple(n * x for x in g): c for g, c in f.coeffs.items()}
    return GradedSeries(coeffs, truncation, f.rank, f.carrier, f.base_q)


def adams(f, n):
    """Adams operation psi_n: t^gamma -> t^(n gamma), s -> s^n, q -> q^n.

    Numeric series are resampled at q^n through their callback.

    Examples
    --------
    >>> f = GradedSeries({(1,): LaurentPoly.monomial(1, 1)}, 4, 1)
    >>> adams(f, 2)
    GradedSeries({(2,): 1*s^2}, G=4)
    """
    if n == 1:
        return f
    if f.carrier == Carrier.SYMBOLIC:
        return _stretch(f.map(lambda c: LaurentPoly.coerce(c).adams(n)),
                        n, f.truncation)

    if f.truncation < n:
        return f._like({f.zero_vector: f.constant_term})
    if f.resample is None:
        raise ResampleError(f.base_q**n if f.base_q else None)

    stretched = _stretch(f.resample(n), n, f.truncation)
    stretched.base_q = f.base_q
    stretched.resample = lambda m: _stretch(f.resample(n * m), n,
                                            f.truncation // m)
    return stretched


def _ordinary_log(g):
    h = g - g._like({g.zero_vector: g.one()})
    result = g._like({})
    power = g._like({g.zero_vector: g.one()})
    for k in range(1, g.truncation + 1):
        power = power * h
        result = result + power.scale(Fraction((-1)**(k + 1), k))
    return result


def _ordinary_exp(f):
    result = f._like({f.zero_vector: f.one()})
    power = f._like({f.zero_vector: f.one()})
    for k in range(1, f.truncation + 1):
        power = power * f
        result = result + power.scale(Fraction(1, math.factorial(k)))
    return result


def exp_series(f):
    """Plethystic exponential Exp(f) = exp(sum_n psi_n(f)/n).

    Examples
    --------
    >>> t = GradedSeries({(1,): 1}, 3, 1)
    >>> [(g, str(c)) for g, c in exp_series(t).items()]
    [((0,), '1'), ((1,), '1'), ((2,), '1'), ((3,), '1')]
    """
    if not _is_zero(f.constant_term):
        raise InputError('Exp needs a series with zero constant term')
    total = f._like({})
    for n in range(1, f.truncation + 1):
        total = total + adams(f, n).scale(Fraction(1, n))
    return _ordinary_exp(total)


def log_series(g):
    """Plethystic logarithm Log(g) = sum_n mu(n)/n psi_n(log g).

    Examples
    --------
    >>> geometric = GradedSeries({(n,): 1 for n in range(4)}, 3, 1)
    >>> [(g, str(c)) for g, c in log_series(geometric).items()]
    [((1,), '1')]
    """
    if g.constant_term != 1:
        raise InputError('Log needs a series with constant term 1')
    result = g._like({})
    for n in range(1, g.truncation + 1):
        mu = int(mobius(n))
        if mu:
            result = result + _ordinary_log(adams(g, n)).scale(
                Fraction(mu, n))
    return result

#------------------------------------------------------------------------------
# Interpolation
#------------------------------------------------------------------------------

def _rational(x):
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def interpolate_laurent(samples, bound, integral=True):
    """Reconstruct a Laurent polynomial with exponents in [-bound, bound].

    Parameters
    ----------
    samples: list of (s, value)
        Exact values at distinct nonzero s.
    bound: int
        Exponent bound B; at least 2B + 1 samples are needed and every
        further sample is a residual check.
    integral: bool, optional
        Require integer coefficients. Defaults to True.

    Returns
    -------
    LaurentPoly

    Raises
    ------
    InterpolationError
        Too few samples, or the samples are not a Laurent polynomial of the
        given span.
    ConventionError
        Non-integral coefficients while `integral` is set.

    Examples
    --------
    >>> str(interpolate_laurent([(-3, 2), (5, 2), (-7, 2)], 1))
    '2'
    >>> str(interpolate_laurent([(-3, -3), (5, 5), (-7, -7)], 1))
    '1*s^1'
    >>> interpolate_laurent([(-3, 1), (5, 2), (-7, 3), (9, 0)], 1)
    Traceback (most recent call last):
    ...
    quivdt.errors.InterpolationError: samples are not a Laurent polynomial \
with exponents in [-1, 1] (non-polynomial counts; enlarge the congruence \
modulus)
    """
    xs = [Fraction(s) for s, _ in samples]
    if len(set(xs)) != len(xs) or 0 in xs:
        raise InterpolationError('sample points must be distinct and nonzero')
    if len(samples) < 2 * bound + 1:
        raise InterpolationError(f'{len(samples)} samples cannot determine '
                                 f'exponents in [-{bound}, {bound}]; '
                                 f'{2 * bound + 1} are needed')

    x = sympy.Symbol('x')
    data = [(_rational(s), _rational(v) * _rational(s)**bound)
            for s, v in samples]
    poly = sympy.Poly(sympy.interpolate(data, x), x, domain='QQ')
    if not poly.is_zero and poly.degree() > 2 * bound:
        raise InterpolationError(
            'samples are not a Laurent polynomial with exponents in '
            f'[-{bound}, {bound}] (non-polynomial counts; enlarge the '
            'congruence modulus)')

    terms = {}
    for (k,), c in poly.terms():
        value = Fraction(int(c.p), int(c.q))
        if integral and value.denominator != 1:
            raise ConventionError(f'non-integral coefficient {value} at '
                                  f's^{k - bound}')
        terms[k - bound] = value.numerator if value.denominator == 1 \
            else value
    return LaurentPoly(terms)


if __name__ == "__main__":
    import doctest
    doctest.testmod()

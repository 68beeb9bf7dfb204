"""
DT to BPS Pipeline
------------------

Stack counting series from finite-field character sums, refined BPS
invariants by plethystic logarithm and interpolation in the line element,
and the checks run on the results: positivity and the dimension sum rule,
the framed identity with its Euler characteristic form, and GV tables.

Key Features:
~~~~~~~~~~~~~
- `stack_series`: sum_gamma S_gamma(q) (BPS_SIGN s)^chi / |GL_gamma| t^gamma
- `bps_extract`: Omega_gamma(s) from several calibrated fields
- `verify_theoremB`: positivity, palindromicity, vanishing off simple
  sectors, and sum_gamma |gamma|^2 Omega_gamma(1) = dim of the Jacobi algebra
- `framed_exp_check`: framed counts against Exp(-sum Omega c_{m|gamma|}),
  the product formula at s = 1 and framing independence
- `gv_table`: GV invariants of a one-vertex contraction model
- `kac_check`, `milnor_sector`: the free loop and non-quasi-homogeneous
  one-dimensional sectors

Usage:
~~~~~~
::

    from quivdt.models import one_loop
    from quivdt.dtbps import bps_extract, verify_theoremB

    Q, W = one_loop(2)
    table = bps_extract(Q, W, 2)
    str(table[(1,)].omega)          # '2'
    verify_theoremB(Q, W, table).passed

See Also:
~~~~~~~~~
- `quivdt.fqrep`: the point counts behind every numeric series
- `quivdt.plethys`: Exp, Log and interpolation
"""
__version__ = "1.5"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/21 (initial version) ~ 2026/10/16 (last revision)"

__all__ = [
    'BPS_SIGN',
    'BpsSample',
    'BpsEntry',
    'BpsTable',
    'GvRow',
    'CheckEntry',
    'CheckReport',
    'stack_series',
    'bps_values',
    'bps_extract',
    'verify_theoremB',
    'inject_adversarial',
    'projective_factor',
    'framed_series',
    'framed_bps_values',
    'hu_toda_series',
    'framed_exp_check',
    'gv_table',
    'milnor_sector',
    'kac_check',
]

import logging
from collections import namedtuple
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

import sympy

from .errors import (QuivdtError, InputError, UnsupportedError, BudgetError,
                     CongruenceError, ConsistencyError, TheoremViolation)
from .fqrep import (field_for, gl_order, exp_sum_count, framed_exp_sum_count,
                    class_char_sum, congruence_modulus, line_element,
                    calibrated_fields)
from .jacobi import truncated_dim_profile, finiteness_certificate, local_milnor
from .ncalg import Potential, abelianize
from .plethys import (LaurentPoly, GradedSeries, exp_series, log_series,
                      interpolate_laurent)
from .quiver import dim_vectors, euler_form, rep_dim, simple_exists, total
from .spectrum import BivariatePoly, sector_spectrum, refined_gv_poly, \
    specialize
from .utils import (DEFAULT_JOBS, DEFAULT_POINT_BUDGET, DEFAULT_CHUNK_SIZE,
                    Carrier, SpecializeMode)


logger = logging.getLogger(__name__)

# Orientation of the line element: S_gamma (BPS_SIGN s)^chi / |GL_gamma| is
# the stack coefficient and Omega = BPS_SIGN (q - 1) Log / s.
BPS_SIGN = -1

#------------------------------------------------------------------------------
# Result types
#------------------------------------------------------------------------------

# Values Omega_gamma(s_q) at one field, without interpolation.
BpsSample = namedtuple('BpsSample', ['q', 's', 'omegas'])


@dataclass(frozen=True)
class BpsEntry:
    gamma: tuple
    omega: LaurentPoly
    omega_num: int
    positive: bool
    palindromic: bool
    simple_sector: bool

    def to_record(self):
        return {
            'gamma': list(self.gamma),
            'omega': str(self.omega),
            'omega_num': self.omega_num,
            'positive': self.positive,
            'palindromic': self.palindromic,
            'simple_sector': self.simple_sector,
        }


@dataclass(frozen=True)
class BpsTable:
    """Refined BPS invariants for all 0 < |gamma| <= truncation.

    Entries are in ascending lexicographic order of gamma; `fields` are the
    sampled field sizes and `modulus` the congruence modulus M.
    """
    entries: tuple
    fields: tuple
    truncation: int
    modulus: int

    def __getitem__(self, gamma):
        gamma = tuple(gamma)
        for entry in self.entries:
            if entry.gamma == gamma:
                return entry
        raise KeyError(gamma)

    def omegas(self):
        return {e.gamma: e.omega for e in self.entries}

    def to_records(self):
        return [e.to_record() for e in self.entries]


@dataclass(frozen=True)
class GvRow:
    r: int
    gv_num: int
    gv_refined: LaurentPoly
    gv_bivariate: Optional[BivariatePoly] = None

    def to_record(self):
        return {
            'r': self.r,
            'gv_num': self.gv_num,
            'gv_refined': str(self.gv_refined),
            'gv_bivariate': None if self.gv_bivariate is None
            else str(self.gv_bivariate),
        }


@dataclass(frozen=True)
class CheckEntry:
    """One checked clause: status is 'pass', 'fail' or 'skip'."""
    check: str
    status: str
    detail: str

    def to_record(self):
        return {'check': self.check, 'status': self.status,
                'detail': self.detail}


@dataclass(frozen=True)
class CheckReport:
    entries: tuple

    @property
    def passed(self):
        return all(e.status != 'fail' for e in self.entries)

    def failures(self):
        return [e for e in self.entries if e.status == 'fail']

    def to_records(self):
        return [e.to_record() for e in self.entries]


def _entry(check, ok, detail):
    if not ok:
        logger.warning(f'{check} failed: {detail}')
    return CheckEntry(check, 'pass' if ok else 'fail', detail)

#------------------------------------------------------------------------------
# Stack series
#------------------------------------------------------------------------------

def _modulus(W):
    M = congruence_modulus(W)
    if M is None:
        raise UnsupportedError('the potential is not quasi-homogeneous')
    return M


def _calibrate(q, W):
    """Line element of F_q for W; None only for W = 0 on uncalibrated q."""
    M = _modulus(W)
    try:
        s = line_element(field_for(q), M)
    except BudgetError:
        if not W.is_zero():
            raise
        s = None
    if s is None and not W.is_zero():
        raise CongruenceError(f'field size {q} is not calibrated for '
                              f'modulus {M}')
    return s


def _twist(s, chi, q):
    if chi == 0:
        return Fraction(1)
    if s is None:
        raise CongruenceError(f'field size {q} has no line element, needed '
                              f'for chi = {chi}')
    return Fraction(BPS_SIGN * s) ** chi


def _char_sum(report):
    if not report.pure:
        raise CongruenceError(f'character sum at q={report.q}, '
                              f'gamma={report.gamma} is not rational')
    return report.char_sum


def _stack_char_sum(Q, W, gamma, q, s, degree, options):
    """Character sum of Tr W over Rep_gamma(Q)(F_{q^degree})."""
    value = class_char_sum(Q, W, gamma, field_for(q), s, degree)
    if value is not None:
        return value
    logger.debug(f'enumerating gamma={gamma} over F_{q**degree}')
    report = exp_sum_count(Q, W, gamma, field_for(q**degree),
                           check_congruence=False, **options)
    return _char_sum(report)


def _stack_series(Q, W, G, q, s, options, degree=1):
    """Stack series at F_{q^degree}, with s_{q^degree} = s^degree."""
    q_n = q**degree
    s_n = None if s is None else s**degree
    coeffs = {(0,) * Q.vertex_count: Fraction(1)}
    for gamma in dim_vectors(Q, G):
        D = rep_dim(Q, gamma)
        if W.is_zero() or D == 0:
            char_sum = q_n**D
        else:
            char_sum = _stack_char_sum(Q, W, gamma, q, s, degree, options)
        chi = euler_form(Q, gamma, gamma)
        coeffs[gamma] = Fraction(char_sum, gl_order(gamma, q_n)) * \
            _twist(s_n, chi, q_n)

    def resample(n):
        return _stack_series(Q, W, G // n, q, s, options, degree * n)

    return GradedSeries(coeffs, G, Q.vertex_count, Carrier.NUMERIC,
                        base_q=q_n, resample=resample)


def stack_series(Q, W, G, q, s=None, jobs=DEFAULT_JOBS,
                 budget=DEFAULT_POINT_BUDGET, chunk_size=DEFAULT_CHUNK_SIZE):
    """Numeric stack counting series at a calibrated field.

    The coefficient of t^gamma is S_gamma(q) (BPS_SIGN s_q)^chi(gamma,gamma)
    / |GL_gamma(F_q)| where S_gamma is the character sum of Tr W over
    Rep_gamma(Q)(F_q). The series resamples itself at q^n with s_q^n, so
    plethystic operations apply. Potentials made of cycle powers are counted
    by `class_char_sum` from F_q alone; other potentials are enumerated over
    F_{q^n}, which needs q^n <= 4096.

    Parameters
    ----------
    Q: Quiver
        The quiver.
    W: Potential
        Quasi-homogeneous potential, or zero.
    G: int
        Truncation |gamma| <= G.
    q: int
        Field size, calibrated for the congruence modulus of W.
    s: int, optional
        Line element at q; computed from the field when omitted.

    Returns
    -------
    GradedSeries

    Examples
    --------
    >>> from quivdt.models import one_loop, one_loop_free
    >>> str(stack_series(*one_loop(2), 1, 4)[(1,)])
    '4/3'
    >>> str(stack_series(*one_loop_free(), 1, 9)[(1,)])
    '9/8'
    """
    if s is None:
        s = _calibrate(q, W)
    logger.info(f'stack series over F_{q} up to |gamma| = {G}')
    options = dict(jobs=jobs, budget=budget, chunk_size=chunk_size)
    return _stack_series(Q, W, G, q, s, options)

#------------------------------------------------------------------------------
# BPS extraction
#------------------------------------------------------------------------------

def bps_values(Q, W, G, q, jobs=DEFAULT_JOBS, budget=DEFAULT_POINT_BUDGET,
               chunk_size=DEFAULT_CHUNK_SIZE):
    """Omega_gamma(s_q) = BPS_SIGN (q - 1) Log_gamma / s_q at one field.

    Examples
    --------
    >>> from quivdt.models import one_loop
    >>> sample = bps_values(*one_loop(1), 2, 9)
    >>> sample.s, sample.omegas[(1,)], sample.omegas[(2,)]
    (-3, Fraction(1, 1), Fraction(0, 1))
    """
    s = _calibrate(q, W)
    if s is None:
        raise CongruenceError(f'field size {q} has no line element')
    series = stack_series(Q, W, G, q, s, jobs, budget, chunk_size)
    log = log_series(series)
    omegas = {gamma: BPS_SIGN * log[gamma] * (q - 1) / s
              for gamma in dim_vectors(Q, G)}
    return BpsSample(q, s, omegas)


def _bounds(Q, gammas, margin):
    return {g: max(0, 1 - euler_form(Q, g, g) + margin) for g in gammas}


def bps_extract(Q, W, G, fields=None, margin=0, certificate=None,
                jobs=DEFAULT_JOBS, budget=DEFAULT_POINT_BUDGET,
                chunk_size=DEFAULT_CHUNK_SIZE):
    """Refined BPS invariants Omega_gamma(s) for 0 < |gamma| <= G.

    Each Omega_gamma is a Laurent polynomial with exponents in [-B, B],
    B = max(0, 1 - chi(gamma, gamma) + margin), reconstructed from its values
    at the sampled fields; extra samples are residual checks.

    Parameters
    ----------
    Q: Quiver
        The quiver.
    W: Potential
        Quasi-homogeneous potential.
    G: int
        Truncation.
    fields: list of int, optional
        Calibrated field sizes; the smallest ones that suffice are chosen
        when omitted.
    margin: int, optional
        Extra exponent span. Defaults to 0.
    certificate: FinitenessCertificate, optional
        When certified, a negative or non-palindromic Omega raises
        TheoremViolation instead of logging a warning.

    Returns
    -------
    BpsTable

    Raises
    ------
    TheoremViolation
        Nonzero Omega on a sector without simple representations, or a
        positivity failure on a certified input.

    Examples
    --------
    >>> from quivdt.models import one_loop
    >>> table = bps_extract(*one_loop(1), 2)
    >>> [(e.gamma, str(e.omega)) for e in table.entries], table.fields
    ([((1,), '1'), ((2,), '0')], (9, 25, 49))
    """
    M = _modulus(W)
    gammas = dim_vectors(Q, G)
    bounds = _bounds(Q, gammas, margin)
    needed = 2 * max(bounds.values(), default=0) + 1
    if fields is None:
        fields = calibrated_fields(M, needed)
    fields = tuple(int(q) for q in fields)
    if len(fields) < needed:
        raise InputError(f'{len(fields)} field sizes given, {needed} needed')

    options = dict(jobs=jobs, budget=budget, chunk_size=chunk_size)
    samples = [bps_values(Q, W, G, q, **options) for q in fields]
    if len({smp.s for smp in samples}) != len(samples):
        raise InputError(f'field sizes {fields} repeat a line element')

    strict = certificate is not None and certificate.certified
    entries = []
    for gamma in gammas:
        omega = interpolate_laurent(
            [(smp.s, smp.omegas[gamma]) for smp in samples], bounds[gamma])
        simple = simple_exists(Q, gamma)
        if omega and not simple:
            raise TheoremViolation(f'Omega{gamma} = {omega} on a sector '
                                   'without simple representations')
        entry = BpsEntry(gamma, omega, int(omega.at_one()),
                         omega.is_nonnegative(), omega.is_palindromic(),
                         simple)
        if not (entry.positive and entry.palindromic):
            message = f'Omega{gamma} = {omega} is not a nonnegative ' \
                      'palindromic polynomial'
            if strict:
                raise TheoremViolation(message)
            logger.warning(message)
        entries.append(entry)
    return BpsTable(tuple(entries), fields, G, M)

#------------------------------------------------------------------------------
# Checks
#------------------------------------------------------------------------------

def verify_theoremB(Q, W, bps, jacobi_dim=None):
    """Check positivity, palindromicity, vanishing off simple sectors and the
    sum rule sum_gamma |gamma|^2 Omega_gamma(1) = dim Jac(Q, W).

    When `jacobi_dim` is omitted it comes from a finiteness certificate;
    without one the sum rule is skipped.

    Examples
    --------
    >>> from quivdt.models import doubled_a2
    >>> Q, W = doubled_a2(1)
    >>> table = bps_extract(Q, W, 2)
    >>> [(e.check, e.status) for e in verify_theoremB(Q, W, table).entries]
    ... # doctest: +NORMALIZE_WHITESPACE
    [('positivity', 'pass'), ('palindromicity', 'pass'),
     ('finiteness', 'pass'), ('sum rule', 'pass')]
    """
    entries = []
    negative = [e.gamma for e in bps.entries if not e.positive]
    entries.append(_entry('positivity', not negative,
                          f'negative coefficients at {negative}'
                          if negative else 'all coefficients nonnegative'))
    skew = [e.gamma for e in bps.entries if not e.palindromic]
    entries.append(_entry('palindromicity', not skew,
                          f'not palindromic at {skew}'
                          if skew else 'all entries palindromic'))
    stray = [e.gamma for e in bps.entries if e.omega and not e.simple_sector]
    entries.append(_entry('finiteness', not stray,
                          f'nonzero off simple sectors at {stray}'
                          if stray else 'zero off simple sectors'))

    if jacobi_dim is None:
        try:
            cert = finiteness_certificate(truncated_dim_profile(Q, W))
        except QuivdtError as e:
            cert = None
            logger.warning(f'no finiteness certificate: {e}')
        if cert is not None and cert.certified:
            jacobi_dim = cert.dim_total
    if jacobi_dim is None:
        logger.warning('sum rule skipped: Jacobi algebra not certified '
                       'finite-dimensional')
        entries.append(CheckEntry('sum rule', 'skip',
                                  'no finite Jacobi dimension'))
    else:
        lhs = sum(total(e.gamma)**2 * e.omega_num for e in bps.entries)
        entries.append(_entry('sum rule', lhs == jacobi_dim,
                              f'sum |gamma|^2 omega = {lhs}, '
                              f'dim = {jacobi_dim}'))
    return CheckReport(tuple(entries))


def inject_adversarial(bps, gamma=None):
    """Copy of `bps` with Omega_gamma raised by 1 (first entry by default).

    >>> table = BpsTable((BpsEntry((1,), LaurentPoly.constant(2), 2,
    ...                            True, True, True),), (4, 16, 25), 1, 3)
    >>> inject_adversarial(table)[(1,)].omega_num
    3
    """
    target = bps.entries[0].gamma if gamma is None else tuple(gamma)
    entries = tuple(replace(e, omega=e.omega + 1, omega_num=e.omega_num + 1)
                    if e.gamma == target else e for e in bps.entries)
    return replace(bps, entries=entries)

#------------------------------------------------------------------------------
# Framed identity
#------------------------------------------------------------------------------

def projective_factor(N):
    """c_N(s) = s^-(N-1) sum_{j<N} s^(2j), the virtual Poincare polynomial
    of P^(N-1).

    >>> str(projective_factor(3))
    '1*s^-2 + 1 + 1*s^2'
    """
    return LaurentPoly({2 * j - (N - 1): 1 for j in range(N)})


def _framed_series(Q, W, m, G, q, s, options):
    coeffs = {(0,) * Q.vertex_count: Fraction(1)}
    field = None
    for gamma in dim_vectors(Q, G):
        field = field or field_for(q)
        report = framed_exp_sum_count(Q, W, gamma, m, field,
                                      check_congruence=False, **options)
        chi = euler_form(Q, gamma, gamma)
        twist = _twist(s, chi, q) * Fraction(s) ** (-m * total(gamma))
        coeffs[gamma] = Fraction(_char_sum(report), report.gl_order) * twist

    def resample(n):
        return _framed_series(Q, W, m, G // n, q**n, s**n, options)

    return GradedSeries(coeffs, G, Q.vertex_count, Carrier.NUMERIC,
                        base_q=q, resample=resample)


def framed_series(Q, W, m, G, q, jobs=DEFAULT_JOBS,
                  budget=DEFAULT_POINT_BUDGET, chunk_size=DEFAULT_CHUNK_SIZE):
    """sum_gamma Z_gamma (BPS_SIGN s)^chi s^(-m|gamma|) t^gamma at F_q, with
    Z_gamma the stable framed character sum over |GL_gamma|.

    It equals Exp(-sum_gamma Omega_gamma(s) c_{m|gamma|}(s) t^gamma).

    >>> from quivdt.models import one_loop
    >>> f = framed_series(*one_loop(2), 2, 2, 4)
    >>> str(f[(1,)]), str(f[(2,)])
    ('5', '33/4')
    """
    s = _calibrate(q, W)
    if s is None:
        raise CongruenceError(f'field size {q} has no line element')
    options = dict(jobs=jobs, budget=budget, chunk_size=chunk_size)
    return _framed_series(Q, W, m, G, q, s, options)


def framed_bps_values(Q, W, m, G, q, jobs=DEFAULT_JOBS,
                      budget=DEFAULT_POINT_BUDGET,
                      chunk_size=DEFAULT_CHUNK_SIZE):
    """Omega_gamma(s_q) = -Log_gamma(framed series) / c_{m|gamma|}(s_q).

    >>> from quivdt.models import one_loop
    >>> framed_bps_values(*one_loop(2), 2, 2, 4).omegas[(1,)]
    Fraction(2, 1)
    """
    series = framed_series(Q, W, m, G, q, jobs, budget, chunk_size)
    return _framed_omegas(Q, m, series, _calibrate(q, W))


def _framed_omegas(Q, m, series, s):
    log = log_series(series)
    omegas = {gamma: -log[gamma] /
              projective_factor(m * total(gamma)).evaluate(s)
              for gamma in dim_vectors(Q, series.truncation)}
    return BpsSample(series.base_q, s, omegas)


def hu_toda_series(omegas, m, G):
    """Coefficients of prod_i (1 - (-1)^m t^i)^(m i omega_i) up to t^G.

    Parameters
    ----------
    omegas: dict of int to int
        omega_i by length i.

    Examples
    --------
    >>> hu_toda_series({1: 2}, 2, 3)
    [1, -4, 6, -4]
    >>> hu_toda_series({1: 1}, 1, 2)
    [1, 1, 0]
    """
    t = sympy.Symbol('t')
    expr = sympy.Integer(1)
    for i, w in omegas.items():
        if w:
            expr *= (1 - (-1)**m * t**i) ** (m * i * w)
    poly = sympy.expand(sympy.series(expr, t, 0, G + 1).removeO())
    return [int(poly.coeff(t, n)) for n in range(G + 1)]


def _symbolic_rhs(Q, omegas, m, G):
    f = GradedSeries({g: -w * projective_factor(m * total(g))
                      for g, w in omegas.items() if total(g) <= G},
                     G, Q.vertex_count)
    return exp_series(f)


def _chi_level(rhs, omegas, m, G):
    """Compare the s = 1 specialization under t -> (-1)^m t with the
    product formula."""
    by_length = {}
    for g, w in omegas.items():
        if total(g) <= G:
            by_length[total(g)] = by_length.get(total(g), 0) + w.at_one()
    if m % 2 and any(w for i, w in by_length.items() if i % 2 == 0):
        return CheckEntry(f'product formula m={m}', 'skip',
                          'odd framing with nonzero even-length omega')

    lhs = [0] * (G + 1)
    for g, c in rhs.items():
        lhs[total(g)] += LaurentPoly.coerce(c).at_one() * (-1)**(m * total(g))
    expected = hu_toda_series(by_length, m, G)
    return _entry(f'product formula m={m}', lhs == expected,
                  f'series {lhs}, product {expected}')


def framed_exp_check(Q, W, m, G, fields=None, bps=None, jobs=DEFAULT_JOBS,
                     budget=DEFAULT_POINT_BUDGET,
                     chunk_size=DEFAULT_CHUNK_SIZE):
    """Check the framed identity at sampled fields.

    For every field: the framed series against
    Exp(-sum Omega_gamma c_{m|gamma|} t^gamma) evaluated at s_q, and the
    Omega values recovered from the framed series against `bps`. Once: the
    s = 1 specialization against `hu_toda_series`.

    Parameters
    ----------
    fields: list of int, optional
        Field sizes; the smallest calibrated one when omitted.
    bps: BpsTable, optional
        Extracted when omitted.

    Returns
    -------
    CheckReport
    """
    options = dict(jobs=jobs, budget=budget, chunk_size=chunk_size)
    if bps is None:
        bps = bps_extract(Q, W, G, **options)
    G = min(G, bps.truncation)
    if fields is None:
        fields = calibrated_fields(_modulus(W), 1)

    omegas = bps.omegas()
    rhs = _symbolic_rhs(Q, omegas, m, G)
    entries = []
    for q in fields:
        lhs = framed_series(Q, W, m, G, q, **options)
        sample = _framed_omegas(Q, m, lhs, _calibrate(q, W))
        rhs_q = rhs.evaluate(sample.s, q)
        keys = sorted(set(lhs.coeffs) | set(rhs_q.coeffs))
        bad = [f'{g}: {lhs[g]} vs {rhs_q[g]}' for g in keys
               if lhs[g] != rhs_q[g]]
        entries.append(_entry(f'framed identity m={m} q={q}', not bad,
                              '; '.join(bad) or f'{len(keys)} coefficients'))

        moved = [f'{g}: {sample.omegas[g]} vs {omegas[g].evaluate(sample.s)}'
                 for g in dim_vectors(Q, G)
                 if sample.omegas[g] != omegas[g].evaluate(sample.s)]
        entries.append(_entry(f'framing independence m={m} q={q}', not moved,
                              '; '.join(moved) or 'all omega agree'))

    entries.append(_chi_level(rhs, omegas, m, G))
    return CheckReport(tuple(entries))

#------------------------------------------------------------------------------
# One-vertex models
#------------------------------------------------------------------------------

def _sector_bivariate(W):
    try:
        f = abelianize(W, (1,))
        if len(f.gens) != 1:
            return None
        return refined_gv_poly(sector_spectrum(W, (1,)))
    except QuivdtError as e:
        logger.debug(f'no spectrum for the rank 1 sector: {e}')
        return None


def gv_table(Q, W, r_max, length=None, bps=None, fields=None,
             jobs=DEFAULT_JOBS, budget=DEFAULT_POINT_BUDGET,
             chunk_size=DEFAULT_CHUNK_SIZE):
    """GV invariants n_r = Omega_r(1) of a one-vertex model, r = 1..r_max.

    The rank 1 row carries the bivariate polynomial from the spectrum of
    the abelianized sector when that sector has one variable.

    Raises
    ------
    TheoremViolation
        A nonzero invariant beyond the length bound.

    Examples
    --------
    >>> from quivdt.models import one_loop
    >>> [r.to_record() for r in gv_table(*one_loop(2), 2, length=1)]
    ... # doctest: +NORMALIZE_WHITESPACE
    [{'r': 1, 'gv_num': 2, 'gv_refined': '2',
      'gv_bivariate': 'z1^(-1/6)*z2^(1/6) + z1^(1/6)*z2^(-1/6)'},
     {'r': 2, 'gv_num': 0, 'gv_refined': '0', 'gv_bivariate': '0'}]
    """
    if Q.vertex_count != 1:
        raise UnsupportedError('GV tables need a one-vertex quiver')
    if bps is None:
        bps = bps_extract(Q, W, r_max, fields=fields, jobs=jobs,
                          budget=budget, chunk_size=chunk_size)
    if r_max > bps.truncation:
        raise InputError(f'rank {r_max} exceeds the truncation '
                         f'{bps.truncation}')

    rows = []
    for r in range(1, r_max + 1):
        entry = bps[(r,)]
        if r == 1:
            bivariate = _sector_bivariate(W)
        else:
            bivariate = None if entry.omega else BivariatePoly()
        if length is not None and r > length and entry.omega_num:
            raise TheoremViolation(f'n_{r} = {entry.omega_num} is nonzero '
                                   f'beyond the length {length}')
        if bivariate is not None and \
                specialize(bivariate, SpecializeMode.CHI) != entry.omega_num:
            raise ConsistencyError(f'spectrum of the rank {r} sector gives '
                                   f'{specialize(bivariate, "chi")}, '
                                   f'counts give {entry.omega_num}')
        rows.append(GvRow(r, entry.omega_num, entry.omega, bivariate))
    return rows


def milnor_sector(Q, W, N_max=None):
    """Omega_1 of a one-vertex model as the local Milnor number of the
    abelianized rank 1 sector; W need not be quasi-homogeneous.

    >>> from quivdt.models import milnor_example
    >>> milnor_sector(*milnor_example(3)).omega_num
    3
    """
    if Q.vertex_count != 1:
        raise UnsupportedError('milnor_sector needs a one-vertex quiver')
    f = abelianize(W, (1,))
    mu = local_milnor(f) if N_max is None else local_milnor(f, N_max)
    if mu is None:
        raise UnsupportedError(f'{f.as_expr()} is not an isolated '
                               'singularity within the truncation')
    return BpsEntry((1,), LaurentPoly.constant(mu), mu, True, True,
                    simple_exists(Q, (1,)))


def kac_check(Q, G, q):
    """W = 0 check on the one-loop quiver: Log of the stack series is
    q/(q - 1) t, i.e. Omega_1 = -s and all higher Omega vanish.

    >>> from quivdt.models import one_loop_free
    >>> kac_check(one_loop_free()[0], 2, 9).passed
    True
    """
    if Q.vertex_count != 1 or len(Q.arrows) != 1:
        raise UnsupportedError('kac_check needs the one-loop quiver')
    W = Potential(Q)
    s = _calibrate(q, W)
    log = log_series(stack_series(Q, W, G, q, s))

    entries = [_entry('log t^1', log[(1,)] == Fraction(q, q - 1),
                      f'{log[(1,)]} vs {Fraction(q, q - 1)}')]
    higher = {g: c for g, c in log.items() if total(g) > 1}
    entries.append(_entry('log higher', not higher,
                          f'nonzero at {sorted(higher)}' if higher
                          else 'all zero'))
    if s is not None:
        omega = BPS_SIGN * log[(1,)] * (q - 1) / s
        entries.append(_entry('omega_1 = -s', omega == -s,
                              f'{omega} vs {-s}'))
    return CheckReport(tuple(entries))


if __name__ == "__main__":
    import doctest
    doctest.testmod()

"""
Finite Fields and Representation Counting
-----------------------------------------

Table-driven arithmetic in F_q (q <= 4096), exhaustive enumeration of
representation spaces with the fiber histogram of Tr W, stable framed
counts, and the calibration of fields whose Gauss sums give an exact line
element s.

Key Features:
~~~~~~~~~~~~~
- `FiniteField`: element codes, log/exp tables, vectorized batch matrix
  products and batch ranks over numpy arrays
- `exp_sum_count`: fiber counts N0, N1, E = N0 - N1 and the additive
  character sum of Tr W over Rep_gamma(Q)(F_q)
- `framed_exp_sum_count`: the same over framed points whose framing vectors
  generate the representation
- Chunked enumeration over a thread pool; the result does not depend on the
  chunking or the number of workers
- `class_char_sum`: the character sum of a potential made of cycle powers
  at F_{q^n} without enumeration, from Gauss sums of F_q lifted to F_{q^n}
- `line_element`, `calibrated_fields`: fields on which the character sums
  are rational and s_q^2 = q

Usage:
~~~~~~
::

    from quivdt.models import one_loop
    from quivdt.fqrep import field_make, exp_sum_count

    Q, W = one_loop(2)
    report = exp_sum_count(Q, W, (1,), field_make(7, 1))
    report.n0, report.n1, report.e         # (1, 3, -2)

See Also:
~~~~~~~~~
- `quivdt.dtbps`: turns the counts into stack series and BPS invariants
"""
__version__ = "1.4"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/18 (initial version) ~ 2026/10/16 (last revision)"

__all__ = [
    'FiniteField',
    'CountReport',
    'field_make',
    'field_for',
    'gl_order',
    'exp_sum_count',
    'framed_exp_sum_count',
    'power_sum',
    'cycle_char_sum',
    'class_char_sum',
    'congruence_modulus',
    'gauss_periods',
    'line_element',
    'calibrated_fields',
]

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from .errors import (InputError, UnsupportedError, BudgetError,
                     CongruenceError, ConsistencyError)
from .ncalg import trace_evaluate, scaling_modulus, cycle_powers
from .quiver import dim_vector, total, rep_dim, frame, framing_arrow_name
from .utils import (DEFAULT_POINT_BUDGET, DEFAULT_CHUNK_SIZE, DEFAULT_JOBS,
                    MAX_FIELD_SIZE)


logger = logging.getLogger(__name__)

#------------------------------------------------------------------------------
# Finite fields
#------------------------------------------------------------------------------

def _least_irreducible(p, k):
    """Least monic irreducible of degree k over F_p, coefficients listed from
    the leading one down, in lexicographic order."""
    if k == 1:
        return [1, 0]
    for tail in itertools.product(range(p), repeat=k):
        f = [1, *tail]
        if gf_irreducible_p(f, p, ZZ):
            return f
    raise ConsistencyError(f'no irreducible of degree {k} over F_{p}')


class FiniteField:
    """The field F_q, q = p^k, on integer codes 0..q-1.

    The code of an element is sum_i c_i p^i where sum_i c_i x^i is its
    representative modulo the least monic irreducible of degree k. Codes
    0 and 1 are the zero and the unit; codes below p form the prime field.

    Examples
    --------
    >>> F4 = FiniteField(2, 2)
    >>> F4.modulus
    [1, 1, 1]
    >>> int(F4.mul(2, 3)), int(F4.add(2, 3))
    (1, 1)
    >>> FiniteField(3, 2).modulus
    [1, 0, 1]
    >>> [int(FiniteField(3, 2).absolute_trace(c)) for c in range(9)]
    [0, 2, 1, 0, 2, 1, 0, 2, 1]
    """

    def __init__(self, p, k=1):
        self.p = int(p)
        self.k = int(k)
        self.q = self.p ** self.k
        self.modulus = _least_irreducible(self.p, self.k)
        self._digit_weights = self.p ** np.arange(self.k, dtype=np.int64)
        self._build_tables()

    def __repr__(self):
        return f'FiniteField(q={self.q})'

    #--------------------------------------------------------------------------
    # Table construction

    def _to_poly(self, code):
        digits = []
        for _ in range(self.k):
            code, d = divmod(code, self.p)
            digits.append(d)
        poly = digits[::-1]
        while poly and poly[0] == 0:
            poly.pop(0)
        return poly

    def _to_code(self, poly):
        code = 0
        for c in poly:
            code = code * self.p + int(c) % self.p
        return code

    def _powers(self, g):
        """Successive powers of code g until 1 recurs."""
        powers = [1]
        g_poly = self._to_poly(g)
        x = [1]
        for _ in range(self.q - 1):
            x = gf_rem(gf_mul(x, g_poly, self.p, ZZ), self.modulus,
                       self.p, ZZ)
            code = self._to_code(x)
            if code == 1:
                break
            powers.append(code)
        return powers

    def _build_tables(self):
        q, p = self.q, self.p
        order = q - 1
        for g in range(1 if q == 2 else 2, q):
            powers = self._powers(g)
            if len(powers) == order:
                self.generator = g
                break
        else:
            raise ConsistencyError(f'F_{q} has no primitive element')

        powers = np.array(powers, dtype=np.int64)
        self.exp_table = np.concatenate([powers, powers])
        self.log_table = np.zeros(q, dtype=np.int64)
        self.log_table[powers] = np.arange(order, dtype=np.int64)

        # Tr(c) = sum_{i<k} c^(p^i)
        nonzero = np.arange(1, q, dtype=np.int64)
        logs = self.log_table[nonzero]
        trace = np.zeros(order, dtype=np.int64)
        for i in range(self.k):
            trace = self.add(trace, self.exp_table[(logs * p**i) % order])
        self.trace_table = np.concatenate([[0], trace]).astype(np.int64)
        if (self.trace_table >= p).any():
            raise ConsistencyError(f'absolute traces of F_{q} leave F_{p}')

    #--------------------------------------------------------------------------
    # Element arithmetic (vectorized over numpy arrays of codes)

    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._digit_weights) % self.p

    def _undigits(self, digits):
        return (digits * self._digit_weights).sum(axis=-1)

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self.k == 1:
            return (np.asarray(a) + b) % self.p
        return self._undigits((self._digits(a) + self._digits(b)) % self.p)

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a)
        if self.k == 1:
            return (-np.asarray(a)) % self.p
        return self._undigits((-self._digits(a)) % self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        product = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError('zero has no inverse')
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    def absolute_trace(self, a):
        """Trace F_q -> F_p, as a code below p."""
        return self.trace_table[np.asarray(a, dtype=np.int64)]

    def from_fraction(self, c):
        """Image of a rational whose denominator is prime to p."""
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise CongruenceError(f'coefficient {c} has a denominator '
                                  f'divisible by the characteristic {self.p}')
        num = c.numerator % self.p
        den = c.denominator % self.p
        return int(self.mul(num, self.inv(den)))

    #--------------------------------------------------------------------------
    # Matrices (a leading batch axis is allowed everywhere)

    def identity(self, n):
        return np.eye(n, dtype=np.int64)

    def matmul(self, A, B):
        A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return np.matmul(A, B) % self.p
        batch = np.broadcast_shapes(A.shape[:-2], B.shape[:-2])
        result = np.zeros(batch + (A.shape[-2], B.shape[-1]), dtype=np.int64)
        for j in range(A.shape[-1]):
            result = self.add(result,
                              self.mul(A[..., :, j, None], B[..., None, j, :]))
        return result

    def trace(self, M):
        diag = np.diagonal(np.asarray(M, dtype=np.int64), axis1=-2, axis2=-1)
        if self.k == 1:
            return diag.sum(axis=-1) % self.p
        value = np.zeros(diag.shape[:-1], dtype=np.int64)
        for i in range(diag.shape[-1]):
            value = self.add(value, diag[..., i])
        return value

    def batch_echelon(self, M):
        """Reduced row echelon forms of a batch of matrices.

        Parameters
        ----------
        M: numpy.ndarray
            Codes of shape (batch, rows, cols).

        Returns
        -------
        tuple of (numpy.ndarray, numpy.ndarray)
            The reduced matrices (nonzero rows first) and their ranks.

        Examples
        --------
        >>> F3 = FiniteField(3)
        >>> R, rank = F3.batch_echelon(np.array([[[1, 2], [2, 1]],
        ...                                      [[0, 1], [1, 0]]]))
        >>> rank.tolist()
        [1, 2]
        >>> R[0].tolist()
        [[1, 2], [0, 0]]
        """
        M = np.array(M, dtype=np.int64)
        batch, rows, cols = M.shape
        rank = np.zeros(batch, dtype=np.int64)
        row_ids = np.arange(rows)
        for col in range(cols):
            cand = (M[:, :, col] != 0) & (row_ids[None, :] >= rank[:, None])
            b = np.nonzero(cand.any(axis=1))[0]
            if not len(b):
                continue
            piv = np.argmax(cand[b], axis=1)
            rb = rank[b]

            top = M[b, rb].copy()
            M[b, rb] = M[b, piv]
            M[b, piv] = top

            pivot_row = self.mul(M[b, rb], self.inv(M[b, rb, col])[:, None])
            M[b, rb] = pivot_row
            factor = M[b, :, col].copy()
            factor[np.arange(len(b)), rb] = 0
            M[b] = self.sub(M[b], self.mul(factor[:, :, None],
                                           pivot_row[:, None, :]))
            rank[b] += 1
        return M, rank

    def batch_rank(self, M):
        return self.batch_echelon(M)[1]


@lru_cache(maxsize=None)
def field_make(p, k=1):
    """The field with p^k elements.

    Examples
    --------
    >>> field_make(2, 2).modulus
    [1, 1, 1]
    >>> field_make(6, 1)
    Traceback (most recent call last):
    ...
    quivdt.errors.InputError: 6 is not prime
    """
    if not sympy.isprime(p):
        raise InputError(f'{p} is not prime')
    if k < 1:
        raise InputError(f'extension degree must be positive, got {k}')
    if p**k > MAX_FIELD_SIZE:
        raise BudgetError(f'field size {p}^{k} exceeds {MAX_FIELD_SIZE}')
    return FiniteField(p, k)


def field_for(q):
    """The field with q elements.

    >>> field_for(9)
    FiniteField(q=9)
    """
    factors = sympy.factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise InputError(f'{q} is not a prime power')
    (p, k), = factors.items()
    return field_make(int(p), int(k))


def gl_order(gamma, q):
    """prod_i |GL_{gamma_i}(F_q)|.

    Examples
    --------
    >>> gl_order((1,), 2), gl_order((2,), 2), gl_order((2, 1), 3)
    (1, 6, 96)
    """
    order = 1
    for n in gamma:
        order *= q**(n * (n - 1) // 2)
        for i in range(1, n + 1):
            order *= q**i - 1
    return order

#------------------------------------------------------------------------------
# Counting
#------------------------------------------------------------------------------

@dataclass
class CountReport:
    """Fiber counts of Tr W over the enumerated points.

    `char_sum` is the additive character sum sum_x psi(Tr W(x)), or None
    when it is not rational (its trace classes are not equinumerous).
    """
    gamma: tuple
    q: int
    n0: int
    n1: int
    e: int
    char_sum: Optional[int]
    pure: bool
    points: int
    elapsed: float
    gl_order: int
    m: Optional[int] = None
    trace_classes: list = dc_field(default_factory=list, repr=False)

    @property
    def e_over_gl(self):
        return Fraction(self.e, self.gl_order)

    @property
    def char_sum_over_gl(self):
        if self.char_sum is None:
            return None
        return Fraction(self.char_sum, self.gl_order)

    def to_records(self):
        return [{
            'gamma': list(self.gamma),
            'q': self.q,
            'N0': self.n0,
            'N1': self.n1,
            'E': self.e,
            'elapsed_ms': round(self.elapsed * 1000, 3),
        }]


def congruence_modulus(W):
    """Modulus M of the field congruence q = 1 (mod M) for W.

    The scaling modulus of W, raised to 2 when smaller; None when W is not
    homogeneous under any weighting.

    >>> from quivdt.models import one_loop, one_loop_free
    >>> congruence_modulus(one_loop(2)[1]), congruence_modulus(one_loop_free()[1])
    (3, 2)
    """
    M = scaling_modulus(W)
    if M is None:
        return None
    return max(M, 2)


def _check_quiver(Q, W):
    if W.quiver != Q:
        raise InputError('the potential is defined on another quiver')


def _check_field(W, field):
    M = scaling_modulus(W)
    if M is None:
        raise UnsupportedError('the potential is not quasi-homogeneous')
    if (field.q - 1) % M:
        raise CongruenceError(f'field size {field.q} is not 1 mod {M}')


def _layout(Q, gamma):
    """(arrow name, rows, cols, offset) of every arrow block."""
    blocks, offset = [], 0
    for a in Q.arrows:
        rows, cols = gamma[a.target], gamma[a.source]
        blocks.append((a.name, rows, cols, offset))
        offset += rows * cols
    return blocks, offset


def _decode(start, stop, q, D):
    """Row-major coordinates of the point indices start..stop-1."""
    rem = np.arange(start, stop, dtype=np.int64)
    coords = np.empty((len(rem), D), dtype=np.int64)
    for j in reversed(range(D)):
        coords[:, j] = rem % q
        rem //= q
    return coords


def _fold(field, hist):
    """Trace classes A_a, purity and the character sum of a histogram."""
    classes = np.zeros(field.p, dtype=np.int64)
    np.add.at(classes, field.trace_table, hist)
    classes = [int(c) for c in classes]
    pure = len(set(classes[1:])) <= 1
    char_sum = classes[0] - classes[1] if pure else None
    return classes, pure, char_sum


def _enumerate(W, blocks, D, field, jobs, chunk_size, stable=None):
    """Histogram of Tr W codes over all points (optionally the stable ones)."""
    q = field.q
    n_points = q**D

    def count_chunk(start, stop):
        coords = _decode(start, stop, q, D)
        mats = {name: coords[:, off:off + r * c].reshape(len(coords), r, c)
                for name, r, c, off in blocks}
        if W.is_zero():
            values = np.zeros(stop - start, dtype=np.int64)
        else:
            values = trace_evaluate(W, mats, field, batched=True)
        if stable is not None:
            values = values[stable(mats)]
        return np.bincount(values, minlength=q)

    chunks = [(start, min(start + chunk_size, n_points))
              for start in range(0, n_points, chunk_size)]
    hist = np.zeros(q, dtype=np.int64)
    if jobs <= 1:
        for start, stop in chunks:
            hist += count_chunk(start, stop)
        return hist

    with ThreadPoolExecutor(max_workers=jobs) as executor:
        future_to_chunk = {
            executor.submit(count_chunk, start, stop): (start, stop)
            for start, stop in chunks
        }
        for future in as_completed(future_to_chunk):
            start, stop = future_to_chunk[future]
            try:
                hist += future.result()
            except Exception as e:
                logger.error(f"Error counting points {start}..{stop}: {e}")
                raise
    return hist


def _report(field, gamma, hist, points, started, gl, m=None):
    classes, pure, char_sum = _fold(field, hist)
    n0, n1 = int(hist[0]), int(hist[1])
    report = CountReport(gamma, field.q, n0, n1, n0 - n1, char_sum, pure,
                         points, time.perf_counter() - started, gl, m,
                         classes)
    logger.info(f"{'framed ' if m else ''}gamma={gamma} over F_{field.q}: "
                f"{points} points in {report.elapsed:.3f}s")
    return report


def _trivial_report(gamma, q, D, started, gl, m=None):
    """Report when every point has Tr W = 0."""
    n = q**D
    return CountReport(gamma, q, n, 0, n, n, True, n,
                       time.perf_counter() - started, gl, m, [n])


def exp_sum_count(Q, W, gamma, field, jobs=DEFAULT_JOBS,
                  budget=DEFAULT_POINT_BUDGET, chunk_size=DEFAULT_CHUNK_SIZE,
                  check_congruence=True):
    """Fiber counts of Tr W over Rep_gamma(Q)(F_q).

    Parameters
    ----------
    Q: Quiver
        The quiver.
    W: Potential
        A potential on Q, quasi-homogeneous or zero.
    gamma: sequence of int
        Dimension vector.
    field: FiniteField
        The field F_q.
    jobs: int, optional
        Worker threads. Defaults to 1.
    budget: int, optional
        Largest number of points to enumerate.
    chunk_size: int, optional
        Points per enumeration chunk.
    check_congruence: bool, optional
        Require q = 1 (mod the scaling modulus of W). Defaults to True.

    Returns
    -------
    CountReport

    Raises
    ------
    CongruenceError
        q is not 1 modulo the scaling modulus.
    BudgetError
        q^rep_dim exceeds the budget.

    Examples
    --------
    >>> from quivdt.models import one_loop, doubled_a2
    >>> Q, W = one_loop(2)
    >>> r = exp_sum_count(Q, W, (1,), field_make(7))
    >>> r.n0, r.n1, r.e, r.pure
    (1, 3, -2, False)
    >>> Q, W = doubled_a2(1)
    >>> r = exp_sum_count(Q, W, (1, 1), field_make(5))
    >>> r.n0, r.n1, r.e
    (9, 8, 1)
    """
    started = time.perf_counter()
    _check_quiver(Q, W)
    gamma = dim_vector(Q, gamma)
    if check_congruence and not W.is_zero():
        _check_field(W, field)

    D = rep_dim(Q, gamma)
    gl = gl_order(gamma, field.q)
    if W.is_zero() or total(gamma) == 0:
        return _trivial_report(gamma, field.q, D, started, gl)
    if field.q**D > budget:
        raise BudgetError(f'{field.q}^{D} points for gamma={gamma} exceed '
                          f'the budget {budget}')

    blocks, _ = _layout(Q, gamma)
    hist = _enumerate(W, blocks, D, field, jobs, chunk_size)
    return _report(field, gamma, hist, field.q**D, started, gl)


def _stability_test(Q, gamma, m, field):
    """Predicate on batched framed matrices: the framing vectors generate
    the whole representation under the arrows."""
    n = total(gamma)
    offsets = np.concatenate([[0], np.cumsum(gamma)]).astype(int)

    def column_basis(S):
        R, _ = field.batch_echelon(np.swapaxes(S, -1, -2))
        if R.shape[1] < n:
            pad = np.zeros((R.shape[0], n - R.shape[1], n), dtype=np.int64)
            R = np.concatenate([R, pad], axis=1)
        return np.swapaxes(R[:, :n, :], -1, -2)

    def stable(mats):
        batch = len(next(iter(mats.values())))
        actions = []
        for a in Q.arrows:
            A = np.zeros((batch, n, n), dtype=np.int64)
            A[:, offsets[a.target]:offsets[a.target + 1],
              offsets[a.source]:offsets[a.source + 1]] = mats[a.name]
            actions.append(A)
        S = np.zeros((batch, n, m), dtype=np.int64)
        for v in range(Q.vertex_count):
            for k in range(m):
                h = mats[framing_arrow_name(v, k)]
                S[:, offsets[v]:offsets[v + 1], k] = h[:, :, 0]

        for _ in range(n):
            S = np.concatenate([S] + [field.matmul(A, S) for A in actions],
                               axis=-1)
            S = column_basis(S)
        return field.batch_rank(S) == n

    return stable


def framed_exp_sum_count(Q, W, gamma, m, field, jobs=DEFAULT_JOBS,
                         budget=DEFAULT_POINT_BUDGET,
                         chunk_size=DEFAULT_CHUNK_SIZE,
                         check_congruence=True):
    """Fiber counts of Tr W over stable framed points (rho, h).

    The framing h consists of m vectors at every vertex; a point is stable
    when they generate rho as a module over the path algebra. GL_gamma acts
    freely on the stable points, so every fiber count is divisible by
    gl_order(gamma, q).

    Raises
    ------
    ConsistencyError
        A fiber count is not divisible by gl_order(gamma, q).

    Examples
    --------
    >>> from quivdt.models import one_loop
    >>> Q, W = one_loop(2)
    >>> framed_exp_sum_count(Q, W, (1,), 1, field_make(7)).e
    -12
    >>> framed_exp_sum_count(Q, W, (1,), 2, field_make(7)).e
    -96
    >>> framed_exp_sum_count(Q, W, (0,), 1, field_make(7)).e
    1
    """
    started = time.perf_counter()
    _check_quiver(Q, W)
    gamma = dim_vector(Q, gamma)
    if check_congruence and not W.is_zero():
        _check_field(W, field)

    Qf, gamma_f = frame(Q, gamma, m)
    D = rep_dim(Qf, gamma_f)
    gl = gl_order(gamma, field.q)
    if total(gamma) == 0:
        return _trivial_report(gamma, field.q, 0, started, gl, m)
    if field.q**D > budget:
        raise BudgetError(f'{field.q}^{D} framed points for gamma={gamma} '
                          f'exceed the budget {budget}')

    blocks, _ = _layout(Qf, gamma_f)
    stable = _stability_test(Q, gamma, m, field)
    hist = _enumerate(W, blocks, D, field, jobs, chunk_size, stable)
    if (hist % gl).any():
        raise ConsistencyError(f'framed fiber counts at gamma={gamma}, '
                               f'q={field.q} are not divisible by {gl}')
    return _report(field, gamma, hist, field.q**D, started, gl, m)

#------------------------------------------------------------------------------
# Class counting
#------------------------------------------------------------------------------

def power_sum(field, coeff, exponent, s, degree=1):
    """sum_x psi(coeff x^exponent) over F_{q^degree}, from the Gauss sums of
    the calibrated field F_q lifted to the extension.

    Every nontrivial character of order dividing the exponent has Gauss sum
    -s_q over F_q and -s_q^degree over F_{q^degree}.

    Examples
    --------
    >>> F4 = field_make(2, 2)
    >>> power_sum(F4, 1, 3, -2), power_sum(F4, 1, 3, -2, 2)
    (4, -8)
    >>> power_sum(field_make(3, 2), 1, 2, -3, 3)
    27
    """
    if (field.q - 1) % exponent:
        raise CongruenceError(f'field size {field.q} is not 1 mod {exponent}')
    c = field.from_fraction(coeff)
    if c == 0:
        return field.q ** degree
    # c is an e-th power in F_{q^degree} iff its norm c^degree is one in F_q
    residue = (degree * int(field.log_table[c])) % exponent == 0
    return -(s ** degree) * (exponent * residue - 1)


def _series_exp(a, top):
    """Coefficients h_0..h_top of exp(sum_k a_k u^k), a = [a_1, a_2, ...]."""
    h = [Fraction(1)]
    for m in range(1, top + 1):
        h.append(sum((k * a[k - 1] * h[m - k] for k in range(1, m + 1)),
                     Fraction(0)) / m)
    return h


def cycle_char_sum(dims, Q, point_sum):
    """Character sum of psi(f(monodromy)) over representations of a cycle.

    The arrows of the cycle run v_1 -> v_2 -> ... -> v_L -> v_1 with
    dimensions `dims`, and f is a one-variable function whose point sum over
    F_{Q^k} is `point_sum(k)`. A representation splits into a nilpotent part
    and an invertible part of equal dimension m at every vertex; only the
    invertible part sees f, through the conjugacy class of its monodromy.

    Examples
    --------
    >>> cycle_char_sum([1], 4, lambda k: 4**k)
    Fraction(4, 1)
    >>> cycle_char_sum([1, 1], 9, lambda k: -(-3)**k)
    Fraction(33, 1)
    """
    top = min(dims)
    a = [Fraction(point_sum(k) - Q**k, k * (Q**k - 1))
         for k in range(1, top + 1)]
    h = _series_exp(a, top)
    L = len(dims)
    value = Fraction(0)
    for m, h_m in enumerate(h):
        rest = [n - m for n in dims]
        exponent = sum(rest[j] * rest[(j + 1) % L] for j in range(L))
        value += h_m * Fraction(Q**exponent, gl_order(rest, Q))
    return value * gl_order(dims, Q)


def class_char_sum(Q, W, gamma, field, s, degree=1):
    """Character sum of Tr W over Rep_gamma(Q)(F_{q^degree}), no enumeration.

    Applies when W is a sum of powers c C^e of cycles on disjoint arrow
    sets (`cycle_powers`) and F_q is calibrated with line element s. The
    sum factors over the cycles and the free arrows; each cycle contributes
    `cycle_char_sum` with the Gauss-sum lifted `power_sum`.

    Returns
    -------
    int or None
        The character sum, or None when W is not of this shape, s is
        unknown or some exponent does not divide q - 1.

    Examples
    --------
    >>> from quivdt.models import one_loop, doubled_a2
    >>> class_char_sum(*one_loop(2), (2,), field_make(2, 2), -2)
    112
    >>> class_char_sum(*doubled_a2(1), (1, 1), field_make(3, 2), -3)
    33
    >>> class_char_sum(*one_loop(1), (1,), field_make(5, 2), 5, degree=2)
    -25
    """
    _check_quiver(Q, W)
    gamma = dim_vector(Q, gamma)
    terms = cycle_powers(W)
    if terms is None or s is None or \
            any((field.q - 1) % t.exponent for t in terms):
        return None

    q_n = field.q ** degree
    value = Fraction(1)
    used = set()
    for t in terms:
        dims = [gamma[Q.arrow(a).source] for a in t.cycle]
        value *= cycle_char_sum(
            dims, q_n,
            lambda k, t=t: power_sum(field, t.coeff, t.exponent, s,
                                     degree * k))
        used.update(t.cycle)
    for a in Q.arrows:
        if a.name not in used:
            value *= q_n ** (gamma[a.source] * gamma[a.target])
    if value.denominator != 1:
        raise ConsistencyError(f'class sum {value} at gamma={gamma}, '
                               f'q={q_n} is not an integer')
    return int(value)

#------------------------------------------------------------------------------
# Calibration
#------------------------------------------------------------------------------

def gauss_periods(field, M):
    """Sums of psi over the cosets of the M-th powers in F_q^*.

    Coset j holds the elements whose discrete log is j mod M. Entries are
    None where the sum is not rational.

    Examples
    --------
    >>> gauss_periods(field_make(3, 2), 2)
    [1, -2]
    """
    q = field.q
    if (q - 1) % M:
        raise CongruenceError(f'field size {q} is not 1 mod {M}')
    nonzero = np.arange(1, q, dtype=np.int64)
    cosets = field.log_table[nonzero] % M
    periods = []
    for j in range(M):
        hist = np.zeros(q, dtype=np.int64)
        hist[nonzero[cosets == j]] = 1
        _, pure, value = _fold(field, hist)
        periods.append(value if pure else None)
    return periods


def line_element(field, M):
    """s_q = -g where g is the common rational Gauss sum of the nontrivial
    characters of order dividing M, or None if the field is not calibrated.

    Examples
    --------
    >>> [line_element(field_for(q), 2) for q in (9, 25, 49, 81)]
    [-3, 5, -7, 9]
    >>> [line_element(field_for(q), 3) for q in (4, 16, 25, 64)]
    [-2, 4, -5, -8]
    >>> line_element(field_for(7), 3) is None
    True
    """
    M = max(M, 2)
    if (field.q - 1) % M:
        return None
    periods = gauss_periods(field, M)
    if any(g is None for g in periods) or len(set(periods[1:])) != 1:
        return None
    g = periods[0] - periods[1]
    if g * g != field.q:
        return None
    s = -g
    logger.debug(f'F_{field.q} calibrated for M={M}: s = {s}')
    return s


def calibrated_fields(M, count, max_q=MAX_FIELD_SIZE):
    """The `count` smallest field sizes calibrated for M.

    Examples
    --------
    >>> calibrated_fields(2, 3), calibrated_fields(3, 3)
    ([9, 25, 49], [4, 16, 25])
    """
    M = max(M, 2)
    found = []
    for q in _even_prime_powers(min(max_q, MAX_FIELD_SIZE)):
        if len(found) == count:
            break
        if (q - 1) % M == 0 and _is_calibrated(q, M):
            found.append(q)
    if len(found) < count:
        raise BudgetError(f'only {len(found)} fields up to {max_q} are '
                          f'calibrated for M={M}, {count} needed')
    return found


@lru_cache(maxsize=None)
def _even_prime_powers(max_q):
    """p^k <= max_q with k even, ascending; only these can have an integer
    s_q with s_q^2 = q."""
    sizes = []
    p = 2
    while p * p <= max_q:
        q = p * p
        while q <= max_q:
            sizes.append(q)
            q *= p * p
        p = int(sympy.nextprime(p))
    return tuple(sorted(sizes))


@lru_cache(maxsize=None)
def _is_calibrated(q, M):
    return line_element(field_for(q), M) is not None


if __name__ == "__main__":
    import doctest
    doctest.testmod()

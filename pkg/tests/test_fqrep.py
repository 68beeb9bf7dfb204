"""
Test quivdt.fqrep: finite field arithmetic, exponential sum counts and the
calibration of line elements.
"""
import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from quivdt.errors import (InputError, BudgetError, CongruenceError)
from quivdt.fqrep import (field_make, field_for, gl_order, exp_sum_count,
                          framed_exp_sum_count, congruence_modulus,
                          gauss_periods, line_element, calibrated_fields,
                          power_sum, cycle_char_sum, class_char_sum)
from quivdt.models import (one_loop, one_loop_free, doubled_a2, milnor_example,
                           two_loop_cubic, two_loop_xyxy)
from quivdt.ncalg import Potential
from quivdt.quiver import Quiver


@pytest.mark.parametrize('q', [2, 4, 7, 8, 9, 25])
def test_field_axioms(q):
    F = field_for(q)
    a = np.arange(q, dtype=np.int64)
    A, B = np.meshgrid(a, a)
    # commutativity and distributivity over the full table
    assert (F.mul(A, B) == F.mul(B, A)).all()
    assert (F.add(A, B) == F.add(B, A)).all()
    for c in range(q):
        left = F.mul(c, F.add(A, B))
        right = F.add(F.mul(c, A), F.mul(c, B))
        assert (left == right).all()
    nonzero = a[1:]
    assert (F.mul(nonzero, F.inv(nonzero)) == 1).all()
    assert (F.sub(A, A) == 0).all()


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        field_make(5).inv(0)


@pytest.mark.parametrize('q', [4, 9, 27, 25])
def test_trace_classes_equinumerous(q):
    F = field_for(q)
    counts = np.bincount(F.trace_table, minlength=F.p)
    assert (counts == q // F.p).all()


def test_field_errors():
    with pytest.raises(InputError, match='not a prime power'):
        field_for(12)
    with pytest.raises(BudgetError):
        field_make(2, 13)


def test_from_fraction():
    assert field_make(7).from_fraction(Fraction(1, 2)) == 4
    assert field_make(7).from_fraction(-1) == 6
    with pytest.raises(CongruenceError):
        field_make(3).from_fraction(Fraction(1, 3))


def test_batch_rank():
    F = field_make(2)
    M = np.array([[[1, 1], [1, 1]], [[1, 0], [0, 1]], [[0, 0], [0, 0]]])
    assert F.batch_rank(M).tolist() == [1, 2, 0]


def test_gl_order():
    assert gl_order((1,), 9) == 8
    assert gl_order((2,), 3) == 48
    assert gl_order((0, 0), 5) == 1
    assert gl_order((1, 1), 4) == 9


def test_count_doubled_a2():
    Q, W = doubled_a2(1)
    r = exp_sum_count(Q, W, (1, 1), field_make(5))
    assert (r.n0, r.n1, r.e) == (9, 8, 1)
    assert r.points == 25
    assert r.gl_order == 16
    assert r.e_over_gl == Fraction(1, 16)


def test_count_independent_of_chunks_and_jobs():
    Q, W = doubled_a2(1)
    F = field_make(5)
    base = exp_sum_count(Q, W, (1, 2), F)
    split = exp_sum_count(Q, W, (1, 2), F, jobs=3, chunk_size=7)
    assert (base.n0, base.n1, base.char_sum) == \
        (split.n0, split.n1, split.char_sum)
    assert sum(base.trace_classes) == 5**4


@pytest.mark.parametrize('q', [9, 25, 49])
def test_quadratic_character_sum_is_gauss_sum(q):
    F = field_for(q)
    Q, W = one_loop(1)
    r = exp_sum_count(Q, W, (1,), F)
    assert r.pure
    assert r.char_sum == -line_element(F, 2)
    assert r.char_sum ** 2 == q


def test_count_free_potential():
    Q, W = one_loop_free()
    r = exp_sum_count(Q, W, (2,), field_make(3, 2))
    assert r.n0 == r.e == r.char_sum == 9**4
    assert r.n1 == 0


def test_count_budget_and_congruence():
    Q, W = doubled_a2(1)
    with pytest.raises(BudgetError):
        exp_sum_count(Q, W, (1, 1), field_make(5), budget=24)

    Q, W = one_loop(2)
    with pytest.raises(CongruenceError):
        exp_sum_count(Q, W, (1,), field_make(5))
    r = exp_sum_count(Q, W, (1,), field_make(5), check_congruence=False)
    assert r.n0 + r.n1 <= 5

    Q, W = milnor_example(2)
    assert congruence_modulus(W) is None
    with pytest.raises(InputError):
        exp_sum_count(Q, W, (1,), field_make(7))


def test_framed_count():
    Q, W = one_loop(2)
    F = field_make(7)
    r = framed_exp_sum_count(Q, W, (1,), 1, F)
    assert (r.n0, r.n1, r.e) == (6, 18, -12)
    assert r.m == 1
    assert r.points == 49


def test_framed_count_counts_generated_modules():
    # (x, h) with h a cyclic vector of x; the quotient by GL_2 is A^2
    Q, W = one_loop_free()
    q = 3
    r = framed_exp_sum_count(Q, W, (2,), 1, field_make(q))
    assert r.n0 % gl_order((2,), q) == 0
    assert r.n0 // gl_order((2,), q) == q**2


def test_gauss_periods():
    assert gauss_periods(field_make(3, 2), 2) == [1, -2]
    with pytest.raises(CongruenceError):
        gauss_periods(field_make(7), 4)


def test_line_element_and_calibration():
    assert line_element(field_make(5, 2), 2) == 5
    assert line_element(field_make(7), 2) is None
    assert calibrated_fields(2, 3) == [9, 25, 49]
    assert calibrated_fields(3, 3) == [4, 16, 25]
    with pytest.raises(BudgetError):
        calibrated_fields(2, 50, max_q=100)


def test_congruence_modulus():
    assert congruence_modulus(one_loop(1)[1]) == 2
    assert congruence_modulus(one_loop(2)[1]) == 3
    assert congruence_modulus(doubled_a2(2)[1]) == 3


PRIME_POWERS = [q for q in range(2, 65) if len(sympy.factorint(q)) == 1]


@pytest.mark.parametrize('q', PRIME_POWERS)
def test_one_loop_rank_one_fibers(q):
    # x^(d+1) = 0 has the single root 0; x^(d+1) = 1 has gcd(d+1, q-1) roots
    F = field_for(q)
    for d in range(1, 5):
        Q, W = one_loop(d)
        r = exp_sum_count(Q, W, (1,), F, check_congruence=False)
        assert r.n0 == 1
        assert r.e == 1 - math.gcd(d + 1, q - 1)


def test_calibrated_fields_are_even_prime_powers():
    assert calibrated_fields(4, 3) == [49, 81, 529]
    for M in (2, 3, 4):
        for q in calibrated_fields(M, 3):
            (_, k), = sympy.factorint(q).items()
            assert k % 2 == 0
            assert line_element(field_for(q), M) ** 2 == q
    # cached scans hand out fresh lists
    calibrated_fields(2, 2).append(0)
    assert calibrated_fields(2, 2) == [9, 25]


@pytest.mark.parametrize('q, c, e', [
    (9, 2, 2), (25, 2, 2), (25, 2, 3), (49, 3, 2), (16, 1, 3), (64, 1, 3),
    (25, 5, 3),
])
def test_power_sum_matches_enumeration(q, c, e):
    F = field_for(q)
    s = line_element(F, e)
    Q = Quiver(1, [('x', 0, 0)])
    W = Potential(Q, [(c, 'x' * e)])
    assert power_sum(F, c, e, s) == exp_sum_count(Q, W, (1,), F).char_sum


@pytest.mark.parametrize('q, e', [(4, 3), (9, 2), (25, 3)])
def test_power_sum_lifts_to_extensions(q, e):
    F, F2 = field_for(q), field_for(q * q)
    s = line_element(F, e)
    assert line_element(F2, e) == s**2
    Q = Quiver(1, [('x', 0, 0)])
    W = Potential(Q, [(1, 'x' * e)])
    assert power_sum(F, 1, e, s, 2) == exp_sum_count(Q, W, (1,), F2).char_sum


def test_cycle_char_sum_small_cases():
    # a single loop with f = 0: every matrix counts once
    assert cycle_char_sum([2], 3, lambda k: 3**k) == 3**4
    # a vertex of dimension 0 leaves no matrices on the cycle
    assert cycle_char_sum([2, 0], 5, lambda k: 0) == 1


@pytest.mark.parametrize('model, gammas, q', [
    (one_loop(1), [(1,), (2,)], 9),
    (one_loop(1), [(1,)], 25),
    (one_loop(2), [(1,), (2,)], 4),
    (one_loop(2), [(1,), (2,)], 16),
    (one_loop(3), [(1,)], 49),
    (two_loop_cubic(), [(1,), (2,)], 4),
    (two_loop_xyxy(), [(1,)], 9),
    (doubled_a2(1), [(1, 1), (1, 2), (2, 1)], 9),
    (doubled_a2(2), [(1, 1), (2, 1)], 4),
])
def test_class_char_sum_matches_enumeration(model, gammas, q):
    Q, W = model
    F = field_for(q)
    s = line_element(F, congruence_modulus(W))
    for gamma in gammas:
        r = exp_sum_count(Q, W, gamma, F)
        assert class_char_sum(Q, W, gamma, F, s) == r.char_sum


@pytest.mark.parametrize('model, gammas, q, degree', [
    (one_loop(2), [(1,), (2,)], 4, 2),
    (one_loop(1), [(1,)], 9, 2),
    (one_loop(1), [(1,)], 9, 3),
    (doubled_a2(1), [(1, 1)], 9, 2),
])
def test_class_char_sum_at_extensions(model, gammas, q, degree):
    Q, W = model
    F = field_for(q)
    s = line_element(F, congruence_modulus(W))
    big = field_for(q**degree)
    for gamma in gammas:
        r = exp_sum_count(Q, W, gamma, big)
        assert class_char_sum(Q, W, gamma, F, s, degree) == r.char_sum


def test_class_char_sum_needs_cycle_powers():
    Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    W = Potential(Q, [(1, 'xxy')])
    assert class_char_sum(Q, W, (1,), field_for(9), -3) is None
    assert class_char_sum(*one_loop(2), (1,), field_for(4), None) is None
    # 4 - 1 is not divisible by the exponent 2
    assert class_char_sum(*one_loop(1), (1,), field_for(4), -2) is None
    # large extensions need no field tables
    assert class_char_sum(*one_loop(1), (3,), field_for(25), 5, 3) is not None

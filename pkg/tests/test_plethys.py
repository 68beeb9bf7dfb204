"""
Test quivdt.plethys: Laurent polynomials, graded series, plethystic Exp/Log
and Laurent reconstruction.
"""
import random
from fractions import Fraction

import pytest

from quivdt.errors import (InputError, ResampleError, InterpolationError,
                           ConventionError)
from quivdt.plethys import (LaurentPoly, GradedSeries, adams, exp_series,
                            log_series, interpolate_laurent)
from quivdt.utils import Carrier

s = LaurentPoly.monomial(1, 1)


def numeric_series(q, G, coeff):
    """Numeric series {t: coeff(q)} that knows how to resample itself."""
    return GradedSeries({(1,): Fraction(coeff(q))}, G, 1, Carrier.NUMERIC,
                        q, resample=lambda n: numeric_series(q**n, G // n,
                                                             coeff))


def test_laurent_arithmetic():
    p = s + LaurentPoly.monomial(1, -1)
    assert str(p * p) == '1*s^-2 + 2 + 1*s^2'
    assert (p - p) == 0
    assert p.adams(3).exponents() == [-3, 3]
    assert p.evaluate(-3) == Fraction(-10, 3)
    assert (2 * p).at_one() == 4
    assert not LaurentPoly({0: 0})


def test_laurent_flags():
    assert LaurentPoly({-1: 1, 1: 1}).is_palindromic()
    assert not LaurentPoly({-1: 1, 1: 2}).is_palindromic()
    assert not LaurentPoly({0: -1}).is_nonnegative()
    assert not LaurentPoly({0: Fraction(1, 2)}).is_integral()


def test_adams_symbolic():
    f = GradedSeries({(1, 0): s, (0, 1): 1}, 4, 2)
    g = adams(f, 2)
    assert g[(2, 0)] == LaurentPoly.monomial(1, 2)
    assert g[(0, 2)] == 1
    assert g[(1, 0)] == 0


def test_exp_log_inverse():
    f = GradedSeries({(1,): s + LaurentPoly.monomial(1, -1),
                      (2,): LaurentPoly.constant(3),
                      (3,): LaurentPoly.monomial(-1, 2)}, 5, 1)
    assert log_series(exp_series(f)).equals(f)


def test_exp_two_vertices():
    f = GradedSeries({(1, 0): LaurentPoly.constant(1),
                      (0, 1): LaurentPoly.constant(1)}, 3, 2)
    g = exp_series(f)
    # Exp(t1 + t2) = 1 / ((1 - t1)(1 - t2))
    for gamma in [(0, 0), (1, 0), (1, 1), (2, 1), (0, 3)]:
        assert g[gamma] == 1
    assert log_series(g).equals(f)


def test_numeric_exp_matches_symbolic():
    symbolic = exp_series(GradedSeries({(1,): s**2}, 4, 1))
    numeric = exp_series(numeric_series(9, 4, lambda q: q))
    assert numeric.equals(symbolic.evaluate(3, base_q=9))
    assert numeric[(3,)] == 729


def test_numeric_exp_keeps_carrier():
    f = numeric_series(4, 3, lambda q: q + 1)
    g = exp_series(f)
    assert g.carrier == Carrier.NUMERIC
    assert g[(1,)] == 5


def test_numeric_without_resample():
    f = GradedSeries({(1,): Fraction(2)}, 3, 1, Carrier.NUMERIC, 4)
    with pytest.raises(ResampleError) as excinfo:
        exp_series(f)
    assert excinfo.value.q == 16
    assert excinfo.value.exit_code == 3


def test_exp_log_preconditions():
    with pytest.raises(InputError):
        exp_series(GradedSeries({(0,): 1}, 2, 1))
    with pytest.raises(InputError):
        log_series(GradedSeries({(0,): 2}, 2, 1))
    with pytest.raises(InputError):
        GradedSeries({(1, 1): 1}, 2, 1)


def test_interpolate_laurent():
    target = LaurentPoly({-2: 1, 0: 4, 2: 1})
    samples = [(x, target.evaluate(x)) for x in (-3, 5, -7, 9, 11)]
    assert interpolate_laurent(samples, 2) == target
    # extra samples act as residual checks
    more = samples + [(13, target.evaluate(13))]
    assert interpolate_laurent(more, 2) == target


def test_interpolate_errors():
    with pytest.raises(InterpolationError, match='needed'):
        interpolate_laurent([(-3, 1), (5, 1)], 1)
    with pytest.raises(InterpolationError, match='distinct'):
        interpolate_laurent([(-3, 1), (-3, 1), (5, 1)], 1)
    half = LaurentPoly({1: Fraction(1, 2)})
    samples = [(x, half.evaluate(x)) for x in (-3, 5, -7)]
    with pytest.raises(ConventionError):
        interpolate_laurent(samples, 1)
    assert interpolate_laurent(samples, 1, integral=False) == half


def random_laurent(rng, bound=2):
    return LaurentPoly({e: rng.randint(-3, 3)
                        for e in range(-bound, bound + 1)})


def random_series(rng, G, rank=1, start=1):
    coeffs = {}
    for total in range(start, G + 1):
        for head in range(total + 1 if rank == 2 else 1):
            gamma = (head, total - head) if rank == 2 else (total,)
            coeffs[gamma] = random_laurent(rng)
    return GradedSeries(coeffs, G, rank)


def test_log_inverts_exp_on_random_series():
    rng = random.Random(5)
    for _ in range(100):
        f = random_series(rng, 5)
        assert log_series(exp_series(f)).equals(f)


def test_adams_composes():
    rng = random.Random(6)
    for _ in range(20):
        f = random_series(rng, 12, rank=2)
        assert adams(adams(f, 3), 2).equals(adams(f, 6))
        assert adams(adams(f, 2), 3).equals(adams(f, 6))


def test_adams_is_ring_homomorphism():
    rng = random.Random(8)
    for _ in range(30):
        n = rng.randint(2, 4)
        f = random_series(rng, 6, rank=2, start=0)
        g = random_series(rng, 6, rank=2, start=0)
        assert adams(f + g, n).equals(adams(f, n) + adams(g, n))
        assert adams(f * g, n).equals(adams(f, n) * adams(g, n))


def test_exp_turns_sums_into_products():
    rng = random.Random(9)
    for _ in range(30):
        f, g = random_series(rng, 4, rank=2), random_series(rng, 4, rank=2)
        assert exp_series(f + g).equals(exp_series(f) * exp_series(g))


@pytest.mark.parametrize('bound', [1, 2, 3, 4])
def test_interpolation_recovers_random_polynomials(bound):
    rng = random.Random(bound)
    points = [-3, 5, -7, 9, 11, -13, 17, -19, 23][:2 * bound + 1]
    for _ in range(20):
        target = random_laurent(rng, bound)
        samples = [(x, target.evaluate(x)) for x in points]
        assert interpolate_laurent(samples, bound) == target

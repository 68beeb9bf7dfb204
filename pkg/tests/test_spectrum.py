"""
Test quivdt.spectrum: Hodge spectra and refined GV polynomials.
"""
from fractions import Fraction

import pytest
import sympy
from sympy.abc import x, y

from quivdt.errors import InputError, UnsupportedError
from quivdt.models import one_loop, doubled_a2, two_loop_cubic
from quivdt.spectrum import (BivariatePoly, steenbrink_spectrum,
                             sector_spectrum, refined_gv_poly, width_d_poly,
                             specialize)


@pytest.mark.parametrize('d', [1, 2, 3, 5])
def test_one_variable_spectrum(d):
    S = steenbrink_spectrum((1,), d + 1)
    assert S.mu == d
    assert list(S.spectral_numbers) == [Fraction(i, d + 1)
                                        for i in range(1, d + 1)]
    assert S.is_symmetric()


def test_two_variable_brieskorn():
    S = steenbrink_spectrum((2, 3), 12)     # x^6 + y^4
    assert S.mu == 15
    assert S.is_symmetric()
    assert min(S.spectral_numbers) == Fraction(5, 12)


def test_reduction_matches_brieskorn():
    S = steenbrink_spectrum((1, 1), 3)
    T = steenbrink_spectrum((1, 1), 3,
                            poly=sympy.Poly(x**3 + x * y**2, x, y))
    assert S.spectral_numbers == T.spectral_numbers


def test_non_brieskorn_needs_poly():
    with pytest.raises(UnsupportedError):
        steenbrink_spectrum((2, 3), 7)
    with pytest.raises(UnsupportedError):
        steenbrink_spectrum((1, 1, 1), 3)
    with pytest.raises(InputError):
        steenbrink_spectrum((0,), 3)


def test_sector_spectrum_not_isolated():
    Q, W = doubled_a2(1)
    with pytest.raises(UnsupportedError, match='not an isolated'):
        sector_spectrum(W, (1, 1), N_max=10)     # x^2 y^2


def test_sector_spectrum_one_loop():
    assert sector_spectrum(one_loop(4)[1], (1,)).to_text() == \
        '1/5, 2/5, 3/5, 4/5'
    assert sector_spectrum(two_loop_cubic()[1], (1,)).to_text() == \
        '2/3, 1, 1, 4/3'


@pytest.mark.parametrize('d', [1, 2, 3, 4])
def test_width_d_poly_matches_spectrum(d):
    P = refined_gv_poly(steenbrink_spectrum((1,), d + 1))
    assert P == width_d_poly(d)
    assert P == P.swap()


def test_specialization_ladder():
    P = width_d_poly(4)
    assert specialize(P, 'chi') == 4
    assert str(specialize(P, 'wtm')) == '4'
    Q = refined_gv_poly(steenbrink_spectrum((1, 1), 3))
    assert specialize(Q, 'chi') == 4
    assert specialize(Q, 'wtm').at_one() == 4


def test_bivariate_poly():
    P = BivariatePoly({(Fraction(1, 2), Fraction(1, 2)): 2,
                       (Fraction(-1, 2), Fraction(1, 2)): 0})
    assert str(P) == '2*z1^(1/2)*z2^(1/2)'
    assert str(BivariatePoly()) == '0'
    assert not BivariatePoly({(0, 0): 0})
    with pytest.raises(InputError):
        BivariatePoly({(Fraction(1, 3), 0): 1})

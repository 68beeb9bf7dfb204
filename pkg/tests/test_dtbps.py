"""
Test quivdt.dtbps: stack series, BPS extraction, checks, framed identity
and GV tables.
"""
from fractions import Fraction

import pytest

from quivdt.errors import InputError, UnsupportedError, TheoremViolation
from quivdt.dtbps import (stack_series, bps_values, bps_extract,
                          verify_theoremB, inject_adversarial,
                          projective_factor, framed_series, framed_bps_values,
                          hu_toda_series, framed_exp_check, gv_table,
                          milnor_sector, kac_check)
from quivdt.jacobi import truncated_dim_profile, finiteness_certificate
from quivdt.models import (one_loop, one_loop_free, doubled_a2,
                           milnor_example, two_loop_cubic)
from quivdt.ncalg import Potential
from quivdt.plethys import LaurentPoly, log_series
from quivdt.quiver import Quiver
from quivdt.spectrum import specialize


def test_stack_series_coefficients():
    assert stack_series(*one_loop(2), 1, 4)[(1,)] == Fraction(4, 3)
    assert stack_series(*one_loop_free(), 1, 9)[(1,)] == Fraction(9, 8)


def test_stack_series_vertex_without_loops():
    Q, W = doubled_a2(1)
    series = stack_series(Q, W, 1, 9)
    # Rep_(1,0) is a point, chi = 1 and BPS_SIGN * s = 3 at q = 9
    assert series[(1, 0)] == Fraction(3, 8)


def test_kac_check():
    Q, _ = one_loop_free()
    assert kac_check(Q, 2, 9).passed
    assert kac_check(Q, 2, 25).passed
    with pytest.raises(UnsupportedError):
        kac_check(two_loop_cubic()[0], 2, 9)


def test_bps_values_single_field():
    sample = bps_values(*one_loop(1), 2, 9)
    assert sample.s == -3
    assert sample.omegas[(1,)] == 1
    assert sample.omegas[(2,)] == 0


@pytest.mark.parametrize('d, fields', [
    (1, (9, 25, 49)),
    (2, (4, 16, 25)),
    (3, (49, 81, 529)),
])
def test_one_loop_bps_rank_three(d, fields):
    Q, W = one_loop(d)
    table = bps_extract(Q, W, 3)
    assert table.fields == fields
    assert table[(1,)].omega == LaurentPoly.constant(d)
    assert not table[(2,)].omega
    assert not table[(3,)].omega


def test_bps_values_past_field_tables():
    # psi_3 samples F_{25^3}, beyond the largest tabulated field
    sample = bps_values(*one_loop(1), 3, 25)
    assert [sample.omegas[(r,)] for r in (1, 2, 3)] == [1, 0, 0]
    sample = bps_values(*one_loop(3), 2, 81)
    assert (sample.omegas[(1,)], sample.omegas[(2,)]) == (3, 0)


def test_a2_bps_rank_four():
    Q, W = doubled_a2(1)
    table = bps_extract(Q, W, 4)
    assert len(table.entries) == 14
    nonzero = {e.gamma: str(e.omega) for e in table.entries if e.omega}
    assert nonzero == {(0, 1): '1', (1, 0): '1', (1, 1): '1'}
    for gamma in [(2, 0), (0, 2), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3),
                  (4, 0), (0, 4)]:
        assert table[gamma].omega_num == 0
    assert verify_theoremB(Q, W, table, jacobi_dim=6).passed


def test_stack_series_enumerates_other_potentials():
    Q = Quiver(1, [('x', 0, 0), ('y', 0, 0)])
    W = Potential(Q, [(1, 'xxy')])
    # sum psi(x^2 y) over F_9^2 is 9, only x = 0 survives the sum over y;
    # chi = -1 contributes 1/3
    assert stack_series(Q, W, 1, 9)[(1,)] == Fraction(3, 8)


def test_one_loop_bps(one_loop_bps):
    Q, W, table = one_loop_bps
    assert table.fields == (4, 16, 25)
    assert table.modulus == 3
    assert table[(1,)].omega == LaurentPoly.constant(2)
    assert table[(1,)].simple_sector
    assert not table[(2,)].omega
    assert not table[(2,)].simple_sector
    assert [r['gamma'] for r in table.to_records()] == [[1], [2]]


def test_a2_bps(a2_bps):
    Q, W, table = a2_bps
    nums = {e.gamma: e.omega_num for e in table.entries}
    assert nums == {(0, 1): 1, (0, 2): 0, (1, 0): 1, (1, 1): 1, (2, 0): 0}
    assert all(e.positive and e.palindromic for e in table.entries)


def test_verify_passes(a2_bps):
    Q, W, table = a2_bps
    report = verify_theoremB(Q, W, table, jacobi_dim=6)
    assert report.passed
    assert [e.status for e in report.entries] == ['pass'] * 4


def test_verify_detects_adversarial(a2_bps):
    Q, W, table = a2_bps
    bad = inject_adversarial(table, (1, 1))
    assert bad[(1, 1)].omega_num == 2
    report = verify_theoremB(Q, W, bad, jacobi_dim=6)
    assert not report.passed
    assert [e.check for e in report.failures()] == ['sum rule']


def test_verify_skips_sum_rule_without_certificate(one_loop_bps):
    Q, W, table = one_loop_bps
    Q2, W2 = two_loop_cubic()
    report = verify_theoremB(Q, W, table, jacobi_dim=2)
    assert report.passed
    # the two-loop reduction exceeds the path budget
    skipped = verify_theoremB(Q2, W2, table)
    assert skipped.passed
    assert skipped.entries[-1].status == 'skip'


def test_sum_rule_matches_jacobi_dimension(one_loop_bps):
    Q, W, table = one_loop_bps
    cert = finiteness_certificate(truncated_dim_profile(Q, W, 8))
    lhs = sum(e.gamma[0]**2 * e.omega_num for e in table.entries)
    assert lhs == cert.dim_total == 2


def test_bps_extract_field_errors():
    Q, W = one_loop(2)
    with pytest.raises(InputError, match='needed'):
        bps_extract(Q, W, 2, fields=[4, 16])
    with pytest.raises(UnsupportedError):
        bps_extract(*milnor_example(2), 1)


def test_bps_extract_strict_certificate():
    Q, W = one_loop(2)
    cert = finiteness_certificate(truncated_dim_profile(Q, W, 8))
    table = bps_extract(Q, W, 1, certificate=cert)
    assert table[(1,)].omega_num == 2


def test_projective_factor():
    assert projective_factor(1) == 1
    assert projective_factor(2) == LaurentPoly({-1: 1, 1: 1})
    assert projective_factor(4).at_one() == 4


def test_framed_series_values():
    f = framed_series(*one_loop(2), 2, 2, 4)
    assert f[(1,)] == 5
    assert f[(2,)] == Fraction(33, 4)
    assert framed_bps_values(*one_loop(2), 2, 2, 4).omegas[(1,)] == 2


def test_framed_identity_agrees_with_log():
    Q, W = one_loop(2)
    f = framed_series(Q, W, 1, 2, 4)
    log = log_series(f)
    # -Log = Omega c_1 with c_1 = 1
    assert -log[(1,)] == 2
    assert log[(2,)] == 0


def test_hu_toda_series():
    assert hu_toda_series({1: 2}, 2, 3) == [1, -4, 6, -4]
    assert hu_toda_series({1: 1}, 1, 2) == [1, 1, 0]
    assert hu_toda_series({}, 3, 2) == [1, 0, 0]


@pytest.mark.parametrize('m', [1, 2])
def test_framed_exp_check(one_loop_bps, m):
    Q, W, table = one_loop_bps
    report = framed_exp_check(Q, W, m, 2, fields=[4], bps=table)
    assert report.passed
    assert [e.status for e in report.entries] == ['pass'] * 3


def test_framed_exp_check_two_fields(one_loop_bps):
    Q, W, table = one_loop_bps
    report = framed_exp_check(Q, W, 2, 1, fields=[4, 16], bps=table)
    assert report.passed
    assert [e.check for e in report.entries][:4] == [
        'framed identity m=2 q=4', 'framing independence m=2 q=4',
        'framed identity m=2 q=16', 'framing independence m=2 q=16']
    assert len(report.entries) == 5


def test_framed_exp_check_detects_adversarial(one_loop_bps):
    Q, W, table = one_loop_bps
    report = framed_exp_check(Q, W, 1, 2, fields=[4],
                              bps=inject_adversarial(table))
    assert not report.passed


def test_gv_table(one_loop_bps):
    Q, W, table = one_loop_bps
    rows = gv_table(Q, W, 2, length=1, bps=table)
    assert [r.gv_num for r in rows] == [2, 0]
    assert str(rows[0].gv_bivariate) == \
        'z1^(-1/6)*z2^(1/6) + z1^(1/6)*z2^(-1/6)'
    assert rows[1].to_record()['gv_bivariate'] == '0'


@pytest.mark.parametrize('d', [3, 4])
def test_gv_table_higher_loops(d):
    rows = gv_table(*one_loop(d), 2, length=1)
    assert [r.gv_num for r in rows] == [d, 0]
    assert specialize(rows[0].gv_bivariate, 'chi') == d


def test_gv_table_errors(one_loop_bps, a2_bps):
    Q, W, table = one_loop_bps
    with pytest.raises(InputError, match='exceeds'):
        gv_table(Q, W, 3, bps=table)
    with pytest.raises(TheoremViolation):
        gv_table(Q, W, 1, length=0, bps=table)
    Q2, W2, table2 = a2_bps
    with pytest.raises(UnsupportedError):
        gv_table(Q2, W2, 1, bps=table2)


@pytest.mark.parametrize('e', [1, 2, 4])
def test_milnor_sector(e):
    entry = milnor_sector(*milnor_example(e))
    assert entry.omega_num == e
    assert entry.omega == LaurentPoly.constant(e)
    with pytest.raises(UnsupportedError):
        milnor_sector(*doubled_a2(1))

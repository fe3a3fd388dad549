import pytest

from drinfeld_hecke.errors import OutsideUnitDisk
from drinfeld_hecke.fq import fq_init
from drinfeld_hecke.metrics import discrepancy
from drinfeld_hecke.series import RField
from drinfeld_hecke.tate import TateSeries, omega_inverse, omega_series, omega_with_certificate


@pytest.mark.parametrize("p,e,w", [(2, 1, 1), (2, 1, 2), (3, 1, 2), (2, 2, 3), (5, 1, 4)])
def test_omega_functional_equation(p, e, w):
    F = RField(fq_init(p, e), w, 40)
    T = 6
    om = omega_series(F, T)
    lhs = TateSeries.t_minus(F.theta(), T) * om
    assert discrepancy(lhs, om.twist(1)) >= 40 - 3 * w


def test_omega_cutoff_certificate():
    F = RField(fq_init(3, 1), 2, 40)
    res = omega_with_certificate(F, 4)
    a = omega_series(F, 4, I=res.cutoff)
    b = omega_series(F, 4, I=res.cutoff + 1)
    assert a.same_window(b)


@pytest.mark.parametrize("p,w", [(2, 2), (3, 2)])
def test_omega_inverse(p, w):
    F = RField(fq_init(p, 1), w, 40)
    prod = omega_series(F, 5) * omega_inverse(F, 5)
    assert discrepancy(prod, TateSeries.constant(F.one(), 5)) >= 40 - 3 * w


def test_twist_composes_and_agrees_with_frobenius():
    F = RField(fq_init(2, 1), 2, 40)
    om = omega_series(F, 4)
    assert om.twist(1).twist(1).same_window(om.twist(2))
    assert om.twist(1).coeffs[2].agrees(om.coeffs[2].frob(1))


@pytest.mark.parametrize("p", [2, 3])
def test_constant_term_is_the_root(p):
    F = RField(fq_init(p, 1), 2, 40)
    # every factor of the product is 1 at t = 0
    assert omega_series(F, 3).coeffs[0].agrees(F.root())


def test_evaluation_refuses_big_points():
    F = RField(fq_init(2, 1), 2, 30)
    om = omega_series(F, 3)
    with pytest.raises(OutsideUnitDisk):
        om.at(F.theta(), 0)
    # t = 0 gives the constant term
    assert om.at(F.zero(), om.gauss_valuation()).agrees(om.coeffs[0])

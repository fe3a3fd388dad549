from drinfeld_hecke.fq import fq_init
from drinfeld_hecke.metrics import discrepancy, passes, product_scale, strictly_increasing, vanishing, worst
from drinfeld_hecke.series import RField
from drinfeld_hecke.tate import TateSeries

F = RField(fq_init(2, 1), 1, 30)


def test_discrepancy_counts_agreeing_digits():
    a = F.one()
    b = F.one() + F.monomial(1, 7)
    assert discrepancy(a, b) == 7
    assert discrepancy(a, a) is None
    # relative to size: scaling both sides leaves the figure unchanged
    th = F.theta()
    assert discrepancy(a * th, b * th) == 7


def test_scale_argument_and_vanishing():
    x = F.monomial(1, 12)
    assert discrepancy(x, F.zero(), scale=2) == 10
    assert vanishing(x, 2) == 10
    assert vanishing(F.zero(), 0) is None


def test_tate_uses_gauss_valuation():
    s = TateSeries.from_coeffs([F.one(), F.monomial(1, 3)])
    t = TateSeries.from_coeffs([F.one(), F.monomial(1, 3) + F.monomial(1, 9)])
    assert discrepancy(s, t) == 9


def test_helpers():
    assert worst([None, 5, 3]) == 3 and worst([None]) is None
    assert passes(None, 10) and passes(10, 10) and not passes(9, 10)
    assert product_scale([F.one(), F.theta()], [F.monomial(1, 4), F.one()]) == -1
    assert strictly_increasing([1, 3, None]) and not strictly_increasing([2, 2])

import numpy as np
import pytest
from hypothesis import given, strategies as st

from drinfeld_hecke.errors import ContextMismatch, InversionOfZero, RamificationNotDivisible
from drinfeld_hecke.fq import fq_init, parse_apoly
from drinfeld_hecke.series import RamifiedSeries, RField

F3 = RField(fq_init(3, 1), 2, 30)
F4 = RField(fq_init(2, 2), 3, 30)


def elements(F, exact=False):
    return st.builds(lambda seed, v, n: F.random(np.random.default_rng(seed), v, n, exact=exact),
                     st.integers(0, 2**32 - 1), st.integers(-8, 8), st.integers(1, 25))


@pytest.mark.parametrize("F", [F3, F4], ids=["q3", "q4"])
@given(data=st.data())
def test_ring_laws(F, data):
    a, b, c = (data.draw(elements(F)) for _ in range(3))
    assert ((a + b) * c).agrees(a * c + b * c)
    assert ((a * b) * c).agrees(a * (b * c))
    assert (a - a).is_zero()
    assert (a * b).agrees(b * a)


@pytest.mark.parametrize("F", [F3, F4], ids=["q3", "q4"])
@given(data=st.data())
def test_inverse(F, data):
    a = data.draw(elements(F))
    assert (a * a.inv()).agrees(F.one())
    assert (a.inv().inv()).agrees(a)


@pytest.mark.parametrize("F", [F3, F4], ids=["q3", "q4"])
@given(data=st.data())
def test_frobenius_is_a_ring_homomorphism(F, data):
    a, b = data.draw(elements(F)), data.draw(elements(F))
    assert (a * b).frob(1).agrees(a.frob(1) * b.frob(1))
    assert (a + b).frob(2).agrees(a.frob(2) + b.frob(2))
    assert a.frob(1).agrees(a ** F.q)


def test_relative_precision_cap():
    F = RField(fq_init(2, 1), 1, 20)
    x = F.random(np.random.default_rng(0), -5, 40, exact=False)
    assert x.rel_prec <= 20
    assert F.theta().exact


def test_theta_and_polynomials(field):
    fq = field.fq
    a = parse_apoly(fq, "θ^3+θ+1")
    th = field.theta()
    assert field.from_apoly(a).agrees(th**3 + th + field.one())
    assert field.from_apoly(a, 1).agrees(field.from_apoly(a).frob(1))
    # π^{-w} = −θ
    assert (field.pi() ** (-field.w)).agrees(-th)
    assert field.theta().valuation == -field.w


def test_root_is_a_q_minus_1_root_of_minus_theta(field):
    rt = field.root()
    assert (rt ** (field.q - 1)).agrees(-field.theta())


@given(elements(F3))
def test_json_roundtrip(x):
    y = RamifiedSeries.from_json(F3, x.to_json())
    assert y.same_window(x)


def test_errors():
    with pytest.raises(RamificationNotDivisible):
        RField(fq_init(3, 1), 1, 10)
    with pytest.raises(InversionOfZero):
        F3.zero().inv()
    with pytest.raises(ContextMismatch):
        F3.one() + F4.one()

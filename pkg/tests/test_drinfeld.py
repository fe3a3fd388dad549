import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from drinfeld_hecke.drinfeld import (
    Lattice,
    agf_functional_check,
    carlitz_D,
    carlitz_data,
    drinfeld_from_lattice,
    eval_poly,
    finite_space_exp,
    goss_oracle,
    goss_polys,
    lattice_exp_poly,
    reduce_basis,
    stable_exp,
)
from drinfeld_hecke.errors import PrecisionExhausted
from drinfeld_hecke.fq import APoly, fq_init
from drinfeld_hecke.forms import omega_point_standard
from drinfeld_hecke.metrics import discrepancy, passes, worst
from drinfeld_hecke.series import RField


def fld(p, w, prec=40, e=1):
    return RField(fq_init(p, e), w, prec)


@pytest.mark.parametrize("p,w", [(2, 2), (3, 2), (2, 3)])
def test_additive_matches_dense_product(p, w):
    F = fld(p, w)
    L = omega_point_standard(F, (1, 0)).lattice()
    a = lattice_exp_poly(L, 1, 3, "additive")
    b = lattice_exp_poly(L, 1, 3, "dense")
    assert all(x.agrees(y) for x, y in zip(a, b))


@pytest.mark.parametrize("p", [2, 3])
def test_carlitz_exp_coefficients_are_inverse_factorials(p):
    F = fld(p, 2)
    C = carlitz_data(F, 4)
    al, _, _ = stable_exp(C.lattice(), (), 3, D0=1)
    for n in range(4):
        assert passes(discrepancy(al[n], C.D_series(n).inv()), 40 - 6)


def test_literal_factorial_recursion_is_not_the_exp_coefficient():
    F = fld(2, 2)
    C = carlitz_data(F, 4)
    al, _, _ = stable_exp(C.lattice(), (), 3, D0=1)
    lit = carlitz_D(F.fq, 3, literal=True)
    # agrees up to n = 1, then differs
    assert al[1].agrees(F.from_apoly(lit[1]).inv())
    assert not al[2].agrees(F.from_apoly(lit[2]).inv())


@pytest.mark.parametrize("p", [2, 3])
def test_carlitz_exp_functional_equation(p):
    """e(θz) = θ e(z) + e(z)^q."""
    F = fld(p, 2)
    C = carlitz_data(F, 4)
    z = F.random(np.random.default_rng(p), -1, 30, exact=True)
    th = F.theta()
    _, (ez, ethz), _ = stable_exp(C.lattice(), [z, th * z], 0, D0=1)
    assert discrepancy(ethz, th * ez + ez ** F.q) >= 40 - 6


@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2), (2, 3, 3)])
def test_agf_functional_equation_at_periods(p, r, w):
    F = fld(p, w)
    P = omega_point_standard(F, tuple(range(r - 1, -1, -1)))
    E = drinfeld_from_lattice(P.lattice())
    for zi in P.z:
        a, b = agf_functional_check(E, zi, 4)
        assert a - b >= 40 - 3 * w


def test_reduce_basis_orthogonalizes_without_changing_the_lattice():
    F = fld(2, 2)
    th = F.theta()
    z1, z2 = F.pi() ** -3, F.one()
    # sheared basis: the first vector now has even valuation, like z2
    b = (z1 + th**3 * z2, z2)
    red = reduce_basis(b)
    vals = [x.valuation % F.w for x in red]
    assert len(set(vals)) == len(vals)
    x = F.random(np.random.default_rng(0), 1, 30, exact=True)
    _, (e1,), _ = stable_exp(Lattice(red, "reduced"), [x], 0, D0=2)
    _, (e2,), _ = stable_exp(Lattice((z1, z2), "orig"), [x], 0, D0=2)
    assert discrepancy(e1, e2) >= 30


def test_reduce_basis_detects_dependence():
    F = fld(2, 2)
    with pytest.raises(PrecisionExhausted):
        reduce_basis((F.one(), F.theta()))


def _space(F, dim, seed):
    rng = np.random.default_rng(seed)
    return [F.random(rng, -(F.w * 2 * i + i), 12, exact=True) for i in range(dim)]


@pytest.mark.parametrize("p", [2, 3])
@settings(max_examples=8)
@given(seed=st.integers(0, 10**6), dim=st.integers(1, 2))
def test_goss_polynomials_match_brute_force(p, seed, dim):
    F = fld(p, 2, 30)
    q = F.q
    basis = _space(F, dim, seed)
    G = goss_polys(basis, q * q)
    eta = finite_space_exp(basis)
    rng = np.random.default_rng(seed + 1)
    x = F.random(rng, 3, 10, exact=True)
    ex = x
    for i in range(1, len(eta)):
        ex = ex + eta[i] * x.frob(i)
    u = ex.inv()
    ds = [discrepancy(eval_poly(G[n - 1], u), goss_oracle(basis, n, x)) for n in range(1, q * q + 1)]
    assert passes(worst(ds), 30 - 6)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_goss_shape(p):
    F = fld(p, p - 1 if p > 2 else 1, 30)
    q = F.q
    G = goss_polys(_space(F, 2, 3), q * q)
    for n in range(1, q + 1):
        # G_n = X^n for n ≤ q
        assert len(G[n - 1]) == n + 1
        assert all(c.is_zero() for c in G[n - 1][:n]) and G[n - 1][n].agrees(F.one())
    for n in range(2, q * q + 1):
        assert G[n - 1][0].is_zero() and G[n - 1][1].is_zero()

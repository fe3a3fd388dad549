import pytest

from drinfeld_hecke.errors import NonPolynomialInverse, NotIrreducible, NotMonic
from drinfeld_hecke.fq import APoly, all_apolys, fq_init, parse_apoly
from drinfeld_hecke.forms import PointForms, omega_point_standard, unitriangular, weight_h
from drinfeld_hecke.hecke import (
    coset_count,
    coset_reps,
    eigenvalue,
    hecke_scalar,
    rho_inverse_factor,
    slash_scalar,
    sum2_check,
)
from drinfeld_hecke.metrics import discrepancy, passes, worst
from drinfeld_hecke.series import RField

F2 = fq_init(2, 1)
GUARD = 32


def point(p, r, w, prec=40 + GUARD):
    return omega_point_standard(RField(fq_init(p, 1), w, prec), tuple(range(r - 1, -1, -1)))


def test_coset_example_rank_two_over_f2():
    th = APoly.theta(F2)
    one, zero = APoly.const(F2, 1), APoly(F2)
    mats = {rep.matrix for rep in coset_reps(th, 2)}
    assert mats == {((th, zero), (zero, one)), ((one, zero), (zero, th)), ((one, one), (zero, th))}


@pytest.mark.parametrize("p,r,prime,n", [(3, 2, "θ", 4), (2, 3, "θ", 7), (2, 3, "θ^2+θ+1", 21), (2, 2, "θ+1", 3)])
def test_coset_counts(p, r, prime, n):
    fq = fq_init(p, 1)
    P = parse_apoly(fq, prime)
    assert len(coset_reps(P, r)) == n == coset_count(fq.q, r, P.degree)


def test_coset_prime_guards():
    with pytest.raises(NotIrreducible):
        coset_reps(parse_apoly(F2, "θ^2+1"), 2)
    with pytest.raises(NotMonic):
        coset_reps(parse_apoly(fq_init(3, 1), "2θ+1"), 2)


def test_slash_by_identity_and_translations():
    P = point(2, 2, 2)
    fq = P.field.fq
    one, zero = APoly.const(fq, 1), APoly(fq)
    f = lambda Q: PointForms(Q).h
    k = weight_h(2, 2)
    h0 = f(P)
    assert passes(discrepancy(slash_scalar(f, k, ((one, zero), (zero, one)), P), h0), 40)
    # translations z1 ↦ z1 + a z2 have j = 1
    g = unitriangular(fq, [APoly.theta(fq)])
    assert passes(discrepancy(slash_scalar(f, k, g, P), h0), 40)


@pytest.mark.parametrize("p,r,prime", [(2, 2, "θ"), (3, 2, "θ+1"), (2, 3, "θ^2+θ+1")])
def test_hecke_of_constant_counts_cosets(p, r, prime):
    """f ≡ 1 in weight 0: T_𝔭 1 = #cosets = Σ_ℓ q^{(ℓ−1)d}, read in F_q."""
    P = point(p, r, r if p == 2 else 2, 30)
    F = P.field
    pp = parse_apoly(F.fq, prime)
    val = hecke_scalar(lambda Q: F.one(), 0, pp, P)
    n = coset_count(F.q, r, pp.degree)
    assert val.agrees(F.scalar(F.fq.from_int(n % p)))


def test_rho_inverse_factor_needs_unit_det_for_type_zero():
    th = APoly.theta(F2)
    one, zero = APoly.const(F2, 1), APoly(F2)
    g = ((th, zero), (zero, one))
    assert rho_inverse_factor(g, 1) == ((one, zero), (zero, th))
    with pytest.raises(NonPolynomialInverse):
        rho_inverse_factor(g, 0)


def test_eigenvalue():
    th = APoly.theta(F2)
    assert eigenvalue(th, 2) == th and eigenvalue(th, 3) == th**3
    fq3 = fq_init(3, 1)
    assert eigenvalue(APoly.theta(fq3), 3) == APoly.theta(fq3) ** 4


@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2)])
def test_h_is_hecke_eigenform(p, r, w):
    P = point(p, r, w)
    F = P.field
    pp = APoly.theta(F.fq) + APoly.const(F.fq, 1)
    f = lambda Q: PointForms(Q).h
    lhs = hecke_scalar(f, weight_h(F.q, r), pp, P)
    assert passes(discrepancy(lhs, f(P) * F.from_apoly(eigenvalue(pp, r))), 40 - 3 * w)


@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2), (2, 3, 3)])
def test_coset_exponential_sum(p, r, w):
    P = point(p, r, w)
    pp = APoly.theta(P.field.fq)
    assert len(all_apolys(P.field.fq, pp.degree - 1)) == P.field.q  # the b_1-sum has q terms
    for ell in range(2, r + 1):
        lhs, rhs, rel1 = sum2_check(P, pp, ell)
        assert (len(rel1) > 0) == (ell == r)
        ds = [discrepancy(lhs, rhs)] + [discrepancy(a, b) for a, b in rel1]
        assert passes(worst(ds), 40 - 3 * w)

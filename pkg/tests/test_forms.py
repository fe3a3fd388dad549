import numpy as np
import pytest

from drinfeld_hecke import _kernels as K
from drinfeld_hecke.errors import CollidingValuations, DepthTooSmall, SingularMatrix
from drinfeld_hecke.fq import APoly, fq_init
from drinfeld_hecke.forms import (
    Budget,
    PointForms,
    apoly_adjugate,
    apoly_det,
    gl_action,
    h_bruteforce,
    monic_tuples,
    omega_point_standard,
    random_gl,
    unitriangular,
    weight_h,
)
from drinfeld_hecke.metrics import discrepancy, passes
from drinfeld_hecke.series import RField

GUARD = 32


def point(p, r, w, prec=40):
    return omega_point_standard(RField(fq_init(p, 1), w, prec), tuple(range(r - 1, -1, -1)))


def matmul(X, Y):
    r = len(X)
    zero = APoly(X[0][0].fq)
    return tuple(tuple(sum((X[i][k] * Y[k][j] for k in range(r)), zero) for j in range(r)) for i in range(r))


def test_standard_point_needs_distinct_classes():
    F = RField(fq_init(2, 1), 2, 20)
    with pytest.raises(CollidingValuations):
        omega_point_standard(F, (2, 0))
    with pytest.raises(CollidingValuations):
        omega_point_standard(F, (0, 1))
    assert omega_point_standard(F, (1, 0)).certificate == "distinct valuations"


@pytest.mark.parametrize("p,r", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_adjugate(p, r):
    fq = fq_init(p, 1)
    rng = np.random.default_rng(r)
    for _ in range(5):
        g = random_gl(fq, r, rng)
        d = apoly_det(g)
        assert d.degree == 0  # GL_r(A) has unit determinant
        prod = matmul(g, apoly_adjugate(g))
        for i in range(r):
            for j in range(r):
                assert prod[i][j] == (d if i == j else APoly(fq))


@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2), (2, 3, 3)])
def test_automorphy_factor_cocycle(p, r, w):
    P = point(p, r, w, 40 + GUARD)
    fq = P.field.fq
    rng = np.random.default_rng(5)
    for _ in range(4):
        g, h = random_gl(fq, r, rng), random_gl(fq, r, rng)
        hz, jh = gl_action(h, P)
        _, jg = gl_action(g, hz)
        _, jgh = gl_action(matmul(g, h), P)
        assert passes(discrepancy(jgh, jg * jh), 40)


def test_singular_matrix_rejected():
    P = point(2, 2, 2)
    fq = P.field.fq
    one, zero = APoly.const(fq, 1), APoly(fq)
    with pytest.raises(SingularMatrix):
        gl_action(((one, one), (one, one)), P)
    ((a, b), (c, d)) = unitriangular(fq, [APoly.theta(fq)])
    assert b == APoly.theta(fq) and c.is_zero()


@pytest.mark.parametrize("q,r", [(2, 2), (3, 2), (2, 3), (4, 3)])
def test_monic_tuples(q, r):
    nus = list(monic_tuples(q, r))
    assert len(nus) == (q**r - 1) // (q - 1) == weight_h(q, r)
    assert len(set(nus)) == len(nus)


@pytest.mark.parametrize("backend", K.available_backends())
@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2), (2, 3, 3)])
def test_h_matches_enumeration(p, r, w, backend):
    P = point(p, r, w)
    pf = PointForms(P, Budget())
    D = 3 if r == 2 else 2
    with K.use_backend(backend):
        hb = h_bruteforce(P, D)
    assert passes(discrepancy(pf.h, hb), 40 - 3 * w)


@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2), (2, 3, 3)])
def test_h_is_modular_of_weight_and_type_one(p, r, w):
    """h(γz) = det(γ)^{-1} j(γ;z)^k h(z) with k = (q^r−1)/(q−1)."""
    P = point(p, r, w, 40 + GUARD)
    F = P.field
    k = weight_h(F.q, r)
    h0 = PointForms(P).h
    rng = np.random.default_rng(11)
    for _ in range(3):
        g = random_gl(F.fq, r, rng)
        Q, j = gl_action(g, P)
        det = F.scalar(apoly_det(g).lead)
        assert passes(discrepancy(PointForms(Q).h, det.inv() * j**k * h0), 40 - 3 * w)


@pytest.mark.parametrize("p,r,w", [(2, 2, 2), (3, 2, 2), (2, 3, 3)])
def test_H_specializes_to_h(p, r, w):
    pf = PointForms(point(p, r, w))
    q = pf.q
    k = (q ** (r - 1) - 1) // (q - 1)
    assert passes(discrepancy(pf.H_at(r - 1), pf.pi_power(k) * pf.h), 40 - 3 * w)
    with pytest.raises(DepthTooSmall):
        pf.H_at(r - 2)

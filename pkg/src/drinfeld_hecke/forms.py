"""Points of Ω^r, the GL_r(A) action, twisted Eisenstein series, h_r, 𝓗_r, 𝓖_i, χ and u.

Most quantities attached to a point are gathered by :class:`PointForms`,
which computes lazily and caches (exp data, AGFs, h_r, Eisenstein values).
The module-level functions are thin wrappers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from . import _kernels as K
from .drinfeld import (
    AGFSeries,
    CarlitzData,
    ExpLogData,
    Lattice,
    additive_exp,
    agf_build,
    carlitz_data,
    drinfeld_from_lattice,
    stable_exp,
)
from .errors import (
    CollidingValuations,
    DepthTooSmall,
    EnumerationBudgetExceeded,
    NoStabilization,
    PoleHit,
    PrecisionExhausted,
    SingularMatrix,
    VanishingJ,
)
from .fq import APoly
from .series import INF, RField, RamifiedSeries
from .tate import TateSeries, omega_inverse, omega_series

BRUTE_BUDGET = 2**20


# ---------------------------------------------------------------------------
# points and the GL_r action
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OmegaPoint:
    z: tuple
    certificate: str = "distinct valuations"
    exponents: tuple | None = None
    provenance: tuple = ()

    @property
    def r(self) -> int:
        return len(self.z)

    @property
    def field(self) -> RField:
        return self.z[0].field

    def lattice(self) -> Lattice:
        return Lattice(self.z, self.certificate)

    def reduced_lattice(self) -> Lattice:
        """Same lattice, orthogonal basis; exp data depends only on the lattice."""
        if self.certificate == "distinct valuations":
            return self.lattice()
        return self.lattice().reduced()

    def tilde(self) -> "OmegaPoint":
        """z̃ = (z_2, …, z_r) ∈ Ω^{r−1}."""
        ex = self.exponents[1:] if self.exponents else None
        return OmegaPoint(self.z[1:], self.certificate, ex, self.provenance + ("tilde",))

    def with_z1(self, z1: RamifiedSeries, note: str = "z1 replaced") -> "OmegaPoint":
        return OmegaPoint((z1,) + self.z[1:], note, None, self.provenance + (note,))

    def describe(self) -> dict:
        return {"exponents": list(self.exponents) if self.exponents else None,
                "certificate": self.certificate, "provenance": list(self.provenance)}


def omega_point_standard(F: RField, exponents: Sequence[int]) -> OmegaPoint:
    """z_i = π^{−e_i}; the e_i must be pairwise distinct modulo w and e_r = 0."""
    exps = tuple(int(e) for e in exponents)
    if not exps or exps[-1] != 0:
        raise CollidingValuations("the last exponent must be 0 (z_r = 1)")
    residues = [e % F.w for e in exps]
    if len(set(residues)) != len(residues):
        raise CollidingValuations(f"exponents {exps} are not distinct modulo w = {F.w}")
    z = tuple(F.monomial(1, -e) for e in exps)
    return OmegaPoint(z, "distinct valuations", exps)


def standard_exponents(q: int, r: int, w: int) -> tuple[int, ...]:
    """A default admissible exponent vector: (r−1, …, 1, 0) scaled to fit in [0, w)."""
    if r > w:
        raise CollidingValuations(f"rank {r} needs w ≥ {r} for distinct residues")
    return tuple(range(r - 1, -1, -1))


def apoly_matrix(fq, rows) -> tuple:
    return tuple(tuple(x if isinstance(x, APoly) else APoly(fq, tuple(x) if isinstance(x, (list, tuple)) else (x,))
                       for x in row) for row in rows)


def apoly_det(M) -> APoly:
    n = len(M)
    fq = M[0][0].fq
    acc = APoly(fq)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = APoly.const(fq, 1)
        for i, j in enumerate(perm):
            term = term * M[i][j]
            if term.is_zero():
                break
        if term.is_zero():
            continue
        acc = acc + term if sign > 0 else acc - term
    return acc


def _perm_sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def apoly_adjugate(M) -> tuple:
    n = len(M)
    fq = M[0][0].fq
    if n == 1:
        return ((APoly.const(fq, 1),),)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[M[a][b] for b in range(n) if b != j] for a in range(n) if a != i]
            c = apoly_det(minor)
            out[j][i] = c if (i + j) % 2 == 0 else -c
    return tuple(tuple(r) for r in out)


def gl_action(gamma, point: OmegaPoint):
    """(γ·z, j(γ;z)) with the last entry renormalized to 1."""
    F = point.field
    r = point.r
    if apoly_det(gamma).is_zero():
        raise SingularMatrix("det γ = 0")
    rows = []
    for i in range(r):
        acc = F.zero()
        for k in range(r):
            a = gamma[i][k]
            if not a.is_zero():
                acc = acc + F.from_apoly(a) * point.z[k]
        rows.append(acc)
    j = rows[-1]
    if j.is_zero():
        raise VanishingJ("j(γ;z) vanishes to working precision")
    jinv = j.inv()
    z = tuple(x * jinv for x in rows[:-1]) + (F.one(),)
    tag = "γ=" + ";".join(",".join(str(a) for a in row) for row in gamma)
    return OmegaPoint(z, "image of a certified point", None, point.provenance + (tag,)), j


def random_gl(fq, r: int, rng: np.random.Generator, steps: int = 2, max_deg: int = 1):
    """A random element of GL_r(A) with all entries of degree ≤ max_deg.

    Products of elementary, permutation and unit-diagonal matrices, rejected
    until the entry-degree bound holds (large entries push γ·z far from the
    reduced domain, which costs precision in the AGF evaluation there).
    """
    one, zero = APoly.const(fq, 1), APoly(fq)

    def mul(X, Y):
        return [[sum((X[i][k] * Y[k][j] for k in range(r)), zero) for j in range(r)] for i in range(r)]

    while True:
        M = [[one if i == j else zero for j in range(r)] for i in range(r)]
        for _ in range(steps):
            i, j = rng.choice(r, size=2, replace=False)
            deg = int(rng.integers(0, max_deg + 1))
            a = APoly(fq, tuple(int(x) for x in rng.integers(0, fq.q, size=deg + 1)))
            E = [[one if a_ == b_ else zero for b_ in range(r)] for a_ in range(r)]
            E[i][j] = a
            M = mul(E, M)
        if rng.random() < 0.5:
            perm = rng.permutation(r)
            P = [[one if perm[a_] == b_ else zero for b_ in range(r)] for a_ in range(r)]
            M = mul(P, M)
        if fq.q > 2:
            Dg = [[APoly.const(fq, int(rng.integers(1, fq.q))) if a_ == b_ else zero for b_ in range(r)]
                  for a_ in range(r)]
            M = mul(Dg, M)
        if all(x.degree <= max_deg for row in M for x in row):
            return tuple(tuple(row) for row in M)


def unitriangular(fq, avec: Sequence[APoly]) -> tuple:
    """γ_{a_1..a_{r−1}}: identity with first row (1, a_1, …, a_{r−1})."""
    r = len(avec) + 1
    one, zero = APoly.const(fq, 1), APoly(fq)
    M = [[one if i == j else zero for j in range(r)] for i in range(r)]
    for k, a in enumerate(avec):
        M[0][k + 1] = a
    return tuple(tuple(row) for row in M)


# ---------------------------------------------------------------------------
# settings and shared constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Budget:
    T: int = 4
    D0: int = 1
    Dmax: int = 30
    ncut: int | None = None


@lru_cache(maxsize=32)
def carlitz_for(F: RField, M: int = 6) -> CarlitzData:
    return carlitz_data(F, M)


@lru_cache(maxsize=64)
def omega_for(F: RField, T: int) -> TateSeries:
    return omega_series(F, T)


@lru_cache(maxsize=64)
def omega_inv_for(F: RField, T: int) -> TateSeries:
    return omega_inverse(F, T)


def omega_agf(C: CarlitzData, M: int | None = None) -> AGFSeries:
    """ω = Σ_m (π̃^{q^m}/D_m)/(θ^{q^m} − t)."""
    E = C.explog(C.M + 1)
    return agf_build(E, C.pi_tilde, None)


def weight_h(q: int, r: int) -> int:
    return (q**r - 1) // (q - 1)


# ---------------------------------------------------------------------------
# per-point engine
# ---------------------------------------------------------------------------

class PointForms:
    """Lazily computed forms at a fixed point z ∈ Ω^r."""

    def __init__(self, point: OmegaPoint, budget: Budget = Budget()):
        self.point = point
        self.budget = budget
        self.F = point.field
        self.r = point.r
        self.q = self.F.q

    # -- lattice data ------------------------------------------------------
    @cached_property
    def carlitz(self) -> CarlitzData:
        return carlitz_for(self.F)

    @cached_property
    def explog(self) -> ExpLogData:
        b = self.budget
        ncut = b.ncut if b.ncut is not None else self.r + 2
        return drinfeld_from_lattice(self.point.reduced_lattice(), ncut, D0=b.D0, Dmax=b.Dmax)

    def agf(self, i: int) -> AGFSeries:
        """s_i(z,t) for 1 ≤ i ≤ r."""
        return self._agfs[i - 1]

    @cached_property
    def _agfs(self):
        return tuple(agf_build(self.explog, zi, self.budget.ncut) for zi in self.point.z)

    def s_tate(self, i: int, twist: int = 0, T: int | None = None) -> TateSeries:
        T = self.budget.T if T is None else T
        return self.agf(i).twist(twist).to_tate(T)

    # -- Eisenstein machinery --------------------------------------------
    @cached_property
    def _h_data(self):
        F = self.F
        thinv = F.theta_pow(-1)
        xs = [zi * thinv for zi in self.point.z]
        _, vals, D = stable_exp(self.point.reduced_lattice(), xs, 0, D0=self.budget.D0, Dmax=self.budget.Dmax)
        return vals, D

    def eis_nu(self, nu: Sequence[int]) -> RamifiedSeries:
        """Eis_ν(z) = 1/exp_Λ(θ^{−1} ν·z) (the full congruence sum)."""
        vals, _ = self._h_data
        F = self.F
        acc = F.zero()
        for c, v in zip(nu, vals):
            if c:
                acc = acc + v.scale(c)
        if acc.is_zero():
            raise PoleHit("θ^{-1}ν·z is a lattice point to working precision")
        return acc.inv()

    @cached_property
    def h(self) -> RamifiedSeries:
        """Gekeler's h_r(z)."""
        F, q, r = self.F, self.q, self.r
        C = self.carlitz
        acc = F.root()
        for nu in monic_tuples(q, r):
            acc = acc * self.eis_nu(nu)
        return acc * C.pi_tilde ** (-(weight_h(q, r)))

    @property
    def h_degree(self) -> int:
        return self._h_data[1]

    def _eis_base_at(self, D: int, T: int):
        """1/e_W(θ^m z_i) with W the degree-≤D box minus θ^m z_i."""
        r = self.r
        box = self.point.lattice().box(D)
        out = [[None] * (T + 1) for _ in range(r)]
        for i in range(r):
            for m in range(T + 1):
                s = m * r + i
                W = box[:s] + box[s + 1:]
                _, (val,) = additive_exp(W, [box[s]], 0)
                if val.is_zero():
                    raise PrecisionExhausted("box vector in the span of the others")
                out[i][m] = val.inv()
        return out

    @cached_property
    def eis_base(self):
        T = self.budget.T
        D = max(self.budget.D0, T)
        prev = self._eis_base_at(D, T)
        while D < self.budget.Dmax:
            nxt = self._eis_base_at(D + 1, T)
            if all(a.same_window(b) or ((a - b).is_zero() and a.valuation == b.valuation)
                   for ra, rb in zip(prev, nxt) for a, b in zip(ra, rb)):
                return nxt, D + 1
            prev = nxt
            D += 1
        raise NoStabilization("twisted Eisenstein values did not stabilize")

    def eis_twisted(self, i: int, ell: int) -> TateSeries:
        """𝓔^{[i]}_{q^ell}(z,t) to t^T (i is 1-based)."""
        base, _ = self.eis_base
        return TateSeries(tuple(-(x.frob(ell)) for x in base[i - 1]))

    # -- matrices ----------------------------------------------------------
    def eis_matrix(self):
        r = self.r
        return [[self.eis_twisted(i, ell) for i in range(1, r + 1)] for ell in range(r)]

    def f_matrix(self):
        r = self.r
        return [[self.s_tate(i, j) for j in range(r)] for i in range(1, r + 1)]

    def c_series(self, ell: int, twist: int = 0) -> TateSeries:
        """c_{q^ell − 1}(z,t)^{(twist)}."""
        E = self.explog.extended(ell + 1)
        terms = tuple((j, E.alphas[j] * E.betas[ell - j].frob(j)) for j in range(ell + 1))
        return AGFSeries(terms, None, self.F).twist(twist).to_tate(self.budget.T)

    def c_matrix(self):
        r = self.r
        T = self.budget.T
        Z = TateSeries.zero(self.F, T)
        return [[self.c_series(l - j, j) if l >= j else Z for j in range(r)] for l in range(r)]

    @property
    def omega(self) -> TateSeries:
        return omega_for(self.F, self.budget.T)

    @property
    def omega_inv(self) -> TateSeries:
        return omega_inv_for(self.F, self.budget.T)

    def pi_power(self, k: int) -> RamifiedSeries:
        return self.carlitz.pi_tilde ** k

    # -- 𝓗_r and 𝓖_i -------------------------------------------------------
    @cached_property
    def g_factor(self) -> TateSeries:
        """π̃^{(q^r−1)/(q−1)} h_r / ω^{(r−1)}."""
        k = weight_h(self.q, self.r)
        return self.omega_inv.twist(self.r - 1) * (self.pi_power(k) * self.h)

    def H_series(self) -> TateSeries:
        return self.g_factor * self.s_tate(self.r, self.r - 1)

    def H_minor(self) -> TateSeries:
        r = self.r
        M = [[self.eis_twisted(i, ell) for i in range(1, r)] for ell in range(r - 1)]
        if r == 1:
            return TateSeries.constant(self.F.one(), self.budget.T)
        return tate_det(M, self.F, self.budget.T)

    def H_at(self, n: int) -> RamifiedSeries:
        """𝓗_r(z, θ^{q^n}) from the ratio of residues at the common simple pole."""
        r = self.r
        if n < r - 1:
            raise DepthTooSmall(f"n = {n} < r − 1 = {r - 1}")
        k = weight_h(self.q, r)
        res_s = self.agf_deep(self.r, n - (r - 1)).twist(r - 1).residue(n)
        res_w = self.omega_agf_deep(n - (r - 1)).twist(r - 1).residue(n)
        return self.pi_power(k) * self.h * res_s / res_w

    def agf_deep(self, i: int, m: int) -> AGFSeries:
        s = self.agf(i)
        if s.cutoff >= m:
            return s
        E = self.explog.extended(m + 2)
        return agf_build(E, self.point.z[i - 1], m)

    def omega_agf_deep(self, m: int) -> AGFSeries:
        C = self.carlitz
        if C.M < m:
            C = carlitz_data(self.F, m + 1)
        E = C.explog(m + 2)
        return agf_build(E, C.pi_tilde, max(m, 1))

    def H_at_closed(self, n: int) -> RamifiedSeries:
        r, q = self.r, self.q
        if n < r - 1:
            raise DepthTooSmall(f"n = {n} < r − 1 = {r - 1}")
        m = n - (r - 1)
        C = self.carlitz if self.carlitz.M >= m else carlitz_data(self.F, m + 1)
        E = self.explog.extended(m + 1)
        k = weight_h(q, r)
        return (self.pi_power(k - q**n) * C.D_series(m).frob(r - 1) * self.h
                * E.alphas[m].frob(r - 1))

    def G_vector(self, i: int) -> list[TateSeries]:
        return [self.g_factor * self.s_tate(j, i - 1) for j in range(1, self.r + 1)]

    # -- uniformizers --------------------------------------------------------
    @cached_property
    def tilde_forms(self) -> "PointForms":
        return PointForms(self.point.tilde(), self.budget)

    def u_a(self, a: APoly) -> RamifiedSeries:
        """u_a(z) = 1/exp_{Λ_z̃}(a z_1)."""
        F = self.F
        x = F.from_apoly(a) * self.point.z[0]
        _, (val,), _ = stable_exp(self.point.tilde().reduced_lattice(), [x], 0, D0=self.budget.D0,
                                  Dmax=self.budget.Dmax)
        if val.is_zero():
            raise PoleHit("a·z_1 lies in Λ_z̃ to working precision")
        return val.inv()

    def u(self) -> RamifiedSeries:
        """u(z) = 1/exp_{π̃Λ_z̃}(π̃ z_1) = π̃^{−1} u_1(z)."""
        return self.u_a(APoly.const(self.F.fq, 1)) / self.carlitz.pi_tilde


def monic_tuples(q: int, r: int):
    """ν ∈ F_q^r ∖ 0 whose last nonzero entry is 1."""
    for last in range(r):
        for head in itertools.product(range(q), repeat=last):
            yield tuple(head) + (1,) + (0,) * (r - last - 1)


def tate_det(M, F: RField, T: int) -> TateSeries:
    n = len(M)
    if n == 0:
        return TateSeries.constant(F.one(), T)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    acc = TateSeries.zero(F, T)
    for j in range(n):
        minor = [[M[a][b] for b in range(n) if b != j] for a in range(1, n)]
        term = M[0][j] * tate_det(minor, F, T)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def tate_matmul(A, B, F: RField, T: int):
    n, m, p = len(A), len(B), len(B[0])
    return [[_tsum([A[i][k] * B[k][j] for k in range(m)], F, T) for j in range(p)] for i in range(n)]


def _tsum(xs, F, T):
    acc = TateSeries.zero(F, T)
    for x in xs:
        acc = acc + x
    return acc


# ---------------------------------------------------------------------------
# brute-force Eisenstein sums (kernel-backed)
# ---------------------------------------------------------------------------

def _window(vectors: Sequence[RamifiedSeries], extra: Sequence[RamifiedSeries] = ()):
    F = vectors[0].field
    allv = list(vectors) + list(extra)
    vlo = min(v.valuation for v in allv)
    vhi = max(v.valuation for v in allv)
    nabs = min(v.abs_prec for v in allv)
    if nabs == INF:
        nabs = vhi + F.prec
    L = int(nabs - vlo)

    def row(x):
        out = np.zeros(L, dtype=np.int64)
        if len(x.c):
            s = x.v - vlo
            m = min(len(x.c), L - s)
            if m > 0:
                out[s:s + m] = x.c[:m]
        return out

    return int(vlo), L, row


def lattice_sum_bruteforce(vectors: Sequence[RamifiedSeries], k: int,
                           offset: RamifiedSeries | None = None):
    """Σ over x ∈ F_q^d (x ≠ 0 unless an offset is given) of (off + Σ x_s v_s)^{−k}.

    Returns ``(total, weighted)`` where weighted[s] is the sum weighted by x_s.
    """
    F = vectors[0].field
    q = F.q
    d = len(vectors)
    if q**d > BRUTE_BUDGET:
        raise EnumerationBudgetExceeded(f"{q}^{d} points exceed the brute-force budget")
    vlo, L, row = _window(vectors, [offset] if offset is not None else [])
    B = np.stack([row(v) for v in vectors])
    off = row(offset) if offset is not None else np.zeros(L, dtype=np.int64)
    qpow = -1
    j, kk = 0, 1
    while kk < k:
        kk *= q
        j += 1
    if kk == k:
        qpow = j
    lo, hi, acc, hit = K.lattice_power_sums(B, off, k, qpow, F.prec, F.fq, offset is not None)
    if hit:
        raise PoleHit("a summation point vanishes to working precision")
    shift = -k * vlo
    lo, hi = int(lo) + shift, int(hi) + shift

    def rs(a):
        return RamifiedSeries.make(F, lo, a, hi)

    return rs(acc[d]), [rs(acc[s]) for s in range(d)]


def eisenstein_bruteforce(point: OmegaPoint, k: int, D: int, T: int) -> list[TateSeries]:
    """All columns 𝓔^{[i]}_k over the degree-≤D box, by direct enumeration."""
    r = point.r
    box = point.lattice().box(D)
    _, weighted = lattice_sum_bruteforce(box, k)
    F = point.field
    cols = []
    for i in range(r):
        cs = [weighted[m * r + i] if m <= D else F.zero() for m in range(T + 1)]
        cols.append(TateSeries(tuple(cs)))
    return cols


def eisenstein_twisted(point: OmegaPoint, k: int, i: int, D: int | None = None, T: int = 4,
                       method: str = "auto") -> TateSeries:
    """𝓔^{[i]}_k(z,t) truncated at t^T.

    k a power of q uses the closed form over the box (adaptive D when D is
    None); other weights enumerate the box directly.
    """
    q = point.field.q
    if (k - 1) % (q - 1):
        return TateSeries.zero(point.field, T)
    ell, kk = 0, 1
    while kk < k:
        kk *= q
        ell += 1
    if method == "auto" and kk == k:
        budget = Budget(T=T, D0=D if D is not None else T)
        pf = PointForms(point, budget)
        if D is None:
            return pf.eis_twisted(i, ell)
        base = pf._eis_base_at(max(D, T), T)
        return TateSeries(tuple(-(x.frob(ell)) for x in base[i - 1]))
    if D is None:
        D = T
    return eisenstein_bruteforce(point, k, D, T)[i - 1]


def h_function(point: OmegaPoint, budget: Budget = Budget()) -> RamifiedSeries:
    return PointForms(point, budget).h


def h_bruteforce(point: OmegaPoint, D: int) -> RamifiedSeries:
    """h_r from congruence sums enumerated over the degree-≤D box (test oracle)."""
    F = point.field
    q, r = F.q, point.r
    box = point.lattice().box(D)
    thinv = F.theta_pow(-1)
    acc = F.root()
    for nu in monic_tuples(q, r):
        x = F.zero()
        for c, zi in zip(nu, point.z):
            if c:
                x = x + (zi * thinv).scale(c)
        total, _ = lattice_sum_bruteforce(box, 1, offset=x)
        acc = acc * total
    return acc * carlitz_for(F).pi_tilde ** (-weight_h(q, r))


def H_series(point: OmegaPoint, T: int = 4) -> TateSeries:
    return PointForms(point, Budget(T=T)).H_series()


def H_at(point: OmegaPoint, n: int, budget: Budget = Budget()) -> RamifiedSeries:
    return PointForms(point, budget).H_at(n)


def vectorial_G(point: OmegaPoint, i: int, T: int = 4) -> list[TateSeries]:
    return PointForms(point, Budget(T=T)).G_vector(i)


def build_matrices(point: OmegaPoint, T: int = 4):
    pf = PointForms(point, Budget(T=T))
    return pf.eis_matrix(), pf.f_matrix(), pf.c_matrix()


def uniformizer_u(point: OmegaPoint, budget: Budget = Budget()) -> RamifiedSeries:
    return PointForms(point, budget).u()


def u_a(point: OmegaPoint, a: APoly, budget: Budget = Budget()) -> RamifiedSeries:
    return PointForms(point, budget).u_a(a)


# ---------------------------------------------------------------------------
# χ_{μ, z̃}
# ---------------------------------------------------------------------------

class ChiData:
    """Everything χ_{μ,z̃}(·,t) needs that depends only on z̃ ∈ Ω^{r−1}."""

    def __init__(self, ztilde: OmegaPoint, budget: Budget = Budget()):
        self.zt = ztilde
        self.pf = PointForms(ztilde, budget)
        self.budget = budget
        self.F = ztilde.field
        self.r = ztilde.r + 1

    @cached_property
    def prefactor(self) -> TateSeries:
        """π̃^{(q^{r−1}−1)/(q−1)} h_{r−1}(z̃)/ω."""
        q = self.F.q
        rr = self.r - 1
        # rank 1: det𝓕 = π̃^{-1}ω there, so h_1 = +1 here (the cusp expansions use −1)
        h = self.pf.h if rr >= 2 else self.F.one()
        c = self.pf.pi_power(weight_h(q, rr)) * h
        return self.pf.omega_inv * c

    def s_at(self, z: RamifiedSeries) -> AGFSeries:
        return agf_build(self.pf.explog, z, self.budget.ncut)

    def columns(self, z1: RamifiedSeries):
        """Columns of 𝒟 below the X-row: (s(z)^{(i)}), (s_ℓ(z̃)^{(i)}) for ℓ = 2..r."""
        T = self.budget.T
        n = self.r - 1
        col1 = [self.s_at(z1).twist(i).to_tate(T) if not z1.is_exact_zero() else TateSeries.zero(self.F, T)
                for i in range(n)]
        rest = [[self.pf.s_tate(l, i) for i in range(n)] for l in range(1, self.r)]
        return [col1] + rest

    def chi(self, z1: RamifiedSeries, mu: int) -> TateSeries:
        T = self.budget.T
        cols = self.columns(z1)
        keep = [c for idx, c in enumerate(cols) if idx != mu]
        M = [[keep[c][row] for c in range(len(keep))] for row in range(self.r - 1)]
        d = tate_det(M, self.F, T)
        out = self.prefactor * d
        return out if mu % 2 == 1 else -out


def chi(ztilde: OmegaPoint, z1: RamifiedSeries, mu: int, T: int = 4) -> TateSeries:
    return ChiData(ztilde, Budget(T=T)).chi(z1, mu)

"""Lattices, exponentials, the Carlitz module, Anderson generating functions, Goss polynomials.

The exponential of a finite F_q-space V is built one basis vector at a
time via

    e_{V ⊕ F_q u}(x) = e_V(x) − e_V(x)^q / e_V(u)^{q−1},

which yields the coefficients of e_V and its values at chosen points with
O(dim · #points) series operations instead of expanding a product over
q^dim lattice points.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    EnumerationBudgetExceeded,
    NoStabilization,
    NotConverged,
    PoleHit,
    PrecisionExhausted,
    SpaceTooLarge,
    TailNotDecaying,
)
from .fq import APoly
from .series import INF, RField, RamifiedSeries
from .tate import TateSeries

DENSE_BUDGET = 2**12
GOSS_BUDGET = 2**16


# ---------------------------------------------------------------------------
# additive recursion
# ---------------------------------------------------------------------------

def additive_exp(basis: Sequence[RamifiedSeries], targets: Sequence[RamifiedSeries] = (),
                 ncoef: int = 0):
    """Coefficients α_0..α_ncoef of e_V and values e_V(x) for V = span_{F_q}(basis).

    The basis is absorbed smallest-first.  Raises PrecisionExhausted if a
    basis vector lands in the span of the previous ones to working precision.
    """
    if not basis:
        F = targets[0].field if targets else None
        coeffs = [F.one()] + [F.zero()] * ncoef if F is not None else []
        return coeffs, list(targets)
    F = basis[0].field
    q = F.q
    order = sorted(range(len(basis)), key=lambda i: -basis[i].valuation)
    vals = [basis[i] for i in order] + list(targets)
    nb = len(basis)
    coeffs = [F.one()] + [F.zero()] * ncoef
    for s in range(nb):
        u = vals[s]
        if u.is_zero():
            raise PrecisionExhausted("basis vector vanishes on the span of the previous ones")
        c = u.inv() ** (q - 1)
        for k in range(min(ncoef, s + 1), 0, -1):
            prev = coeffs[k - 1]
            if not prev.is_exact_zero():
                coeffs[k] = coeffs[k] - c * prev.frob(1)
        for t in range(s + 1, len(vals)):
            y = vals[t]
            if y.is_exact_zero():
                continue
            vals[t] = y - c * y.frob(1)
    return coeffs, vals[nb:]


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Lattice:
    basis: tuple
    certificate: str = "distinct valuations"

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def field(self) -> RField:
        return self.basis[0].field

    def box(self, D: int) -> list[RamifiedSeries]:
        """F_q-basis θ^n b_j (0 ≤ n ≤ D) of the degree-≤D box."""
        F = self.field
        out = []
        for n in range(D + 1):
            th = F.theta_pow(n)
            out.extend(th * b for b in self.basis)
        return out

    def reduced(self) -> "Lattice":
        return Lattice(reduce_basis(self.basis), "reduced basis")

    def scaled(self, c: RamifiedSeries) -> "Lattice":
        return Lattice(tuple(c * b for b in self.basis), self.certificate + " (scaled)")


def default_deg_bound(L: Lattice) -> int:
    return 1


def reduce_basis(basis: Sequence[RamifiedSeries], max_steps: int = 10_000) -> tuple:
    """An orthogonal basis of the same A-lattice: valuations pairwise distinct mod w.

    With distinct classes |Σ a_i b_i| = max |a_i b_i|, which is what the box
    enumeration and the additive recursion rely on.  Two vectors in the same
    class are combined, b ← b − c θ^d b', cancelling the leading term of the larger.
    """
    F = basis[0].field
    w = F.w
    fq = F.fq
    bs = list(basis)
    for _ in range(max_steps):
        clash = None
        for i in range(len(bs)):
            for j in range(len(bs)):
                if i != j and bs[i].valuation <= bs[j].valuation \
                        and (bs[j].valuation - bs[i].valuation) % w == 0:
                    clash = (i, j)
                    break
            if clash:
                break
        if clash is None:
            return tuple(bs)
        i, j = clash
        d = (bs[j].valuation - bs[i].valuation) // w
        x = F.theta_pow(d) * bs[j]
        new = bs[i] - x.scale(fq.mul(bs[i].lead, fq.inv(x.lead)))
        if new.is_zero():
            raise PrecisionExhausted("basis vectors dependent to working precision")
        bs[i] = new
    raise PrecisionExhausted("lattice reduction did not terminate")


def lattice_exp_poly(L: Lattice, D: int, Ncut: int, method: str = "additive") -> list[RamifiedSeries]:
    """α_0..α_Ncut of exp of the degree-≤D box of L.

    ``method='dense'`` expands z·Π(1 − z/λ) over all nonzero box points and
    checks that every coefficient off the q-powers vanishes.
    """
    F = L.field
    q = F.q
    dim = L.rank * (D + 1)
    if method == "additive":
        coeffs, _ = additive_exp(L.box(D), (), min(Ncut, dim))
        return coeffs + [F.zero()] * (Ncut - len(coeffs) + 1)
    if q**dim > DENSE_BUDGET:
        raise EnumerationBudgetExceeded(f"{q}^{dim} points exceed the dense budget {DENSE_BUDGET}")
    box = L.box(D)
    poly = [F.zero(), F.one()]  # z
    for digits in itertools.product(range(q), repeat=dim):
        if not any(digits):
            continue
        lam = F.zero()
        for a, b in zip(digits, box):
            if a:
                lam = lam + b.scale(a)
        m = -lam.inv()  # factor (1 + m z)
        new = [F.zero()] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i] = new[i] + c
            new[i + 1] = new[i + 1] + c * m
        poly = new
    qpows = {q**n for n in range(dim + 1)}
    for i, c in enumerate(poly):
        if i not in qpows and not c.is_zero():
            raise AssertionError(f"non-q-power coefficient z^{i} does not vanish")
    out = [poly[q**n] if q**n < len(poly) else F.zero() for n in range(Ncut + 1)]
    return out


def exp_box(L: Lattice, D: int, xs: Sequence[RamifiedSeries], ncoef: int = 0):
    return additive_exp(L.box(D), xs, ncoef)


def _windows_agree(a: Sequence[RamifiedSeries], b: Sequence[RamifiedSeries]) -> bool:
    return all((x - y).is_zero() and x.valuation == y.valuation or x.same_window(y)
               for x, y in zip(a, b))


def stable_exp(L: Lattice, xs: Sequence[RamifiedSeries] = (), ncoef: int = 0,
               D0: int = 0, Dmax: int = 40):
    """Increase the box degree until coefficients and values agree for D and D+1.

    Returns ``(coeffs, values, D)`` computed at the larger box.
    """
    D = max(D0, 0)
    prev = exp_box(L, D, xs, ncoef)
    while D < Dmax:
        nxt = exp_box(L, D + 1, xs, ncoef)
        if _windows_agree(prev[0], nxt[0]) and _windows_agree(prev[1], nxt[1]):
            return nxt[0], nxt[1], D + 1
        prev = nxt
        D += 1
    raise NotConverged(f"box exponential did not stabilize up to degree {Dmax}")


# ---------------------------------------------------------------------------
# exponential / logarithm data
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ExpLogData:
    alphas: tuple
    betas: tuple
    g: tuple
    lattice: Lattice | None = None
    D: int | None = None

    @property
    def rank(self) -> int:
        return len(self.g)

    @property
    def ncut(self) -> int:
        return len(self.alphas) - 1

    @property
    def field(self) -> RField:
        return self.alphas[0].field

    def extended(self, ncut: int) -> "ExpLogData":
        """More α_n, β_n from the functional equation of exp."""
        if ncut <= self.ncut:
            return self
        alphas = list(self.alphas)
        F = self.field
        q = F.q
        r = self.rank
        th = F.theta()
        for n in range(len(alphas), ncut + 1):
            acc = F.zero()
            for i in range(1, min(n, r) + 1):
                acc = acc + self.g[i - 1] * alphas[n - i].frob(i)
            alphas.append(acc / (th.frob(n) - th))
        return ExpLogData(tuple(alphas), tuple(_betas(alphas)), self.g, self.lattice, self.D)


def _betas(alphas: Sequence[RamifiedSeries]) -> list[RamifiedSeries]:
    F = alphas[0].field
    betas = [F.one()]
    for n in range(1, len(alphas)):
        acc = F.zero()
        for i in range(n):
            acc = acc + betas[i] * alphas[n - i].frob(i)
        betas.append(-acc)
    return betas


def explog_from_g(g: Sequence[RamifiedSeries], ncut: int) -> ExpLogData:
    """ExpLogData of the Drinfeld module φ_θ = θ + Σ g_i τ^i."""
    F = g[0].field
    base = ExpLogData((F.one(),), (F.one(),), tuple(g))
    return base.extended(ncut)


def drinfeld_from_lattice(L: Lattice, Ncut: int | None = None, D0: int = 1, Dmax: int = 40) -> ExpLogData:
    """α_1..α_r from the lattice box, g_1..g_r from the functional equation, rest by recursion."""
    r = L.rank
    F = L.field
    alphas_lat, _, D = stable_exp(L, (), r, D0=D0, Dmax=Dmax)
    th = F.theta()
    g = []
    for n in range(1, r + 1):
        acc = (th.frob(n) - th) * alphas_lat[n]
        for i in range(1, n):
            acc = acc - g[i - 1] * alphas_lat[n - i].frob(i)
        g.append(acc)
    if g[-1].is_zero():
        raise NotConverged("leading coefficient g_r vanished to precision")
    data = ExpLogData(tuple(alphas_lat[: r + 1]), tuple(_betas(alphas_lat[: r + 1])), tuple(g), L, D)
    return data.extended(Ncut if Ncut is not None else r)


# ---------------------------------------------------------------------------
# Carlitz module
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CarlitzData:
    D: tuple
    pi_tilde: RamifiedSeries
    cutoff: int

    @property
    def M(self) -> int:
        return len(self.D) - 1

    def D_series(self, n: int) -> RamifiedSeries:
        return self.pi_tilde.field.from_apoly(self.D[n])

    def explog(self, ncut: int) -> ExpLogData:
        F = self.pi_tilde.field
        return explog_from_g([F.one()], ncut)

    def lattice(self) -> Lattice:
        return Lattice((self.pi_tilde,), "Carlitz period")


def carlitz_D(fq, M: int, literal: bool = False) -> list[APoly]:
    """Carlitz factorials D_ℓ = (θ^{q^ℓ} − θ)·D_{ℓ−1}^q.

    ``literal=True`` drops the q-th power (D_ℓ = (θ^{q^ℓ} − θ)·D_{ℓ−1});
    kept only so tests can show that variant is not the exp coefficient.
    """
    th = APoly.theta(fq)
    out = [APoly.const(fq, 1)]
    for ell in range(1, M + 1):
        prev = out[-1] if literal else out[-1] ** fq.q
        out.append((th ** (fq.q**ell) - th) * prev)
    return out


def _pi_tilde(F: RField, I: int) -> RamifiedSeries:
    q, w = F.q, F.w
    x = F.theta() * F.root()
    for i in range(1, I + 1):
        x = x / (F.one() - F.theta_pow(1 - q**i))
    bound = x.valuation + w * (q ** (I + 1) - 1)
    return x.truncate(bound)


def pi_tilde(F: RField, max_cutoff: int = 40) -> RamifiedSeries:
    q, w = F.q, F.w
    I = 1
    while w * (q ** (I + 1) - 1) < F.prec:
        I += 1
    prev = _pi_tilde(F, I)
    while I < max_cutoff:
        nxt = _pi_tilde(F, I + 1)
        if prev.same_window(nxt):
            return nxt
        prev = nxt
        I += 1
    raise NoStabilization("Carlitz period did not stabilize")


def carlitz_data(F: RField, M: int = 4) -> CarlitzData:
    return CarlitzData(tuple(carlitz_D(F.fq, M)), pi_tilde(F), M)


def omega_residue(C: CarlitzData, n: int) -> RamifiedSeries:
    """Res_{t=θ^{q^n}} ω = −π̃^{q^n}/D_n (partial-fraction form of ω)."""
    return -(C.pi_tilde.frob(n) / C.D_series(n))


def omega_residue_product(F: RField, n: int, extra: int = 3) -> RamifiedSeries:
    """The same residue read off the product form of ω."""
    q, w = F.q, F.w
    t0 = F.theta().frob(n)
    acc = -(F.root() * t0)
    I = n + 1
    while w * (q ** (I + 1) - q**n) < F.prec + w:
        I += 1
    I += extra
    for i in range(I + 1):
        if i == n:
            continue
        acc = acc / (F.one() - F.theta_pow(q**n - q**i))
    return acc


# ---------------------------------------------------------------------------
# Anderson generating functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AGFSeries:
    """Σ_n c_n/(θ^{q^n} − t) over the stored terms; ``tail`` is the first omitted term."""

    terms: tuple
    tail: tuple | None
    field: RField

    @property
    def cutoff(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    def twist(self, j: int) -> "AGFSeries":
        if j == 0:
            return self
        terms = tuple((n + j, c.frob(j)) for n, c in self.terms)
        tail = None if self.tail is None else (self.tail[0] + j, self.tail[1].frob(j))
        return AGFSeries(terms, tail, self.field)

    def residue(self, n: int) -> RamifiedSeries:
        """Res_{t=θ^{q^n}}: −c_n."""
        for m, c in self.terms:
            if m == n:
                return -c
        if self.tail is not None and n >= self.tail[0]:
            raise TailNotDecaying(f"pole index {n} beyond the AGF cutoff {self.cutoff}")
        return self.field.zero()

    def _tail_bound(self, m: int):
        if self.tail is None:
            return INF
        n, c = self.tail
        return c.valuation + self.field.w * self.field.q**n * (m + 1)

    def to_tate(self, T: int) -> TateSeries:
        F = self.field
        out = []
        for m in range(T + 1):
            acc = F.zero()
            for n, c in self.terms:
                acc = acc + c * F.theta_pow(-(F.q**n) * (m + 1))
            b = self._tail_bound(m)
            out.append(acc if b == INF else acc.truncate(int(b)))
        return TateSeries(tuple(out))

    def eval_at(self, t0: RamifiedSeries) -> RamifiedSeries:
        """Value at a point that is not one of the stored poles (partial-fraction form)."""
        F = self.field
        acc = F.zero()
        for n, c in self.terms:
            den = F.theta().frob(n) - t0
            if den.is_zero():
                raise PoleHit(f"evaluation at the pole θ^(q^{n})")
            acc = acc + c / den
        if self.tail is not None:
            n, c = self.tail
            den = F.theta().frob(n) - t0
            acc = acc.truncate(int(c.valuation - den.valuation))
        return acc

    def to_json(self) -> dict:
        return {"terms": [[n, c.to_json()] for n, c in self.terms], "cutoff": self.cutoff}


def agf_build(E: ExpLogData, z: RamifiedSeries, Ncut: int | None = None, max_ncut: int = 30) -> AGFSeries:
    """Partial-fraction AGF s_φ(z,t) with c_n = α_n z^{q^n} and a certified tail."""
    F = z.field
    w, q = F.w, F.q
    if z.is_exact_zero():
        return AGFSeries((), None, F)

    def term(n, E):
        return E.alphas[n] * z.frob(n)

    terms = []
    taus = []
    n = 0
    while True:
        if n > E.ncut:
            E = E.extended(n + 2)
        c = term(n, E)
        tau = c.valuation + w * q**n
        if Ncut is not None:
            if n > Ncut:
                break
        elif taus and n >= 2 and tau >= min(taus) + F.prec and tau > taus[-1]:
            break
        if n > max_ncut:
            raise TailNotDecaying(f"AGF terms still significant at n = {n}")
        terms.append((n, c))
        taus.append(tau)
        n += 1
    # first omitted term certifies the tail; demand eventual increase
    if len(taus) >= 1 and not tau > taus[-1]:
        raise TailNotDecaying("AGF term valuations are not increasing at the cutoff")
    return AGFSeries(tuple(terms), (n, c), F)


def agf_to_tate(s: AGFSeries, T: int) -> TateSeries:
    return s.to_tate(T)


def agf_twist(s: AGFSeries, j: int) -> AGFSeries:
    return s.twist(j)


def agf_functional_check(E: ExpLogData, z: RamifiedSeries, T: int = 4):
    """Gauss valuation of (t−θ)s − Σ g_i s^{(i)} and of the largest term."""
    F = z.field
    s = agf_build(E, z)
    st = s.to_tate(T)
    lhs = TateSeries.t_minus(F.theta(), T) * st
    rhs = TateSeries.zero(F, T)
    for i, gi in enumerate(E.g, start=1):
        rhs = rhs + s.twist(i).to_tate(T) * gi
    diff = lhs - rhs
    return diff.gauss_valuation(), min(lhs.gauss_valuation(), rhs.gauss_valuation())


# ---------------------------------------------------------------------------
# Goss polynomials of a finite F_q-space
# ---------------------------------------------------------------------------

def finite_space_exp(basis: Sequence[RamifiedSeries]) -> list[RamifiedSeries]:
    """Coefficients η_0..η_dim of e_L(X) = X Π_{0≠λ∈L}(1 − X/λ) (X^{q^i})."""
    coeffs, _ = additive_exp(list(basis), (), len(basis))
    return coeffs


def goss_polys(basis: Sequence[RamifiedSeries], nmax: int) -> list[list[RamifiedSeries]]:
    """G_1..G_nmax as coefficient lists (index = degree in X); G_n = X(G_{n−1} + Σ η_i G_{n−q^i})."""
    if not basis:
        raise ValueError("need at least one basis vector to fix the field")
    F = basis[0].field
    q = F.q
    if q ** len(basis) > GOSS_BUDGET:
        raise SpaceTooLarge(f"|L| = {q}^{len(basis)} too large")
    eta = finite_space_exp(basis)
    G: dict[int, list[RamifiedSeries]] = {}

    def get(n):
        return G.get(n, []) if n >= 1 else []

    def add_into(acc, poly, c=None):
        for i, x in enumerate(poly):
            y = x if c is None else x * c
            if i < len(acc):
                acc[i] = acc[i] + y
            else:
                acc.append(y)

    for n in range(1, nmax + 1):
        if n == 1:
            G[1] = [F.zero(), F.one()]
            continue
        acc: list[RamifiedSeries] = []
        add_into(acc, get(n - 1))
        i = 1
        while q**i <= n and i < len(eta):
            add_into(acc, get(n - q**i), eta[i])
            i += 1
        G[n] = [F.zero()] + acc
    return [G[n] for n in range(1, nmax + 1)]


def eval_poly(coeffs: Sequence[RamifiedSeries], x: RamifiedSeries) -> RamifiedSeries:
    acc = x.field.zero()
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def goss_oracle(basis: Sequence[RamifiedSeries], n: int, x: RamifiedSeries) -> RamifiedSeries:
    """Brute force Σ_{λ∈L} (x+λ)^{−n}."""
    F = x.field
    q = F.q
    if q ** len(basis) > GOSS_BUDGET:
        raise SpaceTooLarge(f"|L| = {q}^{len(basis)} too large")
    acc = F.zero()
    for digits in itertools.product(range(q), repeat=len(basis)):
        y = x
        for a, b in zip(digits, basis):
            if a:
                y = y + b.scale(a)
        if y.is_zero():
            raise PoleHit("x lies in −L to working precision")
        acc = acc + y.inv() ** n
    return acc

"""Truncated power series in t over the working field, and ω.

A :class:`TateSeries` keeps the coefficients of t^0..t^T.  Products drop
higher t-degrees; whenever something nonzero is dropped the result carries
``overflow=True`` (the truncation log).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ContextMismatch, NoStabilization, OutsideUnitDisk
from .fq import APoly
from .series import INF, RField, RamifiedSeries


@dataclass(frozen=True, eq=False)
class TateSeries:
    coeffs: tuple
    overflow: bool = False

    @property
    def T(self) -> int:
        return len(self.coeffs) - 1

    t_trunc = T

    @property
    def field(self) -> RField:
        return self.coeffs[0].field

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[RamifiedSeries], overflow: bool = False) -> "TateSeries":
        return cls(tuple(coeffs), overflow)

    @classmethod
    def zero(cls, F: RField, T: int) -> "TateSeries":
        z = F.zero()
        return cls((z,) * (T + 1))

    @classmethod
    def constant(cls, x: RamifiedSeries, T: int) -> "TateSeries":
        z = x.field.zero()
        return cls((x,) + (z,) * T)

    @classmethod
    def from_tpoly(cls, F: RField, a: APoly, T: int) -> "TateSeries":
        """a(t) for a ∈ F_q[θ] read in the variable t."""
        cs = [F.scalar(a.coeff(i)) for i in range(T + 1)]
        return cls(tuple(cs), overflow=a.degree > T)

    @classmethod
    def t_minus(cls, c: RamifiedSeries, T: int) -> "TateSeries":
        """The degree-one polynomial t − c."""
        F = c.field
        cs = [-c, F.one()] + [F.zero()] * (T - 1)
        return cls(tuple(cs[: T + 1]), overflow=T < 1)

    # -- arithmetic --------------------------------------------------------
    def _match(self, other: "TateSeries") -> int:
        if self.field.key != other.field.key:
            raise ContextMismatch("TateSeries over different fields")
        return min(self.T, other.T)

    def __add__(self, other):
        if isinstance(other, RamifiedSeries):
            return TateSeries((self.coeffs[0] + other,) + self.coeffs[1:], self.overflow)
        T = self._match(other)
        return TateSeries(tuple(a + b for a, b in zip(self.coeffs[: T + 1], other.coeffs)),
                          self.overflow or other.overflow)

    def __neg__(self):
        return TateSeries(tuple(-a for a in self.coeffs), self.overflow)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RamifiedSeries):
            return TateSeries(tuple(a * other for a in self.coeffs), self.overflow)
        if isinstance(other, (int, np.integer)):
            return TateSeries(tuple(a * int(other) for a in self.coeffs), self.overflow)
        if isinstance(other, APoly):
            return self.mul_tpoly(other)
        T = self._match(other)
        F = self.field
        out = []
        for n in range(T + 1):
            acc = F.zero()
            for i in range(n + 1):
                a, b = self.coeffs[i], other.coeffs[n - i]
                if a.is_exact_zero() or b.is_exact_zero():
                    continue
                acc = acc + a * b
            out.append(acc)
        dropped = False
        for i in range(T + 1):
            if self.coeffs[i].is_exact_zero():
                continue
            for j in range(T + 1 - i, T + 1):
                if not other.coeffs[j].is_exact_zero():
                    dropped = True
                    break
            if dropped:
                break
        return TateSeries(tuple(out), self.overflow or other.overflow or dropped)

    __rmul__ = __mul__

    def mul_tpoly(self, a: APoly) -> "TateSeries":
        """Multiply by a(t) with a ∈ F_q[t] (coefficients in F_q)."""
        F = self.field
        T = self.T
        out = [F.zero() for _ in range(T + 1)]
        dropped = False
        for k, ak in enumerate(a.coeffs):
            if not ak:
                continue
            for n in range(T + 1):
                x = self.coeffs[n]
                if x.is_exact_zero():
                    continue
                if n + k > T:
                    dropped = True
                    continue
                out[n + k] = out[n + k] + x.scale(ak)
        return TateSeries(tuple(out), self.overflow or dropped)

    def times_t(self) -> "TateSeries":
        F = self.field
        dropped = not self.coeffs[-1].is_exact_zero()
        return TateSeries((F.zero(),) + self.coeffs[:-1], self.overflow or dropped)

    def twist(self, ell: int = 1) -> "TateSeries":
        """Coefficient-wise q^ell-power Frobenius."""
        if ell == 0:
            return self
        return TateSeries(tuple(a.frob(ell) for a in self.coeffs), self.overflow)

    def inv(self) -> "TateSeries":
        """Inverse in the power-series ring (t^0 coefficient must be a unit)."""
        a0inv = self.coeffs[0].inv()
        F = self.field
        T = self.T
        out = [a0inv]
        for n in range(1, T + 1):
            acc = F.zero()
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(-(acc * a0inv))
        return TateSeries(tuple(out), self.overflow)

    def __truediv__(self, other):
        if isinstance(other, RamifiedSeries):
            return self * other.inv()
        return self * other.inv()

    def truncate_t(self, T: int) -> "TateSeries":
        return TateSeries(self.coeffs[: T + 1], self.overflow)

    # -- inspection --------------------------------------------------------
    def gauss_valuation(self):
        return min(c.valuation for c in self.coeffs)

    def min_prec(self):
        return min(c.abs_prec for c in self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_exact_zero(self) -> bool:
        return all(c.is_exact_zero() for c in self.coeffs)

    def same_window(self, other: "TateSeries") -> bool:
        return self.T == other.T and all(a.same_window(b) for a, b in zip(self.coeffs, other.coeffs))

    def check_floor(self, floor) -> bool:
        """No coefficient has valuation below ``floor``."""
        return self.gauss_valuation() >= floor

    def at(self, t0: RamifiedSeries, tail_floor) -> RamifiedSeries:
        """Evaluate at |t0| ≤ 1 given a lower bound on the unknown tail's valuations.

        Points outside the closed unit disk are refused: the truncated series
        says nothing about the continuation there.
        """
        v0 = t0.valuation
        if v0 < 0:
            raise OutsideUnitDisk("substitution of a point with |t| > 1 into a truncated t-series")
        F = self.field
        acc = F.zero()
        pw = F.one()
        for c in self.coeffs:
            acc = acc + c * pw
            pw = pw * t0
        bound = tail_floor + v0 * (self.T + 1)
        return acc.truncate(int(bound)) if bound != INF else acc

    def __repr__(self) -> str:
        head = ", ".join(c.to_text(2) for c in self.coeffs[:3])
        return f"TateSeries(T={self.T}, [{head}{', …' if self.T > 2 else ''}])"

    def to_json(self) -> dict:
        return {"t_trunc": self.T, "overflow": self.overflow,
                "coeffs": [c.to_json() for c in self.coeffs]}


def tate_twist(f: TateSeries, ell: int) -> TateSeries:
    return f.twist(ell)


# ---------------------------------------------------------------------------
# Anderson–Thakur function
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OmegaResult:
    series: TateSeries
    cutoff: int
    stabilized_at: int


def _omega_product(F: RField, T: int, I: int) -> TateSeries:
    """root · Π_{i=0}^{I} (1 − t/θ^{q^i})^{-1} with an honest tail bound."""
    q, w = F.q, F.w
    root = F.root()
    acc = TateSeries.constant(root, T)
    for i in range(I + 1):
        # geometric series Σ_k θ^{-k q^i} t^k  (exact monomials)
        geo = TateSeries(tuple(F.theta_pow(-k * q**i) for k in range(T + 1)))
        acc = acc * geo
    acc = TateSeries(acc.coeffs, overflow=True)
    # each omitted factor contributes at valuation ≥ val(root) + w q^{I+1} (+ w(k−1))
    base = root.valuation + w * q ** (I + 1)
    cs = tuple(c.truncate(base + w * max(k - 1, 0)) for k, c in enumerate(acc.coeffs))
    return TateSeries(cs, True)


def omega_series(F: RField, T: int, I: int | None = None, max_cutoff: int = 40) -> TateSeries:
    """ω truncated at t^T; the product cutoff is increased until the window settles."""
    return omega_with_certificate(F, T, I, max_cutoff).series


def omega_with_certificate(F: RField, T: int, I: int | None = None, max_cutoff: int = 40) -> OmegaResult:
    q, w = F.q, F.w
    if I is None:
        # smallest cutoff whose tail bound clears the relative window of t^0
        I = 0
        while w * q ** (I + 1) < F.prec + w * T:
            I += 1
    prev = _omega_product(F, T, I)
    J = I
    while J < max_cutoff:
        nxt = _omega_product(F, T, J + 1)
        if prev.same_window(nxt):
            return OmegaResult(nxt, J + 1, J)
        prev = nxt
        J += 1
    raise NoStabilization(f"ω did not stabilize up to cutoff {max_cutoff}")


def _omega_inv_product(F: RField, T: int, I: int) -> TateSeries:
    """root^{-1} · Π_{i=0}^{I} (1 − t/θ^{q^i}) with the omitted factors bounded."""
    q, w = F.q, F.w
    rinv = F.root().inv()
    acc = TateSeries.constant(rinv, T)
    for i in range(I + 1):
        acc = acc * TateSeries.t_minus(F.theta_pow(q**i), T) * F.theta_pow(-(q**i))
        acc = -acc
    v0 = rinv.valuation
    cs = [acc.coeffs[0]]
    for k in range(1, T + 1):
        # P_{k−j} has valuation ≥ v0 + w(1 + … + q^{k−j−1}); the tail's t^j part ≥ w(q^{I+1} + … + q^{I+j})
        b = min(v0 + w * (q ** (k - j) - 1) // (q - 1) + w * sum(q ** (I + l) for l in range(1, j + 1))
                for j in range(1, k + 1))
        cs.append(acc.coeffs[k].truncate(b))
    return TateSeries(tuple(cs), True)


def omega_inverse(F: RField, T: int, max_cutoff: int = 40) -> TateSeries:
    """1/ω from its (polynomially convergent) product, avoiding series inversion."""
    q, w = F.q, F.w
    I = 0
    while w * q ** (I + 1) < F.prec + w * (q**T - 1) // (q - 1):
        I += 1
    prev = _omega_inv_product(F, T, I)
    while I < max_cutoff:
        nxt = _omega_inv_product(F, T, I + 1)
        if prev.same_window(nxt):
            return nxt
        prev = nxt
        I += 1
    raise NoStabilization(f"1/ω did not stabilize up to cutoff {max_cutoff}")

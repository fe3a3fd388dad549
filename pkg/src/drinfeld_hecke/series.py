"""Truncated Laurent series in a uniformizer π with π^{-w} = -θ.

A :class:`RamifiedSeries` is a ball: a finite coefficient window plus an
absolute precision N meaning "known modulo π^N" (``None`` for exact
values).  Besides the propagation rules of ball arithmetic, every inexact
result is clipped to at most ``field.prec`` significant π-digits, so the
working precision behaves like a floating mantissa of fixed length.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    ContextMismatch,
    InversionOfZero,
    PrecisionExhausted,
    RamificationNotDivisible,
)
from .fq import APoly, FieldDesc, fq_init

INF = math.inf


class RField:
    """Working field F_q((π)) with π^{-w} = -θ and relative precision cap."""

    __slots__ = ("fq", "w", "prec")

    def __init__(self, fq: FieldDesc, w: int, prec: int):
        if w < 1:
            raise RamificationNotDivisible("ramification index must be positive")
        if w % (fq.q - 1):
            raise RamificationNotDivisible(f"(q-1) = {fq.q - 1} does not divide w = {w}")
        if prec < 1:
            raise ValueError("precision must be positive")
        self.fq = fq
        self.w = int(w)
        self.prec = int(prec)

    @property
    def q(self) -> int:
        return self.fq.q

    def __repr__(self) -> str:
        return f"RField(q={self.q}, w={self.w}, prec={self.prec})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RField) and self.key == other.key and self.prec == other.prec

    def __hash__(self) -> int:
        return hash((self.key, self.prec))

    @property
    def key(self):
        return (self.fq.p, self.fq.e, self.fq.modulus, self.w)

    def with_prec(self, prec: int) -> "RField":
        return RField(self.fq, self.w, prec)

    # -- constructors ------------------------------------------------------
    def zero(self) -> "RamifiedSeries":
        return RamifiedSeries(self, 0, _EMPTY, None)

    def one(self) -> "RamifiedSeries":
        return self.monomial(1, 0)

    def scalar(self, c: int) -> "RamifiedSeries":
        return self.monomial(c, 0)

    def monomial(self, c: int, exp: int) -> "RamifiedSeries":
        if c == 0:
            return self.zero()
        return RamifiedSeries(self, int(exp), np.array([c], dtype=np.int64), None)

    def pi(self) -> "RamifiedSeries":
        return self.monomial(1, 1)

    def theta(self) -> "RamifiedSeries":
        return self.monomial(self.fq.minus_one, -self.w)

    def theta_pow(self, n: int) -> "RamifiedSeries":
        """θ^n exactly (n may be negative)."""
        return self.monomial(self.fq.pow(self.fq.minus_one, n % 2) if self.fq.p != 2 else 1,
                             -self.w * n)

    def root(self) -> "RamifiedSeries":
        """The fixed (q-1)-st root of -θ, namely π^{-w/(q-1)}."""
        return self.monomial(1, -self.w // (self.q - 1))

    def from_coeffs(self, v: int, coeffs: Sequence[int], prec: int | None = None) -> "RamifiedSeries":
        return RamifiedSeries.make(self, v, np.asarray(coeffs, dtype=np.int64), prec)

    def from_apoly(self, a: APoly, twist: int = 0) -> "RamifiedSeries":
        """a(θ^{q^twist}) as an exact series (Frobenius fixes F_q coefficients)."""
        F = self.fq
        if a.is_zero():
            return self.zero()
        step = self.q**twist
        deg = a.degree
        top = -self.w * deg * step
        n = self.w * deg * step + 1
        c = np.zeros(n, dtype=np.int64)
        for i, ai in enumerate(a.coeffs):
            if ai:
                # θ^{i q^m} = (-1)^{i} π^{-w i q^m}   ((-1)^{q^m} = -1 for odd q)
                sign = ai if (i % 2 == 0 or F.p == 2) else F.neg(ai)
                c[-self.w * i * step - top] = sign
        return RamifiedSeries.make(self, top, c, None)

    def random(self, rng: np.random.Generator, v: int, length: int, exact: bool = False,
               unit_lead: bool = True) -> "RamifiedSeries":
        c = rng.integers(0, self.q, size=length, dtype=np.int64)
        if unit_lead and length:
            c[0] = rng.integers(1, self.q)
        return RamifiedSeries.make(self, v, c, None if exact else v + length)


_EMPTY = np.zeros(0, dtype=np.int64)
_EMPTY.setflags(write=False)


class RamifiedSeries:
    """Element Σ c_i π^{v+i} known modulo π^prec (prec None: exact value)."""

    __slots__ = ("field", "v", "c", "prec")

    def __init__(self, field: RField, v: int, c: np.ndarray, prec):
        self.field = field
        self.v = v
        self.c = c
        self.prec = prec

    # canonical constructor: strip, clip to the relative cap
    @staticmethod
    def make(field: RField, v: int, c: np.ndarray, prec) -> "RamifiedSeries":
        v = int(v)
        if prec is not None:
            prec = int(prec)
            n = prec - v
            if n <= 0:
                return RamifiedSeries(field, prec, _EMPTY, prec)
            c = c[:n]
        nz = np.flatnonzero(c)
        if len(nz) == 0:
            if prec is None:
                return RamifiedSeries(field, 0, _EMPTY, None)
            return RamifiedSeries(field, prec, _EMPTY, prec)
        first = int(nz[0])
        v += first
        if prec is None:
            c = c[first:int(nz[-1]) + 1]
            if len(c) > field.prec:
                c = c[: field.prec]
                prec = v + field.prec
        else:
            c = c[first:]
            if len(c) > field.prec:
                c = c[: field.prec]
            prec = min(prec, v + field.prec)
            if len(c) < prec - v:
                c = np.concatenate([c, np.zeros(prec - v - len(c), dtype=np.int64)])
        c = np.ascontiguousarray(c, dtype=np.int64)
        c.setflags(write=False)
        return RamifiedSeries(field, v, c, prec)

    # -- basic properties --------------------------------------------------
    @property
    def fq(self) -> FieldDesc:
        return self.field.fq

    @property
    def exact(self) -> bool:
        return self.prec is None

    @property
    def abs_prec(self):
        return INF if self.prec is None else self.prec

    def is_zero(self) -> bool:
        """True if zero to the known precision."""
        return len(self.c) == 0

    def is_exact_zero(self) -> bool:
        return self.prec is None and len(self.c) == 0

    @property
    def valuation(self):
        """Exact valuation, or the precision bound if zero to precision."""
        if len(self.c):
            return self.v
        return INF if self.prec is None else self.prec

    val = valuation

    @property
    def rel_prec(self):
        if self.prec is None:
            return INF
        return self.prec - self.valuation

    @property
    def lead(self) -> int:
        return int(self.c[0]) if len(self.c) else 0

    def coefficient(self, exp: int) -> int:
        i = exp - self.v
        if self.prec is not None and exp >= self.prec:
            raise PrecisionExhausted(f"coefficient π^{exp} beyond precision {self.prec}")
        if 0 <= i < len(self.c):
            return int(self.c[i])
        return 0

    def _check(self, other: "RamifiedSeries"):
        if self.field.key != other.field.key:
            raise ContextMismatch(f"{self.field} vs {other.field}")

    def _ctx(self, other: "RamifiedSeries") -> RField:
        if other.field.prec > self.field.prec:
            return other.field
        return self.field

    def _coerce(self, other) -> "RamifiedSeries":
        if isinstance(other, RamifiedSeries):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return self.field.scalar(self.fq.from_int(int(other)))
        if isinstance(other, APoly):
            return self.field.from_apoly(other)
        return NotImplemented

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _add(self, other, self._ctx(other))

    __radd__ = __add__

    def __neg__(self):
        return RamifiedSeries(self.field, self.v, _ro(self.fq.vneg(self.c)), self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _add(self, -other, self._ctx(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _add(other, -self, self._ctx(other))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.scale(self.fq.from_int(int(other)))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(self, other, self._ctx(other))

    __rmul__ = __mul__

    def scale(self, c: int) -> "RamifiedSeries":
        """Multiplication by the F_q element with code c."""
        if c == 0:
            return self.field.zero()
        if c == 1:
            return self
        return RamifiedSeries(self.field, self.v, _ro(self.fq.vmul(self.c, c)), self.prec)

    def shift(self, k: int) -> "RamifiedSeries":
        """Multiply by π^k (exact)."""
        p = None if self.prec is None else self.prec + k
        return RamifiedSeries(self.field, self.v + k, self.c, p)

    def inv(self) -> "RamifiedSeries":
        if len(self.c) == 0:
            raise InversionOfZero("inverse of an element that is zero to precision")
        F = self.field
        if self.prec is None and len(self.c) == 1:
            return RamifiedSeries(F, -self.v, np.array([self.fq.inv(int(self.c[0]))], dtype=np.int64), None)
        n = F.prec if self.prec is None else min(self.prec - self.v, F.prec)
        y = K.inv_trunc(self.c, n, self.fq)
        return RamifiedSeries.make(F, -self.v, y, -self.v + n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int) -> "RamifiedSeries":
        if n < 0:
            return self.inv() ** (-n)
        out = self.field.one()
        base = self
        first = True
        while n:
            if n & 1:
                out = base if first else out * base
                first = False
            n >>= 1
            if n:
                base = base * base
        return out

    def frob(self, ell: int = 1) -> "RamifiedSeries":
        """x ↦ x^{q^ell}: scale exponents by q^ell (F_q coefficients are fixed)."""
        if ell == 0:
            return self
        if ell < 0:
            raise ValueError("negative Frobenius twist on the base field")
        F = self.field
        s = F.q**ell
        v = self.v * s
        if self.prec is None:
            prec = None
            span = (len(self.c) - 1) * s + 1 if len(self.c) else 0
            ncoef = len(self.c)
            if span > F.prec:
                ncoef = (F.prec - 1) // s + 1
                prec = v + F.prec
        else:
            if len(self.c) == 0:
                return RamifiedSeries(F, self.prec * s, _EMPTY, self.prec * s)
            prec = min(self.prec * s, v + F.prec)
            ncoef = (prec - v - 1) // s + 1
        src = self.c[:ncoef]
        size = (len(src) - 1) * s + 1 if len(src) else 0
        if prec is not None:
            size = max(size, prec - v)
        out = np.zeros(size, dtype=np.int64)
        out[: (len(src) - 1) * s + 1 : s] = src
        return RamifiedSeries.make(F, v, out, prec)

    def truncate(self, prec: int) -> "RamifiedSeries":
        """Forget all information at and beyond π^prec."""
        p = prec if self.prec is None else min(prec, self.prec)
        return RamifiedSeries.make(self.field, self.v, self.c, p)

    def rebase(self, field: RField) -> "RamifiedSeries":
        """Move to another precision context of the same field."""
        if field.key != self.field.key:
            raise ContextMismatch("rebase needs the same q and w")
        return RamifiedSeries.make(field, self.v, self.c, self.prec)

    # -- comparisons -------------------------------------------------------
    def same_window(self, other: "RamifiedSeries") -> bool:
        """Bitwise identical balls."""
        return (self.prec == other.prec and self.valuation == other.valuation
                and np.array_equal(self.c, other.c))

    def agrees(self, other: "RamifiedSeries") -> bool:
        """Balls overlap: difference is zero to the common precision."""
        return (self - other).is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, np.integer)):
            other = self.field.scalar(self.fq.from_int(int(other)))
        if not isinstance(other, RamifiedSeries):
            return NotImplemented
        return self.same_window(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RamifiedSeries({self.to_text()})"

    def to_text(self, nterms: int = 4) -> str:
        if not len(self.c):
            return "0" if self.prec is None else f"O(π^{self.prec})"
        parts = []
        for i, c in enumerate(self.c[: nterms * 4]):
            if c:
                parts.append(f"{c}·π^{self.v + i}")
            if len(parts) >= nterms:
                break
        tail = "" if self.prec is None else f" + O(π^{self.prec})"
        more = " + …" if len(np.flatnonzero(self.c)) > len(parts) else ""
        return " + ".join(parts) + more + tail

    def to_json(self) -> dict:
        fq = self.fq
        return {
            "w": self.field.w,
            "v": int(self.valuation) if self.valuation != INF else None,
            "abs_prec": self.prec,
            "coeffs": [fq.to_poly(int(x)) for x in self.c],
        }

    @classmethod
    def from_json(cls, field: RField, data: dict) -> "RamifiedSeries":
        fq = field.fq
        coeffs = np.array([fq.from_poly(d) for d in data["coeffs"]], dtype=np.int64)
        v = data["v"] if data["v"] is not None else 0
        return cls.make(field, v, coeffs, data["abs_prec"])


def _ro(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _add(x: RamifiedSeries, y: RamifiedSeries, F: RField) -> RamifiedSeries:
    if x.is_exact_zero():
        return y if y.field is F else y.rebase(F)
    if y.is_exact_zero():
        return x if x.field is F else x.rebase(F)
    xp, yp = x.abs_prec, y.abs_prec
    prec = min(xp, yp)
    lo = min(x.v if len(x.c) else xp, y.v if len(y.c) else yp)
    if prec == INF:
        hi = max(x.v + len(x.c), y.v + len(y.c))
    else:
        hi = prec
        if hi <= lo:
            return RamifiedSeries(F, int(prec), _EMPTY, int(prec))
    n = int(hi - lo)
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    for arr, z in ((a, x), (b, y)):
        if len(z.c):
            s = z.v - lo
            m = min(len(z.c), n - s)
            if m > 0:
                arr[s:s + m] = z.c[:m]
    c = x.fq.vadd(a, b)
    return RamifiedSeries.make(F, lo, c, None if prec == INF else int(prec))


def _mul(x: RamifiedSeries, y: RamifiedSeries, F: RField) -> RamifiedSeries:
    if x.is_exact_zero() or y.is_exact_zero():
        return F.zero()
    if x.is_zero() or y.is_zero():
        # zero to precision: only the precision bound survives
        prec = min(x.abs_prec + y.valuation, y.abs_prec + x.valuation)
        if prec == INF:
            return F.zero()
        return RamifiedSeries(F, int(prec), _EMPTY, int(prec))
    v = x.v + y.v
    if x.prec is None and y.prec is None:
        n = len(x.c) + len(y.c) - 1
        prec = None
        if n > F.prec:
            n = F.prec
            prec = v + n
    else:
        rel = min(x.rel_prec, y.rel_prec, F.prec)
        n = int(rel)
        prec = v + n
    if len(x.c) == 1 and len(y.c) == 1:
        c = np.array([x.fq.mul(int(x.c[0]), int(y.c[0]))], dtype=np.int64)
        if prec is not None:
            c = np.concatenate([c, np.zeros(n - 1, dtype=np.int64)])
    elif len(y.c) == 1:
        c = x.fq.vmul(x.c[:n], int(y.c[0]))
    elif len(x.c) == 1:
        c = y.fq.vmul(y.c[:n], int(x.c[0]))
    else:
        c = K.mul_trunc(x.c, y.c, n, x.fq)
    return RamifiedSeries.make(F, v, c, prec)


def rls_root_setup(q, w: int, prec: int = 40):
    """(π, θ, (−θ)^{1/(q−1)}) in the working field F_q((π)), π^{-w} = -θ."""
    fq = q if isinstance(q, FieldDesc) else _fq_from_q(q)
    F = RField(fq, w, prec)
    return F.pi(), F.theta(), F.root()


def _fq_from_q(q) -> FieldDesc:
    from .fq import parse_q

    if isinstance(q, tuple):
        return fq_init(*q)
    return parse_q(q)


def min_valuation(xs: Iterable[RamifiedSeries]):
    return min((x.valuation for x in xs), default=INF)


def min_prec(xs: Iterable[RamifiedSeries]):
    return min((x.abs_prec for x in xs), default=INF)

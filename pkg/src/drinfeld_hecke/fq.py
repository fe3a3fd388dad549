"""Finite fields F_q = F_p[x]/(m) and the polynomial ring A = F_q[θ].

Elements of F_q are plain ints in ``range(q)``: the base-p digits of the
int are the coefficients (little-endian) of the residue polynomial in x.
For prime fields this is ordinary arithmetic mod p.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeTooLarge,
    FieldTooLarge,
    NoIrreducibleFound,
    NonPrimeCharacteristic,
)

MAX_FIELD_SIZE = 2**16
MAX_IRREDUCIBLE_DEGREE = 4


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- dense polynomials over F_p (lists of ints, little-endian) -------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic m over F_p."""
    a = [x % p for x in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _fp_trim(a[:dm])


def _fp_is_irreducible(m: Sequence[int], p: int) -> bool:
    d = len(m) - 1
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            f = list(tail) + [1]
            if not _fp_mod(m, f, p):
                return False
    return True


def _find_modulus(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    # lexicographically first monic irreducible, constant term varying fastest
    for tail in itertools.product(range(p), repeat=e):
        m = list(tail) + [1]
        if m[0] == 0:
            continue
        if _fp_is_irreducible(m, p):
            return tuple(m)
    raise NoIrreducibleFound(f"no irreducible of degree {e} over F_{p}")


@dataclass(frozen=True)
class FieldDesc:
    """Descriptor of F_q with q = p**e; ``c`` is the constant-field degree."""

    p: int
    e: int
    modulus: tuple[int, ...]
    c: int = 1

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def prime(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        return f"FieldDesc(F_{self.q})"

    # log/exp tables w.r.t. a fixed primitive element
    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        p, e, q = self.p, self.e, self.q
        if e == 1:
            g = next(x for x in range(1, p) if _order_mod(x, p) == p - 1) if p > 2 else 1
            expt = np.empty(2 * (q - 1), dtype=np.int64)
            x = 1
            for i in range(q - 1):
                expt[i] = x
                x = x * g % p
        else:
            expt = None
            for cand in range(p, q):
                table = self._power_table(cand)
                if table is not None:
                    expt = table
                    break
            if expt is None:
                raise NoIrreducibleFound("no primitive element (modulus not irreducible?)")
        expt[q - 1:] = expt[: q - 1]
        logt = np.zeros(q, dtype=np.int64)
        logt[expt[: q - 1]] = np.arange(q - 1)
        expt.setflags(write=False)
        logt.setflags(write=False)
        return logt, expt

    def _power_table(self, g: int) -> np.ndarray | None:
        q = self.q
        out = np.empty(2 * (q - 1), dtype=np.int64)
        gp = self.to_poly(g)
        x = [1]
        for i in range(q - 1):
            v = self.from_poly(x)
            if i > 0 and v == 1:
                return None
            out[i] = v
            x = _fp_mod(_fp_polymul(x, gp, self.p), self.modulus, self.p)
        if self.from_poly(x) != 1:
            return None
        return out

    @property
    def logt(self) -> np.ndarray:
        return self._tables[0]

    @property
    def expt(self) -> np.ndarray:
        return self._tables[1]

    # -- digit encoding ---------------------------------------------------
    def to_poly(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_poly(self, digits: Iterable[int]) -> int:
        v, m = 0, 1
        for d in digits:
            v += (d % self.p) * m
            m *= self.p
        return v

    # -- scalar arithmetic ------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_poly(x + y for x, y in zip(self.to_poly(a), self.to_poly(b)))

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_poly(-x for x in self.to_poly(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        logt, expt = self._tables
        return int(expt[logt[a] + logt[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.e == 1:
            return pow(a, -1, self.p)
        logt, expt = self._tables
        return int(expt[(self.q - 1 - logt[a]) % (self.q - 1)])

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n <= 0:
                raise ZeroDivisionError("0 ** n with n <= 0")
            return 0
        logt, expt = self._tables
        return int(expt[(int(logt[a]) * n) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    @property
    def minus_one(self) -> int:
        return self.neg(1)

    def from_int(self, n: int) -> int:
        """Image of the integer n in F_p ⊂ F_q."""
        return n % self.p

    # -- vectorized helpers on int64 arrays --------------------------------
    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        m = 1
        for _ in range(self.e):
            out += (((a // m) % self.p + (b // m) % self.p) % self.p) * m
            m *= self.p
        return out

    def vneg(self, a: np.ndarray) -> np.ndarray:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        out = np.zeros_like(a)
        m = 1
        for _ in range(self.e):
            out += ((-((a // m) % self.p)) % self.p) * m
            m *= self.p
        return out

    def vmul(self, a: np.ndarray, b) -> np.ndarray:
        if self.e == 1:
            return (a * b) % self.p
        logt, expt = self._tables
        a = np.asarray(a)
        b = np.asarray(b)
        r = expt[logt[a] + logt[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vsum(self, a: np.ndarray, axis: int = 0) -> np.ndarray:
        """Sum in F_q along an axis."""
        if self.e == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        out = 0
        m = 1
        for _ in range(self.e):
            out = out + (((a // m) % self.p).sum(axis=axis) % self.p) * m
            m *= self.p
        return np.asarray(out, dtype=np.int64)


def _order_mod(x: int, p: int) -> int:
    k, y = 1, x % p
    while y != 1:
        y = y * x % p
        k += 1
    return k


def _fp_polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


@lru_cache(maxsize=None)
def fq_init(p: int, e: int = 1) -> FieldDesc:
    """Build (and cache) the descriptor of F_{p^e}."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be positive")
    if p**e > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"q = {p}^{e} exceeds {MAX_FIELD_SIZE}")
    return FieldDesc(p, e, _find_modulus(p, e))


def parse_q(text: str | int) -> FieldDesc:
    """Accept '3', '2^2' or an int prime."""
    if isinstance(text, int):
        return fq_init(text, 1)
    s = str(text).replace("**", "^").strip()
    if "^" in s:
        a, b = s.split("^", 1)
        return fq_init(int(a), int(b))
    n = int(s)
    for p in range(2, n + 1):
        if n % p == 0:
            e = 0
            m = n
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise NonPrimeCharacteristic(f"{n} is not a prime power")
            return fq_init(p, e)
    raise NonPrimeCharacteristic(f"{n} is not a prime power")


# -- A = F_q[θ] -----------------------------------------------------------

@dataclass(frozen=True)
class APoly:
    """Element of F_q[θ]; ``coeffs`` little-endian with no trailing zero."""

    fq: FieldDesc
    coeffs: tuple[int, ...] = field(default=())

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def const(cls, fq: FieldDesc, c: int) -> "APoly":
        return cls(fq, (c,))

    @classmethod
    def theta(cls, fq: FieldDesc, n: int = 1) -> "APoly":
        return cls(fq, (0,) * n + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # deg 0 = -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "APoly") -> "APoly":
        F = self.fq
        n = max(len(self.coeffs), len(other.coeffs))
        return APoly(F, tuple(F.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> "APoly":
        return APoly(self.fq, tuple(self.fq.neg(c) for c in self.coeffs))

    def __sub__(self, other: "APoly") -> "APoly":
        return self + (-other)

    def __mul__(self, other) -> "APoly":
        F = self.fq
        if isinstance(other, int):
            return APoly(F, tuple(F.mul(c, other) for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return APoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return APoly(F, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "APoly":
        out = APoly.const(self.fq, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "APoly"):
        F = self.fq
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return APoly(F), self
        quo = [0] * (dq + 1)
        inv_lead = F.inv(other.lead)
        db = other.degree
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                f = F.mul(c, inv_lead)
                quo[i - db] = f
                for j, b in enumerate(other.coeffs):
                    r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b))
        return APoly(F, tuple(quo)), APoly(F, tuple(r))

    def __mod__(self, other: "APoly") -> "APoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "APoly") -> "APoly":
        return divmod(self, other)[0]

    def __str__(self) -> str:
        return format_apoly(self)

    def __repr__(self) -> str:
        return f"APoly({format_apoly(self)})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def format_apoly(a: APoly, var: str = "θ") -> str:
    if a.is_zero():
        return "0"
    parts = []
    for i in range(len(a.coeffs) - 1, -1, -1):
        c = a.coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return "+".join(parts)


_TERM = re.compile(r"^(?:(\d+)\*?)?(?:([θTt])(?:\^(\d+))?)?$")


def parse_apoly(fq: FieldDesc, text: str) -> APoly:
    """Parse 'θ^2+θ+1' (ASCII 'T' or 't' also accepted as the variable)."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace("-", "+-")
    out: dict[int, int] = {}
    for term in s.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        term = term.lstrip("-")
        m = _TERM.match(term)
        if not m or term == "":
            raise ValueError(f"cannot parse term {term!r}")
        c_txt, var, e_txt = m.groups()
        c = int(c_txt) if c_txt is not None else 1
        if c >= fq.q:
            raise ValueError(f"coefficient {c} is not an element of F_{fq.q}")
        deg = 0 if var is None else (int(e_txt) if e_txt else 1)
        if var is None and c_txt is None:
            raise ValueError(f"cannot parse term {term!r}")
        if neg:
            c = fq.neg(c)
        out[deg] = fq.add(out.get(deg, 0), c)
    n = max(out) + 1
    return APoly(fq, tuple(out.get(i, 0) for i in range(n)))


def all_apolys(fq: FieldDesc, max_deg: int, monic: bool = False) -> list[APoly]:
    """All elements of degree ≤ max_deg (or exactly max_deg and monic)."""
    if monic:
        return [APoly(fq, tail + (1,)) for tail in itertools.product(range(fq.q), repeat=max_deg)]
    if max_deg < 0:
        return [APoly(fq)]
    return [APoly(fq, c) for c in itertools.product(range(fq.q), repeat=max_deg + 1)]


def is_irreducible(a: APoly) -> bool:
    d = a.degree
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for f in all_apolys(a.fq, k, monic=True):
            if (a % f).is_zero():
                return False
    return True


def monic_irreducibles(fq: FieldDesc, d: int) -> list[APoly]:
    """All monic irreducible polynomials of degree d in F_q[θ]."""
    if d < 1:
        raise ValueError("degree must be positive")
    if d > MAX_IRREDUCIBLE_DEGREE:
        raise DegreeTooLarge(f"degree {d} > {MAX_IRREDUCIBLE_DEGREE}")
    return [f for f in all_apolys(fq, d, monic=True) if is_irreducible(f)]

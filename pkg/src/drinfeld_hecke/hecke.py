"""Hecke operators T_{𝔭,r} (scalar) and 𝔗_{𝔭,r} (vectorial) as explicit coset sums.

Forms are passed in as evaluators ``OmegaPoint -> value`` so one engine
serves h_r, 𝓗_r(·, θ^{q^n}) and 𝓖_r alike.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .drinfeld import Lattice, stable_exp
from .errors import NonPolynomialInverse, NotIrreducible, NotMonic
from .fq import APoly, all_apolys, format_apoly, is_irreducible
from .forms import OmegaPoint, apoly_adjugate, apoly_det, gl_action
from .series import RamifiedSeries
from .tate import TateSeries

ScalarForm = Callable[[OmegaPoint], RamifiedSeries]
VectorForm = Callable[[OmegaPoint], Sequence[TateSeries]]


@dataclass(frozen=True)
class CosetRep:
    ell: int
    b: tuple
    matrix: tuple

    def __str__(self) -> str:
        return f"β_{self.ell},(" + ", ".join(format_apoly(x) for x in self.b) + ")"


def coset_reps(p: APoly, r: int) -> list[CosetRep]:
    """∪_ℓ B_{ℓ,r}: upper-triangular matrices whose ℓ-th column is (b_1..b_{ℓ−1}, 𝔭, 0..0)."""
    if not p.is_monic():
        raise NotMonic(f"{format_apoly(p)} is not monic")
    if not is_irreducible(p):
        raise NotIrreducible(f"{format_apoly(p)} is not irreducible")
    fq = p.fq
    one, zero = APoly.const(fq, 1), APoly(fq)
    small = all_apolys(fq, p.degree - 1)
    out = []
    for ell in range(1, r + 1):
        for head in itertools.product(small, repeat=ell - 1):
            col = tuple(head) + (p,) + (zero,) * (r - ell)
            M = [[one if i == j else zero for j in range(r)] for i in range(r)]
            for i in range(r):
                M[i][ell - 1] = col[i]
            out.append(CosetRep(ell, col, tuple(tuple(row) for row in M)))
    return out


def coset_count(q: int, r: int, deg: int) -> int:
    return sum(q ** ((ell - 1) * deg) for ell in range(1, r + 1))


# ---------------------------------------------------------------------------
# scalar
# ---------------------------------------------------------------------------

def slash_scalar(f: ScalarForm, k: int, gamma, z: OmegaPoint) -> RamifiedSeries:
    gz, j = gl_action(gamma, z)
    return f(gz) * j ** (-k)


def hecke_scalar(f: ScalarForm, k: int, p: APoly, z: OmegaPoint) -> RamifiedSeries:
    F = z.field
    acc = F.zero()
    for rep in coset_reps(p, z.r):
        acc = acc + slash_scalar(f, k, rep.matrix, z)
    return acc * F.from_apoly(p) ** k


def eigenvalue(p: APoly, r: int) -> APoly:
    """𝔭^{1+q+⋯+q^{r−2}}."""
    q = p.fq.q
    return p ** ((q ** (r - 1) - 1) // (q - 1))


# ---------------------------------------------------------------------------
# vectorial
# ---------------------------------------------------------------------------

def rho_inverse_factor(gamma, m: int):
    """det(γ̄)^m γ̄^{−1} as a polynomial matrix: det^{m−1}·adj(γ̄)."""
    adj = apoly_adjugate(gamma)
    det = apoly_det(gamma)
    if m >= 1:
        c = det ** (m - 1)
        return tuple(tuple(a * c for a in row) for row in adj)
    if det.degree != 0:
        raise NonPolynomialInverse("m = 0 needs det(γ̄) to be a unit")
    if m == 0:
        c = APoly.const(det.fq, det.fq.inv(det.lead))
        return tuple(tuple(a * c for a in row) for row in adj)
    raise NonPolynomialInverse("negative m")


def _apply_poly_matrix(M, vec: Sequence[TateSeries]) -> list[TateSeries]:
    F = vec[0].field
    T = vec[0].T
    out = []
    for row in M:
        acc = TateSeries.zero(F, T)
        for a, v in zip(row, vec):
            if not a.is_zero():
                acc = acc + v.mul_tpoly(a)
        out.append(acc)
    return out


def slash_vectorial(P: VectorForm, k: int, m: int, gamma, z: OmegaPoint) -> list[TateSeries]:
    factor = rho_inverse_factor(gamma, m)
    gz, j = gl_action(gamma, z)
    jk = j ** (-k)
    return [x * jk for x in _apply_poly_matrix(factor, P(gz))]


def hecke_vectorial(P: VectorForm, k: int, m: int, p: APoly, z: OmegaPoint) -> list[TateSeries]:
    F = z.field
    acc = None
    for rep in coset_reps(p, z.r):
        term = slash_vectorial(P, k, m, rep.matrix, z)
        acc = term if acc is None else [a + b for a, b in zip(acc, term)]
    pk = F.from_apoly(p) ** k
    return [a * pk for a in acc]


def hecke_last_split(f: Callable[[OmegaPoint], TateSeries], k: int, m: int, p: APoly,
                     z: OmegaPoint) -> TateSeries:
    """Last coordinate of 𝔗 via 𝔭(t)^m over ℓ < r and 𝔭(t)^{m−1} over ℓ = r."""
    F = z.field
    r = z.r
    low = high = None
    for rep in coset_reps(p, r):
        gz, j = gl_action(rep.matrix, z)
        term = f(gz) * j ** (-k)
        if rep.ell < r:
            low = term if low is None else low + term
        else:
            high = term if high is None else high + term
    out = low.mul_tpoly(p ** m) + high.mul_tpoly(p ** (m - 1))
    return out * F.from_apoly(p) ** k


def hecke_shadow_at(f: ScalarForm, k: int, m: int, p: APoly, z: OmegaPoint, n: int) -> RamifiedSeries:
    """The same split with t specialized to θ^{q^n}: 𝔭(t) ↦ 𝔭^{q^n}."""
    F = z.field
    r = z.r
    pn = F.from_apoly(p, twist=n)
    low, high = F.zero(), F.zero()
    for rep in coset_reps(p, r):
        gz, j = gl_action(rep.matrix, z)
        term = f(gz) * j ** (-k)
        if rep.ell < r:
            low = low + term
        else:
            high = high + term
    return (low * pn ** m + high * pn ** (m - 1)) * F.from_apoly(p) ** k


# ---------------------------------------------------------------------------
# the logarithmic-derivative identity behind the eigenvalue computation
# ---------------------------------------------------------------------------

def _inv_exp(basis, x: RamifiedSeries, D: int) -> RamifiedSeries:
    L = Lattice(tuple(basis), "sublattice").reduced()
    _, (val,), _ = stable_exp(L, [x], 0, D0=D)
    return val.inv()


def sum2_check(z: OmegaPoint, p: APoly, ell: int, D: int = 1):
    """Σ_{b_1} 1/exp_{Λ′}(z_1 + b_1 z_ℓ) against 1/exp_{Λ_z̃}(z_1).

    Λ′ is spanned by entries 2..r of β_{ℓ,b}·z (un-normalized) and the b_1-sum
    runs over the cosets of Λ_z̃/Λ′.  For ℓ = r the lattice is 𝔭Λ″ with
    Λ″ = ⟨z_i + b_i, 𝔭⟩/𝔭, related through exp_{𝔭Λ″}(𝔭x) = 𝔭 exp_{Λ″}(x).
    Returns ``(lhs, rhs, rel1_pairs)``; rel1_pairs is empty for ℓ < r.
    """
    F = z.field
    r = z.r
    fq = p.fq
    if not 2 <= ell <= r:
        raise ValueError("ℓ must satisfy 2 ≤ ℓ ≤ r")
    zs = z.z
    pz = F.from_apoly(p)
    small = all_apolys(fq, p.degree - 1)
    rhs = _inv_exp(zs[1:], zs[0], D)
    lhs = F.zero()
    rel1 = []
    # fix b_2 … b_{ℓ−1} = 0; the identity holds for each choice
    basis = [zs[i] for i in range(1, r)]
    basis[ell - 2] = pz * zs[ell - 1]
    for b1 in small:
        x = zs[0] + F.from_apoly(b1) * zs[ell - 1]
        lhs = lhs + _inv_exp(basis, x, D)
    if ell == r:
        pinv = pz.inv()
        scaled = [b * pinv for b in basis]
        for b1 in small[:2]:
            x = (zs[0] + F.from_apoly(b1) * zs[ell - 1]) * pinv
            big = _inv_exp(basis, x * pz, D).inv()
            sm = _inv_exp(scaled, x, D).inv()
            rel1.append((big, sm * pz))
    return lhs, rhs, rel1


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class HeckeReport:
    operator: str
    prime: str
    rank: int
    weight: int
    m: int | None
    provenance: dict
    eigenvalue: str
    discrepancy: int | None
    threshold: int
    passed: bool

    def to_json(self) -> dict:
        return {"operator": self.operator, "prime": self.prime, "rank": self.rank,
                "weight": self.weight, "type": self.m, "point": self.provenance,
                "eigenvalue": self.eigenvalue, "discrepancy": self.discrepancy,
                "threshold": self.threshold, "pass": self.passed}

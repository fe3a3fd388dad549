"""Discrepancy valuations.

All identities are compared by the valuation of ``lhs − rhs`` measured
against the size of the quantities involved, so the figure reads as "number
of agreeing π-adic digits".  ``None`` means the difference is exactly zero.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .series import INF, RamifiedSeries
from .tate import TateSeries


def _val(x) -> float:
    if isinstance(x, TateSeries):
        return x.gauss_valuation()
    return x.valuation


def _is_exact_zero(x) -> bool:
    return x.is_exact_zero()


def discrepancy(lhs, rhs, scale=None):
    """val(lhs − rhs) − min(val lhs, val rhs[, scale]); TateSeries use Gauss valuations."""
    d = lhs - rhs
    if _is_exact_zero(d):
        return None
    ref = min(_val(lhs), _val(rhs))
    if scale is not None:
        ref = min(ref, scale)
    if ref == INF:
        return None
    return int(_val(d) - ref)


def vanishing(x, scale) -> int | None:
    """How far ``x`` sits below ``scale`` (for quantities that should vanish)."""
    if _is_exact_zero(x):
        return None
    return int(_val(x) - scale)


def worst(values: Iterable) -> int | None:
    """Minimum over discrepancies, ignoring exact agreements (None)."""
    vals = [v for v in values if v is not None]
    return min(vals) if vals else None


def passes(disc, threshold) -> bool:
    return disc is None or disc >= threshold


def product_scale(row: Sequence, col: Sequence) -> float:
    """Smallest valuation among the summands a_i·b_i of a matrix-product entry."""
    return min(_val(a) + _val(b) for a, b in zip(row, col))


def strictly_increasing(seq: Sequence) -> bool:
    xs = [INF if v is None else v for v in seq]
    return all(b > a for a, b in zip(xs, xs[1:]))

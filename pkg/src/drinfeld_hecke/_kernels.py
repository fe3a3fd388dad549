"""Hot loops: truncated series product/inverse and brute-force lattice sums.

Every kernel exists twice, a numba-compiled version and a vectorized
pure-numpy version with the same signature and bit-identical output.
Set ``DRINFELD_HECKE_NO_NUMBA=1`` to force the numpy path (JIT is also
skipped automatically when numba is unavailable).

Field elements are int64 codes as in :mod:`drinfeld_hecke.fq`; every
kernel receives ``(p, e, logt, expt)`` describing F_q.
"""
from __future__ import annotations

import contextlib
import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba as nb

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    nb = None
    HAVE_NUMBA = False

_ENV_FLAG = "DRINFELD_HECKE_NO_NUMBA"


def _env_disables_numba() -> bool:
    return os.environ.get(_ENV_FLAG, "").strip().lower() in ("1", "true", "yes", "on")


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def _np_fadd(a, b, p, e):
    if e == 1:
        return (a + b) % p
    if p == 2:
        return np.bitwise_xor(a, b)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    m = 1
    for _ in range(e):
        out += (((a // m) % p + (b // m) % p) % p) * m
        m *= p
    return out


def _np_fneg(a, p, e):
    if e == 1:
        return (-a) % p
    if p == 2:
        return a
    out = np.zeros(np.shape(a), dtype=np.int64)
    m = 1
    for _ in range(e):
        out += ((-((a // m) % p)) % p) * m
        m *= p
    return out


def _np_fmul(a, b, p, e, logt, expt):
    if e == 1:
        return (a * b) % p
    r = expt[logt[a] + logt[b]]
    return np.where((a == 0) | (b == 0), 0, r)


def _np_fsum_last(a, p, e):
    """F_q-sum over the last axis."""
    if e == 1:
        return a.sum(axis=-1) % p
    if p == 2:
        return np.bitwise_xor.reduce(a, axis=-1)
    out = np.zeros(a.shape[:-1], dtype=np.int64)
    m = 1
    for _ in range(e):
        out += (((a // m) % p).sum(axis=-1) % p) * m
        m *= p
    return out


def _np_finv(a, p, e, logt, expt):
    q = p**e
    return expt[(q - 1 - logt[a]) % (q - 1)]


def mul_trunc_numpy(a, b, n, p, e, logt, expt):
    a = a[:n]
    b = b[:n]
    out = np.zeros(n, dtype=np.int64)
    if len(a) == 0 or len(b) == 0:
        return out
    if e == 1:
        c = np.convolve(a, b)[:n] % p
        out[: len(c)] = c
        return out
    # extension field: outer product of codes, then F_q-sum along anti-diagonals
    prod = _np_fmul(a[:, None], b[None, :], p, e, logt, expt)
    idx = (np.arange(len(a))[:, None] + np.arange(len(b))[None, :]).ravel()
    prod = prod.ravel()
    keep = idx < n
    idx, prod = idx[keep], prod[keep]
    if p == 2:
        # XOR-accumulate bit planes via parity of bincounts
        bits = int(e)
        for k in range(bits):
            plane = (prod >> k) & 1
            cnt = np.bincount(idx, weights=plane, minlength=n)[:n].astype(np.int64)
            out |= (cnt & 1) << k
        return out
    m = 1
    for _ in range(e):
        plane = (prod // m) % p
        cnt = np.bincount(idx, weights=plane, minlength=n)[:n].astype(np.int64)
        out += (cnt % p) * m
        m *= p
    return out


def inv_trunc_numpy(a, n, p, e, logt, expt):
    """First n coefficients of 1/a by Newton iteration y <- y(2 - a y)."""
    y = np.zeros(1, dtype=np.int64)
    y[0] = _np_finv(np.int64(a[0]), p, e, logt, expt)
    prec = 1
    two = np.zeros(1, dtype=np.int64)
    while prec < n:
        prec = min(2 * prec, n)
        ay = mul_trunc_numpy(a[:prec], y, prec, p, e, logt, expt)
        # 2 - a y  computed as  -(a y - 2)
        corr = _np_fneg(ay, p, e)
        two[0] = 2 % p if e == 1 else _two_code(p)
        corr[0] = _np_fadd(corr[0], two[0], p, e)
        y = mul_trunc_numpy(y, corr, prec, p, e, logt, expt)
    return y[:n].copy() if len(y) >= n else np.concatenate([y, np.zeros(n - len(y), np.int64)])


def _two_code(p):
    return 2 % p  # digit 0 of 2 in F_p ⊂ F_q


def _np_digits(start, count, d, q):
    idx = np.arange(start, start + count, dtype=np.int64)
    out = np.empty((count, d), dtype=np.int64)
    for s in range(d):
        out[:, s] = idx % q
        idx //= q
    return out


def _np_combine(digits, B, p, e, logt, expt):
    """Rows Σ_s digits[:, s] * B[s] over F_q."""
    if e == 1:
        return (digits @ B) % p
    acc = np.zeros((digits.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(B.shape[0]):
        acc = _np_fadd(acc, _np_fmul(digits[:, s:s + 1], B[s][None, :], p, e, logt, expt), p, e)
    return acc


def _np_batched_inverse(U, n, p, e, logt, expt):
    """Row-wise first n coefficients of 1/U (U[:, 0] nonzero), O(n^2) recurrence."""
    P = U.shape[0]
    Y = np.zeros((P, n), dtype=np.int64)
    inv0 = _np_finv(U[:, 0], p, e, logt, expt)
    Y[:, 0] = inv0
    neg_inv0 = _np_fneg(inv0, p, e)
    for k in range(1, n):
        m = min(k, U.shape[1] - 1)
        if m <= 0:
            continue
        a = U[:, 1:m + 1]
        b = Y[:, k - 1::-1][:, :m] if k - 1 >= 0 else Y[:, :0]
        s = _np_fsum_last(_np_fmul(a, b, p, e, logt, expt), p, e)
        Y[:, k] = _np_fmul(neg_inv0, s, p, e, logt, expt)
    return Y


def _np_batched_mul(X, Y, n, p, e, logt, expt):
    P = X.shape[0]
    out = np.zeros((P, n), dtype=np.int64)
    for i in range(min(n, X.shape[1])):
        top = min(n - i, Y.shape[1])
        if top <= 0:
            continue
        out[:, i:i + top] = _np_fadd(
            out[:, i:i + top], _np_fmul(X[:, i:i + 1], Y[:, :top], p, e, logt, expt), p, e
        )
    return out


def _np_point_shape(lam, nabs_rel, cap):
    """Leading index (window offset) and relative precision of each row."""
    nz = lam != 0
    has = nz.any(axis=1)
    lead = np.where(has, np.argmax(nz, axis=1), lam.shape[1])
    rel = np.minimum(nabs_rel - lead, cap)
    return lead, rel, has


def lattice_power_sums_numpy(B, off, use_offset, k, qpow, cap, p, e, logt, expt, block=2048):
    """See :func:`lattice_power_sums`; numpy reference implementation."""
    d, L = B.shape
    q = p**e
    total = q**d
    lo, hi, bad = None, None, False
    # pass 1: window
    for start in range(0, total, block):
        cnt = min(block, total - start)
        lam = _np_combine(_np_digits(start, cnt, d, q), B, p, e, logt, expt)
        if use_offset:
            lam = _np_fadd(lam, off[None, :], p, e)
        elif start == 0:
            lam = lam[1:]
        lead, rel, has = _np_point_shape(lam, L, cap)
        if not has.all():
            bad = True
            break
        relk = np.minimum(rel * (q**qpow), cap) if qpow >= 0 else rel
        a = (-k * lead).min()
        b = (-k * lead + relk).min()
        lo = a if lo is None else min(lo, a)
        hi = b if hi is None else min(hi, b)
    if bad:
        return np.int64(0), np.int64(0), np.zeros((d + 1, 0), np.int64), True
    W = int(hi - lo)
    acc = np.zeros((d + 1, max(W, 0)), dtype=np.int64)
    if W <= 0:
        return np.int64(lo), np.int64(hi), acc, False
    for start in range(0, total, block):
        cnt = min(block, total - start)
        dig = _np_digits(start, cnt, d, q)
        lam = _np_combine(dig, B, p, e, logt, expt)
        if use_offset:
            lam = _np_fadd(lam, off[None, :], p, e)
        elif start == 0:
            lam, dig = lam[1:], dig[1:]
        lead, rel, _ = _np_point_shape(lam, L, cap)
        # shift rows so the leading coefficient sits at column 0
        cols = lead[:, None] + np.arange(L)[None, :]
        U = np.take_along_axis(lam, np.minimum(cols, L - 1), axis=1)
        U = np.where(cols < L, U, 0)
        rmax = int(rel.max())
        Y = _np_batched_inverse(U[:, :rmax], rmax, p, e, logt, expt)
        Y = np.where(np.arange(rmax)[None, :] < rel[:, None], Y, 0)
        vstart = -k * lead  # exponent of column 0 of the k-th power
        if qpow >= 0:
            step = q**qpow
            ncol = (W + step - 1) // step
            Yk_cols = np.arange(ncol) * step
            Ypart = Y[:, :ncol] if Y.shape[1] >= ncol else np.pad(Y, ((0, 0), (0, ncol - Y.shape[1])))
            pos = (vstart - lo)[:, None] + Yk_cols[None, :]
            vals = Ypart
        else:
            Yk = _np_power_rows(Y, k, rmax, p, e, logt, expt)
            pos = (vstart - lo)[:, None] + np.arange(rmax)[None, :]
            vals = Yk
        keep = (pos < W) & (pos >= 0) & (vals != 0)
        rows = np.broadcast_to(np.arange(len(lead))[:, None], pos.shape)[keep]
        pos_k, vals_k = pos[keep], vals[keep]
        acc[d] = _np_fadd(acc[d], _np_scatter(pos_k, vals_k, W, p, e), p, e)
        for s in range(d):
            ws = dig[rows, s]
            wv = _np_fmul(ws, vals_k, p, e, logt, expt)
            acc[s] = _np_fadd(acc[s], _np_scatter(pos_k, wv, W, p, e), p, e)
    return np.int64(lo), np.int64(hi), acc, False


def _np_power_rows(Y, k, n, p, e, logt, expt):
    out = np.zeros_like(Y)
    out[:, 0] = 1
    base = Y
    first = True
    while k:
        if k & 1:
            out = base.copy() if first else _np_batched_mul(out, base, n, p, e, logt, expt)
            first = False
        k >>= 1
        if k:
            base = _np_batched_mul(base, base, n, p, e, logt, expt)
    return out


def _np_scatter(pos, vals, W, p, e):
    out = np.zeros(W, dtype=np.int64)
    if len(pos) == 0:
        return out
    if e == 1:
        return np.bincount(pos, weights=vals, minlength=W)[:W].astype(np.int64) % p
    m = 1
    for _ in range(e):
        plane = (vals // m) % p
        out += (np.bincount(pos, weights=plane, minlength=W)[:W].astype(np.int64) % p) * m
        m *= p
    return out


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    _jit = nb.njit(cache=True, nogil=True)

    @_jit
    def _fadd(a, b, p, e):
        if e == 1:
            s = a + b
            return s - p if s >= p else s
        if p == 2:
            return a ^ b
        r = 0
        m = 1
        for _ in range(e):
            r += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return r

    @_jit
    def _fneg(a, p, e):
        if e == 1:
            return 0 if a == 0 else p - a
        if p == 2:
            return a
        r = 0
        m = 1
        for _ in range(e):
            da = a % p
            r += (0 if da == 0 else p - da) * m
            a //= p
            m *= p
        return r

    @_jit
    def _fmul(a, b, p, e, logt, expt):
        if a == 0 or b == 0:
            return 0
        if e == 1:
            return a * b % p
        return expt[logt[a] + logt[b]]

    @_jit
    def _finv(a, p, e, logt, expt):
        q = p**e
        return expt[(q - 1 - logt[a]) % (q - 1)]

    @_jit
    def mul_trunc_numba(a, b, n, p, e, logt, expt):
        out = np.zeros(n, dtype=np.int64)
        na = min(len(a), n)
        if e == 1:
            # accumulate in int64 and reduce at the end (p^2 * n fits)
            for i in range(na):
                ai = a[i]
                if ai == 0:
                    continue
                nb_ = min(len(b), n - i)
                for j in range(nb_):
                    out[i + j] += ai * b[j]
            for i in range(n):
                out[i] %= p
            return out
        for i in range(na):
            ai = a[i]
            if ai == 0:
                continue
            nb_ = min(len(b), n - i)
            for j in range(nb_):
                if b[j] != 0:
                    out[i + j] = _fadd(out[i + j], _fmul(ai, b[j], p, e, logt, expt), p, e)
        return out

    @_jit
    def inv_trunc_numba(a, n, p, e, logt, expt):
        y = np.zeros(n, dtype=np.int64)
        if n == 0:
            return y
        y0 = _finv(a[0], p, e, logt, expt)
        ny0 = _fneg(y0, p, e)
        y[0] = y0
        la = len(a)
        for k in range(1, n):
            m = min(k, la - 1)
            if e == 1:
                s = 0
                for i in range(1, m + 1):
                    s += a[i] * y[k - i]
                s %= p
            else:
                s = 0
                for i in range(1, m + 1):
                    if a[i] != 0 and y[k - i] != 0:
                        s = _fadd(s, _fmul(a[i], y[k - i], p, e, logt, expt), p, e)
            y[k] = _fmul(ny0, s, p, e, logt, expt)
        return y

    @_jit
    def _nb_axpy(lam, c, row, p, e, logt, expt):
        # lam += c * row
        if c == 0:
            return
        for i in range(len(lam)):
            if row[i] != 0:
                lam[i] = _fadd(lam[i], _fmul(c, row[i], p, e, logt, expt), p, e)

    @_jit
    def _nb_lead(lam):
        for i in range(len(lam)):
            if lam[i] != 0:
                return i
        return len(lam)

    @_jit
    def _nb_power(y, k, n, p, e, logt, expt):
        out = np.zeros(n, dtype=np.int64)
        out[0] = 1
        base = y.copy()
        while k:
            if k & 1:
                out = mul_trunc_numba(out, base, n, p, e, logt, expt)
            k >>= 1
            if k:
                base = mul_trunc_numba(base, base, n, p, e, logt, expt)
        return out

    @_jit
    def _nb_pass(B, off, use_offset, k, qpow, cap, p, e, logt, expt, lo, W, acc, mode):
        # mode 0: compute window (returns lo, hi, bad); mode 1: accumulate
        d, L = B.shape
        q = p**e
        total = q**d
        step_mul = q**qpow if qpow >= 0 else 1
        lam = np.zeros(L, dtype=np.int64)
        dig = np.zeros(d, dtype=np.int64)
        # difference codes for digit transitions x -> x+1 (as integer codes) and reset
        if use_offset:
            for i in range(L):
                lam[i] = off[i]
        best_lo = 1 << 60
        best_hi = 1 << 60
        bad = False
        for P in range(total):
            if P > 0:
                s = 0
                while dig[s] == q - 1:
                    # reset digit s: lam -= (q-1) B[s]
                    _nb_axpy(lam, _fneg(q - 1, p, e), B[s], p, e, logt, expt)
                    dig[s] = 0
                    s += 1
                old = dig[s]
                dig[s] = old + 1
                c = _fadd(old + 1, _fneg(old, p, e), p, e)
                _nb_axpy(lam, c, B[s], p, e, logt, expt)
            elif not use_offset:
                continue
            lead = _nb_lead(lam)
            if lead >= L:
                bad = True
                break
            rel = min(L - lead, cap)
            relk = min(rel * step_mul, cap) if qpow >= 0 else rel
            vstart = -k * lead
            if mode == 0:
                if vstart < best_lo:
                    best_lo = vstart
                if vstart + relk < best_hi:
                    best_hi = vstart + relk
                continue
            y = inv_trunc_numba(lam[lead:lead + rel], rel, p, e, logt, expt)
            base = vstart - lo
            if qpow >= 0:
                for i in range(rel):
                    pos = base + i * step_mul
                    if pos >= W:
                        break
                    v = y[i]
                    if v == 0 or pos < 0:
                        continue
                    acc[d, pos] = _fadd(acc[d, pos], v, p, e)
                    for s2 in range(d):
                        if dig[s2] != 0:
                            acc[s2, pos] = _fadd(acc[s2, pos], _fmul(dig[s2], v, p, e, logt, expt), p, e)
            else:
                yk = _nb_power(y, k, rel, p, e, logt, expt)
                for i in range(rel):
                    pos = base + i
                    if pos >= W:
                        break
                    v = yk[i]
                    if v == 0 or pos < 0:
                        continue
                    acc[d, pos] = _fadd(acc[d, pos], v, p, e)
                    for s2 in range(d):
                        if dig[s2] != 0:
                            acc[s2, pos] = _fadd(acc[s2, pos], _fmul(dig[s2], v, p, e, logt, expt), p, e)
        return best_lo, best_hi, bad

    def lattice_power_sums_numba(B, off, use_offset, k, qpow, cap, p, e, logt, expt):
        d = B.shape[0]
        dummy = np.zeros((d + 1, 0), dtype=np.int64)
        lo, hi, bad = _nb_pass(B, off, use_offset, k, qpow, cap, p, e, logt, expt, 0, 0, dummy, 0)
        if bad:
            return np.int64(0), np.int64(0), dummy, True
        W = int(hi - lo)
        acc = np.zeros((d + 1, max(W, 0)), dtype=np.int64)
        if W > 0:
            _nb_pass(B, off, use_offset, k, qpow, cap, p, e, logt, expt, lo, W, acc, 1)
        return np.int64(lo), np.int64(hi), acc, False

else:  # pragma: no cover
    mul_trunc_numba = inv_trunc_numba = lattice_power_sums_numba = None


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_IMPLS = {
    "numpy": (mul_trunc_numpy, inv_trunc_numpy, lattice_power_sums_numpy),
}
if HAVE_NUMBA:
    _IMPLS["numba"] = (mul_trunc_numba, inv_trunc_numba, lattice_power_sums_numba)

_backend = "numba" if HAVE_NUMBA and not _env_disables_numba() else "numpy"


def backend() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return _backend


def available_backends() -> list[str]:
    return sorted(_IMPLS)


@contextlib.contextmanager
def use_backend(name: str):
    """Temporarily switch backends (benchmarks and cross-checks)."""
    global _backend
    if name not in _IMPLS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    old = _backend
    _backend = name
    try:
        yield
    finally:
        _backend = old


def mul_trunc(a, b, n, fq):
    """First n coefficients of the power-series product a*b."""
    return _IMPLS[_backend][0](a, b, int(n), fq.p, fq.e, fq.logt, fq.expt)


def inv_trunc(a, n, fq):
    """First n coefficients of 1/a; requires a[0] != 0."""
    if len(a) < n:
        a = np.concatenate([a, np.zeros(n - len(a), dtype=np.int64)])
    return _IMPLS[_backend][1](a[:n].copy(), int(n), fq.p, fq.e, fq.logt, fq.expt)


def lattice_power_sums(B, off, k, qpow, cap, fq, use_offset):
    """Brute-force Σ_x weight(x)·(off + Σ_s x_s B[s])^{-k} over x ∈ F_q^d.

    ``B`` is a (d, L) array of basis coefficients on the common absolute
    window ``[v0, v0+L)``; ``off`` lies on the same window.  When
    ``use_offset`` is false the zero vector is skipped.  ``qpow = j ≥ 0``
    signals k = q^j (powering by Frobenius spreading), otherwise ``-1``.

    Returns ``(lo, hi, acc, hit)``: the sum window in units where a point of
    leading window index ν contributes at exponent −k·ν (callers shift by
    −k·v0), acc[d] the unweighted sum, acc[s] the sum weighted by the s-th
    digit, and ``hit`` true if some point lies in the kernel of the window.
    """
    B = np.ascontiguousarray(B, dtype=np.int64)
    off = np.ascontiguousarray(off, dtype=np.int64)
    return _IMPLS[_backend][2](B, off, bool(use_offset), int(k), int(qpow), int(cap),
                               fq.p, fq.e, fq.logt, fq.expt)

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from drinfeld_hecke import _kernels as K
from drinfeld_hecke.fq import fq_init
from drinfeld_hecke.series import RField

FQS = [fq_init(2, 1), fq_init(3, 1), fq_init(2, 2), fq_init(3, 2), fq_init(5, 1)]


def naive_mul(a, b, n, fq):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[: n - i]):
            out[i + j] = fq.add(out[i + j], fq.mul(int(x), int(y)))
    return np.array(out)


@pytest.mark.parametrize("fq", FQS, ids=lambda f: f"q{f.q}")
@given(data=st.data())
def test_mul_matches_schoolbook(fq, data):
    n = data.draw(st.integers(1, 30))
    a = np.array(data.draw(st.lists(st.integers(0, fq.q - 1), min_size=n, max_size=n)))
    b = np.array(data.draw(st.lists(st.integers(0, fq.q - 1), min_size=n, max_size=n)))
    ref = naive_mul(a, b, n, fq)
    for name in K.available_backends():
        with K.use_backend(name):
            assert np.array_equal(np.asarray(K.mul_trunc(a, b, n, fq)), ref), name


@pytest.mark.parametrize("fq", FQS, ids=lambda f: f"q{f.q}")
def test_inverse_roundtrip(fq):
    rng = np.random.default_rng(1)
    a = rng.integers(0, fq.q, size=40)
    a[0] = 1 + rng.integers(0, fq.q - 1)
    for name in K.available_backends():
        with K.use_backend(name):
            prod = K.mul_trunc(a, K.inv_trunc(a, 40, fq), 40, fq)
            assert prod[0] == 1 and not np.any(prod[1:])


@pytest.mark.parametrize("fq", FQS[:3], ids=lambda f: f"q{f.q}")
def test_lattice_power_sums_against_direct(fq):
    from drinfeld_hecke.forms import lattice_sum_bruteforce

    F = RField(fq, 1 if fq.q == 2 else fq.q - 1, 24)
    rng = np.random.default_rng(7)
    vecs = [F.random(rng, -3 * i, 20, exact=True) for i in range(3)]
    off = F.random(rng, 2, 20, exact=True)
    for name in K.available_backends():
        with K.use_backend(name):
            for k, use in [(1, True), (fq.q, False), (fq.q + 1, False)]:
                tot, wt = lattice_sum_bruteforce(vecs, k, off if use else None)
                # reference through plain series arithmetic
                ref_t = F.zero()
                ref_w = [F.zero() for _ in vecs]
                import itertools
                for digits in itertools.product(range(fq.q), repeat=3):
                    if not use and not any(digits):
                        continue
                    y = off if use else F.zero()
                    for c, v in zip(digits, vecs):
                        if c:
                            y = y + v.scale(c)
                    t = y.inv() ** k
                    ref_t = ref_t + t
                    for s, c in enumerate(digits):
                        if c:
                            ref_w[s] = ref_w[s] + t.scale(c)
                assert tot.agrees(ref_t)
                for a, b in zip(wt, ref_w):
                    assert a.agrees(b)


def test_backend_switching():
    names = K.available_backends()
    assert "numpy" in names
    before = K.backend()
    with K.use_backend("numpy"):
        assert K.backend() == "numpy"
    assert K.backend() == before
    with pytest.raises(ValueError):
        with K.use_backend("cuda"):
            pass


def test_env_flag_selects_numpy():
    env = dict(os.environ, DRINFELD_HECKE_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", "from drinfeld_hecke import _kernels as K; print(K.backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_benchmark_script_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    out = subprocess.run([sys.executable, os.path.join(root, "benchmarks", "bench_kernels.py"), "--repeat", "1"],
                         capture_output=True, text=True, check=True)
    rows = [l for l in out.stdout.splitlines() if l.rstrip().endswith(("True", "False"))]
    assert rows and all(l.rstrip().endswith("True") for l in rows)

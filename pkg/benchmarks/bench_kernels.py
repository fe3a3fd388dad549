"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each kernel is warmed up once (JIT compile) and then timed on identical
inputs; outputs are compared so a speedup never hides a wrong answer.
"""
import argparse
import time

import numpy as np

from drinfeld_hecke import _kernels as K
from drinfeld_hecke.fq import fq_init


def _time(fn, repeat):
    fn()  # warm-up / compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(fq, rng):
    n = 400
    a = rng.integers(0, fq.q, size=n)
    b = rng.integers(0, fq.q, size=n)
    a[0] = 1
    d = 8 if fq.q == 2 else 5
    B = rng.integers(0, fq.q, size=(d, 64))
    for i in range(d):
        B[i, : 2 * i] = 0
        B[i, 2 * i] = 1
    off = rng.integers(0, fq.q, size=64)
    return {
        f"mul_trunc n={n}": lambda: K.mul_trunc(a, b, n, fq),
        f"inv_trunc n={n}": lambda: K.inv_trunc(a, n, fq),
        f"lattice_power_sums {fq.q}^{d} pts k=q+1": lambda: K.lattice_power_sums(
            B, off, fq.q + 1, -1, 48, fq, True),
    }


def same(x, y):
    if isinstance(x, tuple):
        return all(same(u, v) for u, v in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = K.available_backends()
    if "numba" not in names:
        print("numba unavailable (or DRINFELD_HECKE_NO_NUMBA=1); only numpy timings shown")
    print(f"{'q':>3} {'kernel':38} " + " ".join(f"{n:>10}" for n in names) + "   speedup  agree")
    for p, e in [(2, 1), (3, 1), (2, 2)]:
        fq = fq_init(p, e)
        rng = np.random.default_rng(0)
        for label, fn in cases(fq, rng).items():
            times, outs = {}, {}
            for name in names:
                with K.use_backend(name):
                    times[name], outs[name] = _time(fn, args.repeat)
            sp = times["numpy"] / times["numba"] if "numba" in times else float("nan")
            ok = all(same(outs[names[0]], o) for o in outs.values())
            cols = " ".join(f"{times[n] * 1e3:8.2f}ms" for n in names)
            print(f"{fq.q:>3} {label:38} {cols}   {sp:6.1f}x  {ok}")


if __name__ == "__main__":
    main()

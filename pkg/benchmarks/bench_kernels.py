"""Compare the compiled and pure-Python Jacobi kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the raw eigensolver and singular-value kernels on random 4x4 inputs,
then the full pipelines that sit on them (numeric concurrence of a Gibbs
state and one threshold-temperature solve on the numeric path).
"""
import argparse
import timeit

import numpy as np

from xyentangle import kernels
from xyentangle.entangle import concurrence_numeric
from xyentangle.explore import threshold_temperature
from xyentangle.spinmodel import ModelParams
from xyentangle.thermal import gibbs_state


def use(name):
    mod = kernels.BACKENDS[name]
    kernels.jacobi_eigh = mod.jacobi_eigh
    kernels.jacobi_svals = mod.jacobi_svals
    return mod


def per_call(fn, repeat):
    n = max(1, repeat)
    return min(timeit.repeat(fn, number=n, repeat=3)) / n


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=2000)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    herm = a + a.conj().T
    p = ModelParams(J=1, K=0.4, gamma=0.3, gamma_prime=-0.2, Bx=1.1, By=0.3, Bz=0.7, T=0.6)

    cases = [
        ("jacobi_eigh", lambda mod: (lambda: mod.jacobi_eigh(herm)), args.repeat),
        ("jacobi_svals", lambda mod: (lambda: mod.jacobi_svals(a)), args.repeat),
        ("concurrence (numeric)", lambda mod: (lambda: concurrence_numeric(gibbs_state(p))),
         args.repeat // 4),
        ("threshold solve (numeric)", lambda mod: (lambda: threshold_temperature(p)),
         max(1, args.repeat // 400)),
    ]
    names = sorted(kernels.BACKENDS)
    print(f"{'kernel':<28}" + "".join(f"{n:>14}" for n in names)
          + ("   speedup" if len(names) == 2 else ""))
    for label, make, reps in cases:
        times = {}
        for n in names:
            times[n] = per_call(make(use(n)), reps)
        row = f"{label:<28}" + "".join(f"{times[n] * 1e6:>11.1f} us" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)
    if "compiled" not in names:
        print("compiled extension not built; only the Python kernels were timed")


if __name__ == "__main__":
    main()

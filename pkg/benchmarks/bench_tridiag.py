"""Benchmark the Sturm-bisection kernel: numba @njit vs pure-numpy fallback.

Usage:
    python3 benchmarks/bench_tridiag.py [--sizes 100,500,2000] [--repeat 5]

The numpy path is the one selected by SDIRAC_NO_NUMBA=1; both paths return
bit-identical eigenvalues, so this is purely a speed comparison.  The last
rows benchmark the actual operator blocks over a k sweep.
"""

import argparse
import time

import numpy as np

from sdirac.operators import assemble_closed_form, spectrum
from sdirac.tridiag import _HAVE_NUMBA, eigvalsh_tridiagonal


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100,500,2000")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = ["numpy"] + (["numba"] if _HAVE_NUMBA else [])
    if _HAVE_NUMBA:
        # trigger JIT compilation outside the timed region
        eigvalsh_tridiagonal(np.zeros(4), np.ones(3), backend="numba")

    rng = np.random.default_rng(2024)
    print(f'{"case":>22} ' + " ".join(f"{b:>12}" for b in backends) + f' {"speedup":>9}')
    for m in sizes:
        d = rng.normal(size=m) * 10
        b = rng.normal(size=m - 1) * 5
        times = {}
        results = {}
        for backend in backends:
            times[backend] = time_call(
                lambda bk=backend: eigvalsh_tridiagonal(d, b, backend=bk), args.repeat
            )
            results[backend] = eigvalsh_tridiagonal(d, b, backend=backend)
        if len(backends) == 2:
            assert np.array_equal(results["numpy"], results["numba"]), "backends disagree"
            ratio = f"{times['numpy'] / times['numba']:>8.1f}x"
        else:
            ratio = "-"
        print(
            f"{f'random m={m}':>22} "
            + " ".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
            + f" {ratio:>9}"
        )

    for k_max in (99, 399):
        times = {}
        for backend in backends:
            def sweep(bk=backend):
                for k in range(1, k_max + 1, 2):
                    d_block, _ = assemble_closed_form(k)
                    spectrum(d_block, backend=bk)

            times[backend] = time_call(sweep, max(2, args.repeat // 2))
        ratio = (
            f"{times['numpy'] / times['numba']:>8.1f}x" if len(backends) == 2 else "-"
        )
        print(
            f"{f'operator sweep k<={k_max}':>22} "
            + " ".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
            + f" {ratio:>9}"
        )


if __name__ == "__main__":
    main()

"""Compare the numba and numpy scan kernels on the flagship verification.

Times verify_primary_part over both primary parts (83 and 103), after an
untimed warmup pass so numba JIT compilation never lands in a measurement.

    python3 benchmarks/bench_kernel.py [--repeats N] [--threads T]
"""

import argparse
import statistics
import time

from cgobstruct import build_family, build_sigma_tables, primary_parts, verify_primary_part
from cgobstruct.kernels import HAVE_NUMBA


def bench(kernel: str, repeats: int, threads: int) -> None:
    K = build_family(83, 103, 17, 11, 13)
    parts = primary_parts(K)
    tables = {part.p: build_sigma_tables(K, part.p) for part in parts}

    def run():
        t0 = time.perf_counter()
        total = 0
        for part in parts:
            res = verify_primary_part(
                part, K, 1, sigma_minus_one=0, threads=threads,
                kernel=kernel, tables=tables[part.p],
            )
            assert res.verified
            total += res.points
        return time.perf_counter() - t0, total

    run()  # warmup: JIT compile, fault in caches
    times = []
    points = 0
    for _ in range(repeats):
        dt, points = run()
        times.append(dt)
    best = min(times)
    mean = statistics.mean(times)
    print(
        f"{kernel:>6}  threads={threads}  best {best * 1e3:8.2f} ms   "
        f"mean {mean * 1e3:8.2f} ms   {points / best / 1e6:6.2f} Mpoints/s"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    bench("numpy", args.repeats, args.threads)
    if HAVE_NUMBA:
        bench("numba", args.repeats, args.threads)
    else:
        print(" numba  not installed (pip install 'cgobstruct[fast]')")


if __name__ == "__main__":
    main()

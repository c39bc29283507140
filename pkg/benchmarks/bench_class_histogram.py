"""Time the class-histogram kernel under the numba and numpy backends.

    python3 benchmarks/bench_class_histogram.py [--repeat 5]
"""
import argparse
import time

from hookspherical._kernels import NUMBA_AVAILABLE, class_histogram
from hookspherical.permgroup import BlockStructure, support_cycle

CASES = [(2, 3, 4), (3, 3, 3), (1, 2, 3, 4), (2, 2, 2, 2, 2), (4, 5), (3, 3, 4), (5, 5), (3, 4, 5)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if NUMBA_AVAILABLE else [])
    print(f"{'blocks':<16}{'#G_n':>10}" + "".join(f"{b + ' [s]':>14}" for b in backends) + f"{'speedup':>10}")
    for sizes in CASES:
        blocks = BlockStructure(sizes)
        g = support_cycle(blocks, range(1, blocks.p + 1))
        results = {b: class_histogram(g, blocks, backend=b) for b in backends}  # warm-up and JIT
        if len({tuple(sorted(r.items())) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {sizes}")
        timing = {b: best_of(lambda b=b: class_histogram(g, blocks, backend=b), args.repeat) for b in backends}
        speedup = timing["numpy"] / timing["numba"] if "numba" in timing else float("nan")
        print(f"{','.join(map(str, sizes)):<16}{blocks.order:>10}"
              + "".join(f"{timing[b]:>14.5f}" for b in backends) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()

"""Compare the compiled and numpy divergence kernels.

    python benchmarks/bench_backends.py --nodes 1133 --edges 10902 --repeat 5
"""

import argparse
import statistics
import time

import numpy as np

from egosim import all_signatures, kernels
from egosim.datasets import synthetic_graph


def bench(sigs, backend, threads, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = kernels.symmetric_divergences(sigs, threads=threads, backend=backend)
        times.append(time.perf_counter() - t0)
    return out, times


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=1133)
    ap.add_argument("--edges", type=int, default=10902)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    g = synthetic_graph(args.nodes, args.edges, seed=args.seed)
    sigs = all_signatures(g)
    pairs = len(sigs) * (len(sigs) - 1) // 2
    print(f"graph: {len(g)} nodes, {g.edge_count} edges, {pairs} pairs, "
          f"max support {max(s.support for s in sigs)}")

    results = {}
    for backend in kernels.available_backends():
        out, times = bench(sigs, backend, args.threads, args.repeat)
        results[backend] = out
        best, med = min(times), statistics.median(times)
        print(f"{backend:>8}: best {best * 1e3:8.1f} ms  median {med * 1e3:8.1f} ms  "
              f"({pairs / best / 1e6:.1f} M pairs/s)")

    if len(results) == 2:
        same = np.array_equal(results["cython"], results["python"])
        print(f"bit-identical: {same}")


if __name__ == "__main__":
    main()

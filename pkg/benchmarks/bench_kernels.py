"""Time the numba kernels against their interpreted fallbacks.

    python benchmarks/bench_kernels.py [--nodes 400] [--test-size 10000] [--replicates 2000]

Each kernel runs on identical inputs through both paths; outputs are checked
for equality before timings are printed.
"""

import argparse
import time

import numpy as np

from ked import _accel
from ked.community import GAIN_THRESHOLD, WeightedGraph, _move_nodes
from ked.evaluate import CHUNK, _count_hits, _count_hits_numpy


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def move_nodes_case(n, seed):
    r = np.random.default_rng(seed)
    W = np.triu(r.random((n, n)) * (r.random((n, n)) < 0.05), 1)
    g = WeightedGraph.from_dense(W + W.T)
    order = r.permutation(n).astype(np.int64)
    two_m = g.total_weight
    degree = g.degree

    def run(kernel):
        labels = np.arange(n, dtype=np.int64)
        kernel(g.indptr, g.indices, g.weights, degree, order, labels, degree.copy(), 1.0, two_m,
               GAIN_THRESHOLD * two_m / 2, 1000)
        return labels

    return run


def count_hits_case(n, replicates, seed):
    r = np.random.default_rng(seed)
    correct = (r.random(n) < 0.9).astype(np.int64)
    idx = r.integers(0, n, size=(min(CHUNK, replicates), n))
    chunks = -(-replicates // CHUNK)

    def run(kernel):
        out = np.empty(len(idx), dtype=np.int64)
        for _ in range(chunks):
            kernel(correct, idx, out)
        return out

    return run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, default=400)
    ap.add_argument("--test-size", type=int, default=10000)
    ap.add_argument("--replicates", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is unavailable or disabled (KED_DISABLE_NUMBA); nothing to compare")

    cases = [
        (f"louvain local moves, {args.nodes} nodes", move_nodes_case(args.nodes, 0),
         _move_nodes, _move_nodes.py_func, None),
        (f"bootstrap counting, n={args.test_size}, {args.replicates} replicates",
         count_hits_case(args.test_size, args.replicates, 1), _count_hits, _count_hits.py_func, _count_hits_numpy),
    ]
    print(f"{'kernel':<52} {'numba':>10} {'python':>10} {'numpy':>10} {'speedup':>8}")
    for name, run, fast, slow, vectorized in cases:
        run(fast)  # compile outside the timing
        np.testing.assert_array_equal(run(fast), run(slow))
        t_fast = best_of(lambda: run(fast), args.repeat)
        t_slow = best_of(lambda: run(slow), 1)
        t_vec = "-"
        if vectorized is not None:
            np.testing.assert_array_equal(run(fast), run(vectorized))
            t_vec = f"{best_of(lambda: run(vectorized), args.repeat):.4f}s"
        print(f"{name:<52} {t_fast:>9.4f}s {t_slow:>9.4f}s {t_vec:>10} {t_slow / t_fast:>7.0f}x")


if __name__ == "__main__":
    main()

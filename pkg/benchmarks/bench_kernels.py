"""Time the compiled kernels against the pure fallback.

    python benchmarks/bench_kernels.py [--sizes 300,1000,2426] [--repeat 3]

Graphs are grown by random attachment with three links per arrival, which
roughly matches the edge density the model produces.
"""

import argparse
import time

import numpy as np

from sociogrow import kernels
from sociogrow.graph import Graph


def random_graph(n: int, links: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    g = Graph(n)
    for t in range(1, n):
        for j in rng.integers(0, t, size=min(links, t)):
            g.add_edge(t, int(j))
    return g


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="300,1000,2426")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the fallback will be timed")
    print(f"{'kernel':<18}{'n':>6}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for n in (int(s) for s in args.sizes.split(",")):
        g = random_graph(n, 3, seed=n)
        indptr, indices = g.csr()
        nodes = np.arange(n, dtype=np.int64)
        rng = np.random.default_rng(0)
        S = rng.random((n, n))
        S /= S.sum(axis=1, keepdims=True)
        out = np.empty_like(S)
        cases = {
            "knowledge_step": lambda k: k.knowledge_step(S, indptr, indices, 0.5, 1.1, out),
            "path_length_stats": lambda k: k.path_length_stats(indptr, indices, nodes),
            "triangle_counts": lambda k: k.triangle_counts(indptr, indices),
        }
        for name, call in cases.items():
            timings = {b: best_of(lambda: call(mod), args.repeat) for b, mod in backends.items()}
            line = f"{name:<18}{n:>6}" + "".join(f"{timings[b] * 1e3:>10.1f}ms" for b in backends)
            if "cython" in timings:
                line += f"{timings['python'] / timings['cython']:>9.1f}x"
            print(line, flush=True)


if __name__ == "__main__":
    main()

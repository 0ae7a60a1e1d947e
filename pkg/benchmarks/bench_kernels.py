"""Compare the compiled and pure-Python kernels on the hot paths.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from zipfaudit._kernels import _pykernels
from zipfaudit.netmodels import gen_small_world

try:
    from zipfaudit._kernels import _ckernels
except ImportError:
    _ckernels = None


def cases():
    g = gen_small_world(2000, 6, 0.1, seed=0)
    indptr, indices = g.csr
    sources = np.arange(g.node_count, dtype=np.int64)
    uniforms = np.random.default_rng(0).random(2 * 3 * 100_000 + 64)
    return {
        "all-pairs BFS, small world n=2000": lambda k: k.bfs_distance_totals(indptr, indices, sources),
        "preferential attachment n=1e5 m=3": lambda k: k.ba_attach(100_000, 3, uniforms),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    else:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'case':<40} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for name, fn in cases().items():
        best = {b: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for b, k in backends.items()}
        speedup = f"{best['python'] / best['cython']:8.1f}x" if "cython" in best else ""
        print(f"{name:<40} " + " ".join(f"{t:9.3f}s" for t in best.values()) + f"  {speedup}")


if __name__ == "__main__":
    main()

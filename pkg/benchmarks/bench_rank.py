"""Compare the GF(p) rank kernels: compiled Cython, numpy fallback, sparse fallback.

Usage: python3 benchmarks/bench_rank.py [--sizes 50 100 200 400] [--prime 2] [--repeat 3]
"""
import argparse
import time

import numpy as np

from assdec import _kernels


def random_matrix(rng, n, p, density):
    a = rng.integers(0, p, size=(n, n), dtype=np.int64)
    a[rng.random((n, n)) > density] = 0
    return a


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    parser.add_argument("--prime", type=int, default=2)
    parser.add_argument("--density", type=float, default=0.1)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    kernels = {"numpy": _kernels.py_rank_mod_p}
    if _kernels.cy_rank_mod_p is not None:
        kernels["cython"] = _kernels.cy_rank_mod_p
    else:
        print("compiled kernel not built; timing the fallbacks only")

    print(f"p = {args.prime}, density = {args.density}, best of {args.repeat}")
    header = f"{'n':>6} {'rank':>6}" + "".join(f"{name:>12}" for name in [*kernels, "sparse"]) + f"{'speedup':>10}"
    print(header)
    for n in args.sizes:
        a = random_matrix(rng, n, args.prime, args.density)
        timings, ranks = {}, set()
        for name, fn in kernels.items():
            timings[name], r = best_of(lambda: fn(a, args.prime), args.repeat)
            ranks.add(r)
        rows = [{j: int(v) for j, v in enumerate(row) if v} for row in a]
        timings["sparse"], r = best_of(lambda: _kernels.sparse_rank_mod_p(rows, args.prime), args.repeat)
        ranks.add(r)
        if len(ranks) != 1:
            raise SystemExit(f"kernels disagree at n={n}: {sorted(ranks)}")
        speedup = timings["numpy"] / timings["cython"] if "cython" in timings else float("nan")
        cells = "".join(f"{timings[k] * 1e3:>10.2f}ms" for k in [*kernels, "sparse"])
        print(f"{n:>6} {ranks.pop():>6}{cells}{speedup:>9.1f}x")


if __name__ == "__main__":
    main()

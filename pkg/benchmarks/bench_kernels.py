"""Compare the compiled and pure-Python reduction kernels.

    python benchmarks/bench_kernels.py --q 3 --degree 5 --window 12
"""

import argparse
import random
import time

from hecke_graphs.finite_field import FieldSpec
from hecke_graphs.hecke_graph import graph_phi
from hecke_graphs.kernels import available_backends, reduce_dense


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--window", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=80)
    args = ap.parse_args()

    field = FieldSpec.from_q(args.q)
    backends = available_backends()
    print(f"q={args.q} degree={args.degree} window={args.window} "
          f"({(args.window + 1) * args.q**args.degree} reductions)")
    results = {}
    for b in backends:
        t, g = best_of(lambda: graph_phi(field, args.degree, args.window, threads=1, backend=b),
                       args.repeat)
        results[b] = (t, g)
        print(f"  {b:<7} {t * 1e3:10.2f} ms")
    if len(results) == 2:
        (tp, gp), (tc, gc) = results["python"], results["cython"]
        assert gp == gc, "backends disagree"
        print(f"  speedup {tp / tc:.1f}x (identical graphs)")
    else:
        print("  compiled extension not available; only the Python kernel was timed")

    # long upper-right entries exercise the trick loop far more than graph building
    rng = random.Random(0)
    cases = []
    for _ in range(args.samples):
        n = rng.randint(2, args.max_n)
        cases.append((n, [rng.randrange(args.q) for _ in range(n - 1)]))
    print(f"reduce_dense on {args.samples} random entries, n <= {args.max_n}")
    dense = {}
    for b in backends:
        t, vals = best_of(lambda: [reduce_dense(field, n, c, 1, backend=b) for n, c in cases],
                          args.repeat)
        dense[b] = (t, vals)
        print(f"  {b:<7} {t * 1e3:10.2f} ms")
    if len(dense) == 2:
        (tp, vp), (tc, vc) = dense["python"], dense["cython"]
        assert vp == vc, "backends disagree"
        print(f"  speedup {tp / tc:.1f}x (identical results)")


if __name__ == "__main__":
    main()

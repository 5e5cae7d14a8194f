"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from limpack import kernels
from limpack.domination import gamma_ktuple_exact
from limpack.generators import gen_gnp, gen_random_regular
from limpack.packing import enumerate_oracle, exact_lk

CASES = [
    ("exact_lk  gnp(40,0.15) k=1", lambda b: exact_lk(gen_gnp(40, 0.15, 1), 1, backend=b)),
    ("exact_lk  gnp(34,0.3) k=2", lambda b: exact_lk(gen_gnp(34, 0.3, 2), 2, backend=b)),
    ("exact_lk  reg(24,4)   k=3", lambda b: exact_lk(gen_random_regular(24, 4, 3), 3, backend=b)),
    ("enumerate gnp(18,0.3) k=2", lambda b: enumerate_oracle(gen_gnp(18, 0.3, 4), 2, backend=b)),
    ("gamma     gnp(34,0.2) k=1", lambda b: gamma_ktuple_exact(gen_gnp(34, 0.2, 5), 1, backend=b)),
    ("gamma_x2  reg(28,4)   k=2", lambda b: gamma_ktuple_exact(gen_random_regular(28, 4, 6), 2, backend=b)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = sorted(kernels.BACKENDS)
    print(f"{'case':28s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup  nodes")
    for name, case in CASES:
        row, results = [], []
        for b in backends:
            t, r = best_of(lambda: case(b), args.repeat)
            row.append(t)
            results.append(r)
        nodes = {getattr(r, "nodes_explored") for r in results}
        assert len(nodes) == 1, "backends disagree on node count"
        speed = row[backends.index("python")] / row[0] if len(row) > 1 else 1.0
        print(f"{name:28s} " + " ".join(f"{t:10.4f}" for t in row) + f"   {speed:7.1f}x  {nodes.pop()}")


if __name__ == "__main__":
    main()

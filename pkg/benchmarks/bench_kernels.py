"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--samples 81] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from tripolar import _kernels_py
from tripolar.poles import SQUARES

try:
    from tripolar import _kernels as compiled
except ImportError:
    compiled = None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=81)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=20000)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    n = args.samples
    xq, yq = rng.uniform(0, 3, 3), rng.uniform(0, 3, 3)
    xe, ye = rng.normal(size=(3, n)), rng.normal(size=(3, n))
    table = SQUARES[1].index_table()

    backends = {"numpy": _kernels_py}
    if compiled is not None:
        backends["cython"] = compiled
    else:
        print("compiled extension not built; timing the numpy fallback only")

    cases = {
        "star_product": lambda k: k.star_product(table, xq, xe, yq, ye),
        "canonical_form": lambda k: k.canonical_form(xq, xe),
    }
    print(f"{n} samples, best of {args.repeat} x {args.number} calls")
    for name, call in cases.items():
        timings = {}
        for label, k in backends.items():
            best = min(timeit.repeat(lambda: call(k), number=args.number, repeat=args.repeat))
            timings[label] = best / args.number * 1e6
        line = "  ".join(f"{label} {us:8.2f} us" for label, us in timings.items())
        speedup = ""
        if len(timings) == 2:
            speedup = f"  speedup {timings['numpy'] / timings['cython']:.1f}x"
        print(f"{name:15s} {line}{speedup}")


if __name__ == "__main__":
    main()

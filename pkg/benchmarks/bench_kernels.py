"""Compare the compiled and pure-Python kernels on identical inputs.

Run: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit
from fractions import Fraction

from friezekit import _pykernels

try:
    from friezekit import _ckernels
except ImportError:
    _ckernels = None


def det_inputs(rng, size, count):
    return [[[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(size)] for _ in range(size)]
            for _ in range(count)]


def evolve_input(rng, order, period):
    table = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order)] for _ in range(period)]
    window = [Fraction(0)] * (order - 1) + [Fraction(1)]
    return table, window


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(0)
    cases = []
    for size in (4, 8, 12):
        mats = det_inputs(rng, size, 50)
        cases.append((f"det {size}x{size} x50", "det_bareiss", lambda mod, mats=mats: [mod.det_bareiss(m) for m in mats]))
    for order, steps in ((3, 60), (5, 60)):
        table, window = evolve_input(rng, order, 12)
        cases.append((f"evolve order {order}, {steps} steps", "evolve_linear",
                      lambda mod, t=table, w=window, s=steps: mod.evolve_linear(t, w, s, len(t))))
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'case':32} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for label, _, fn in cases:
        results = [fn(mod) for _, mod in backends]
        if any(r != results[0] for r in results):
            raise SystemExit(f"backends disagree on {label}")
        times = [min(timeit.repeat(lambda mod=mod: fn(mod), number=1, repeat=args.repeat)) for _, mod in backends]
        speed = f"{times[0] / times[1]:8.2f}x" if len(times) > 1 else "      n/a"
        print(f"{label:32} " + " ".join(f"{t * 1e3:9.2f}ms" for t in times) + f"  {speed}")
    if _ckernels is None:
        print("compiled extension not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()

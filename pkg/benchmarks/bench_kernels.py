"""Compare the compiled and numpy kernel backends.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--batch 4096]

Prints one line per (kernel, backend) with the best-of-``repeat`` time
and the speedup of the compiled backend. Results of both backends are
also compared, so a mismatch shows up here before it shows up in tests.
"""

import argparse
import timeit

import numpy as np

from hypercomplex import algebra, clifford
from hypercomplex.kernels import backends


def cases(rng, batch):
    dense = rng.standard_normal(clifford.DIM)
    sparse = np.zeros(clifford.DIM)
    sparse[rng.choice(clifford.DIM, 8, replace=False)] = 1.0
    idx = clifford.BLADE_INDEX.astype(np.int_)
    sgn = clifford.BLADE_SIGN.astype(float)
    stack_a = rng.standard_normal((64, clifford.DIM))
    stack_b = rng.standard_normal((64, clifford.DIM))
    oa = rng.standard_normal((batch, 8))
    ob = rng.standard_normal((batch, 8))
    oidx = algebra.OCT_INDEX.astype(np.int_)
    osgn = algebra.OCT_SIGN.astype(float)
    return {
        "blade_mul dense": ("blade_mul", (dense, dense, idx, sgn)),
        "blade_mul sparse": ("blade_mul", (sparse, sparse, idx, sgn)),
        "blade_mul_batch 64": ("blade_mul_batch", (stack_a, stack_b, idx, sgn)),
        f"structure_mul octonion x{batch}": ("structure_mul", (oa, ob, oidx, osgn)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    ap.add_argument("--batch", type=int, default=4096)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    impls = backends()
    if "cython" not in impls:
        print("compiled extension not built; only the numpy backend is timed")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':34s} {'backend':8s} {'best [us]':>11s} {'speedup':>8s}")
    for label, (fn, inputs) in cases(rng, args.batch).items():
        times, outs = {}, {}
        for name, mod in impls.items():
            f = getattr(mod, fn)
            outs[name] = np.asarray(f(*inputs))
            t = timeit.repeat(lambda: f(*inputs), repeat=args.repeat, number=args.number)
            times[name] = min(t) / args.number * 1e6
        if len(outs) == 2:
            err = np.abs(outs["cython"] - outs["python"]).max()
            assert err < 1e-10, f"{label}: backends disagree by {err}"
        for name, us in times.items():
            speed = times["python"] / us if name == "cython" else 1.0
            print(f"{label:34s} {name:8s} {us:11.1f} {speed:7.1f}x")


if __name__ == "__main__":
    main()

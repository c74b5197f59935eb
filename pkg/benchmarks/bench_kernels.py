"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Reports the best wall time of each backend for Gram-matrix construction and
for one training epoch of a one-hidden-layer net, plus the largest absolute
difference between the two outputs.
"""

import argparse
import timeit

import numpy as np

from anchor_ens import _kernels_py, kernels


def gram_case(impl, family, x1, x2):
    return kernels.gram(family, x1, x2, 1.5, 0.4, impl=impl)


def epoch_case(impl, theta, x, y, perm, h):
    t = theta.copy()
    m, v = np.zeros_like(t), np.zeros_like(t)
    gamma = np.full_like(t, 0.01)
    kernels.train_epoch_1h(t, np.zeros_like(t), gamma, m, v, 0, 1e-3, x, y, perm, 32, x.shape[0], h,
                           kernels.RELU, False, impl=impl)
    return t


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.compiled_impl is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    impls = {"python": _kernels_py, "cython": kernels.compiled_impl}
    rng = np.random.default_rng(0)

    for size in (50, 1000):
        x1, x2 = rng.standard_normal((size, 13)), rng.standard_normal((size, 13))
        for family in ("relu", "erf"):
            out = {k: gram_case(i, family, x1, x2) for k, i in impls.items()}
            times = {k: best(lambda i=i: gram_case(i, family, x1, x2), args.repeat) for k, i in impls.items()}
            diff = np.max(np.abs(out["python"] - out["cython"]))
            print(f"gram {family:4s} {size}x{size}  python {times['python'] * 1e3:8.3f} ms  "
                  f"cython {times['cython'] * 1e3:8.3f} ms  speedup {times['python'] / times['cython']:5.1f}x  "
                  f"max diff {diff:.1e}")

    d, h, n = 13, 50, 455
    theta = rng.standard_normal(d * h + h + h) * 0.3
    x, y = rng.standard_normal((n, d)), rng.standard_normal(n)
    perm = rng.permutation(n).astype(np.int64)
    out = {k: epoch_case(i, theta, x, y, perm, h) for k, i in impls.items()}
    times = {k: best(lambda i=i: epoch_case(i, theta, x, y, perm, h), args.repeat) for k, i in impls.items()}
    diff = np.max(np.abs(out["python"] - out["cython"]))
    print(f"epoch 455 rows, H=50, batch 32  python {times['python'] * 1e3:8.2f} ms  "
          f"cython {times['cython'] * 1e3:8.2f} ms  speedup {times['python'] / times['cython']:5.1f}x  "
          f"max diff {diff:.1e}")


if __name__ == "__main__":
    main()

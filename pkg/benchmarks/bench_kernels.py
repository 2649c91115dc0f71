"""Compare the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported side by side and timed with ``timeit`` (best of N).
The last column is the max abs difference between them: zero everywhere except
``trilinear_backward``, whose scatter-add sums in a different order.
"""
import argparse
import timeit

import numpy as np

from uncattack import _kernels_py as py

try:
    from uncattack import _ckernels as cy
except ImportError:  # pragma: no cover - extension not built
    cy = None


def workloads(rng):
    x = rng.random((64, 16, 14, 14))  # second conv layer of the MNIST net, one batch
    cols = py.im2col(x, 3, 3, 1, 1)
    colors = rng.random((500 * 32 * 32, 3))  # a batch of 32x32 RGB images
    grid = rng.uniform(-0.03, 0.03, (8, 8, 8, 3))
    grad_out = rng.normal(size=colors.shape)
    return {
        "im2col 64x16x14x14 k3": lambda m: m.im2col(x, 3, 3, 1, 1),
        "col2im 64x16x14x14 k3": lambda m: m.col2im(cols, x.shape, 3, 3, 1, 1),
        "trilinear_forward 512k px": lambda m: m.trilinear_forward(colors, grid),
        "trilinear_backward 512k px": lambda m: m.trilinear_backward(colors, grad_out, 8),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if cy is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<30}{'numpy ms':>12}{'cython ms':>12}{'speedup':>10}{'max |diff|':>12}")
    for name, fn in workloads(rng).items():
        diff = float(np.abs(fn(py) - fn(cy)).max())
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat)) * 1e3
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<30}{t_py:>12.2f}{t_cy:>12.2f}{t_py / t_cy:>9.1f}x{diff:>12.1e}")


if __name__ == "__main__":
    main()

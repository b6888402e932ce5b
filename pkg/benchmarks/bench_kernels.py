"""Compare the compiled and numpy dense-layer kernels.

    python3 benchmarks/bench_kernels.py [--repeat 200]

Reports per-call times for layer shapes that occur in the experiments and,
at the end, the time of one full training iteration for interp-final and
extrap-state-rate under each backend (each measured in a fresh subprocess so
the backend is chosen at import).
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from congan import _pykernels

try:
    from congan import _ckernels
except ImportError:
    _ckernels = None

SHAPES = [  # (batch, fan_in, fan_out)
    (1000, 3, 10),
    (1000, 10, 10),
    (1000, 20, 20),
    (1000, 20, 1),
]
ACTS = {"elu": _pykernels.ELU, "sigmoid": _pykernels.SIGMOID}

ITER_SNIPPET = """
import time
from congan.experiments import build_config
from congan.trainer import init_state, train_step
cfg, _ = build_config({exp!r})
st = init_state(cfg)
for _ in range(20):
    train_step(st)
t = time.perf_counter()
for _ in range({n}):
    train_step(st)
print((time.perf_counter() - t) / {n})
"""


def layer_time(mod, n, k, o, act, repeat):
    rng = np.random.default_rng(0)
    x, w, b = rng.normal(size=(n, k)), rng.normal(size=(o, k)), rng.normal(size=o)
    g = rng.normal(size=(n, o))

    def step():
        pre, post = mod.dense_forward(x, w, b, act)
        mod.dense_backward(x, w, pre, post, g, act)

    return min(timeit.repeat(step, number=repeat, repeat=3)) / repeat


def iteration_time(exp, pure, n):
    env = dict(os.environ, CONGAN_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", ITER_SNIPPET.format(exp=exp, n=n)],
                         env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--iterations", type=int, default=100)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels are not built; run `python3 setup.py build_ext --inplace`")
        return 1
    print(f"{'layer':>16} {'act':>8} {'numpy us':>10} {'cython us':>10} {'speedup':>8}")
    for shape in SHAPES:
        for name, act in ACTS.items():
            tp = layer_time(_pykernels, *shape, act, args.repeat) * 1e6
            tc = layer_time(_ckernels, *shape, act, args.repeat) * 1e6
            print(f"{str(shape):>16} {name:>8} {tp:10.1f} {tc:10.1f} {tp / tc:8.2f}")
    print()
    print(f"{'experiment':>18} {'numpy ms/it':>12} {'cython ms/it':>13} {'speedup':>8}")
    for exp in ("interp-final", "extrap-state-rate"):
        tp = iteration_time(exp, True, args.iterations) * 1e3
        tc = iteration_time(exp, False, args.iterations) * 1e3
        print(f"{exp:>18} {tp:12.2f} {tc:13.2f} {tp / tc:8.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

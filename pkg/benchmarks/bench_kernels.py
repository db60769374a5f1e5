"""Time the compiled kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends are imported
directly, so the ``COMMGROWTH_PURE`` switch has no effect here.
"""
from __future__ import annotations

import argparse
import timeit

from commgrowth import _kernels_py

try:
    from commgrowth import _kernels
except ImportError:
    _kernels = None

CASES = [
    ("heisenberg_tally", (2, 10)),
    ("heisenberg_tally", (3, 6)),
    ("heisenberg_tally", (5, 4)),
    ("pgl2_canonical_counts", (2, 6)),
    ("pgl2_canonical_counts", (3, 4)),
    ("pgl2_canonical_counts", (7, 2)),
    ("symplectic_kernel_count", (5, 7, 3**12)),
]


def best_of(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    opts = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'kernel':<26}{'args':<14}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for name, args in CASES:
        py = best_of(getattr(_kernels_py, name), args, opts.repeat)
        if _kernels is None:
            print(f"{name:<26}{str(args):<14}{py:>10.4f}")
            continue
        fast_fn = getattr(_kernels, name)
        if fast_fn(*args) != getattr(_kernels_py, name)(*args):
            raise SystemExit(f"{name}{args}: backends disagree")
        fast = best_of(fast_fn, args, opts.repeat)
        print(f"{name:<26}{str(args):<14}{py:>10.4f}{fast:>12.4f}{py / fast:>8.1f}x")


if __name__ == "__main__":
    main()

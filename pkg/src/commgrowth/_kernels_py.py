"""Pure-Python enumeration kernels.

Same signatures and results as the compiled ``_kernels`` extension; used when
the extension is not built or ``COMMGROWTH_PURE=1`` is set.
"""
from __future__ import annotations

import numpy as np


def symplectic_kernel_count(alpha: int, beta: int, modulus: int) -> int:
    """Number of ``(x, y)`` in ``(Z/M)^2`` with ``x*beta - y*alpha == 0 (mod M)``.

    All ``M^2`` pairs are counted: ``y*alpha mod M`` is histogrammed over ``y`` and
    then looked up at ``x*beta mod M`` for every ``x``.
    """
    M = modulus
    r = np.arange(M, dtype=np.int64)
    hist = np.bincount((r * alpha) % M, minlength=M)
    return int(hist[(r * beta) % M].sum())


def heisenberg_tally(p: int, n: int) -> list[int]:
    """Histogram of coset indices over ``(A/p^n, B/p^n)``, ``0 <= A, B < p^n``.

    Entry ``e`` counts pairs whose index is ``p^e``.
    """
    M = p**n
    exps = [0] * M
    for a in range(1, M):
        v = 0
        x = a
        while x % p == 0:
            x //= p
            v += 1
        exps[a] = n - v
    out = [0] * (n + 1)
    for ea in exps:
        for eb in exps:
            out[ea if ea > eb else eb] += 1
    return out


def pgl2_canonical_counts(p: int, n: int) -> tuple[int, int]:
    """``(|PGL_2(Z/p^n)|, |image of c == 0|)`` by enumerating scalar-normalized matrices.

    Representative of a scalar class: the first unit entry in ``(a, b, c, d)`` is 1.
    An invertible matrix always has a unit in its first row, so only the
    ``a = 1`` and ``a`` non-unit, ``b = 1`` shapes occur.
    """
    M = p**n
    units = [x % p != 0 for x in range(M)]
    total = 0
    borel = 0
    # a = 1
    for b in range(M):
        for c in range(M):
            bc = b * c
            for d in range(M):
                if units[(d - bc) % M]:
                    total += 1
                    if c == 0:
                        borel += 1
    # a non-unit, b = 1
    for a in range(0, M, p):
        for c in range(M):
            for d in range(M):
                if units[(a * d - c) % M]:
                    total += 1
                    if c == 0:
                        borel += 1
    return total, borel

import importlib

import pytest

from commgrowth import _kernels_py as py
from commgrowth import kernels

compiled = pytest.importorskip("commgrowth._kernels")


@pytest.mark.parametrize("p,n", [(2, 1), (2, 6), (3, 4), (5, 3), (7, 2)])
def test_backends_agree(p, n):
    assert compiled.heisenberg_tally(p, n) == py.heisenberg_tally(p, n)
    assert compiled.pgl2_canonical_counts(p, n) == py.pgl2_canonical_counts(p, n)


@pytest.mark.parametrize("alpha,beta,mod", [(0, 0, 8), (1, 2, 8), (3, 0, 27), (5, 10, 125), (4, 6, 64)])
def test_kernel_count_agrees(alpha, beta, mod):
    assert compiled.symplectic_kernel_count(alpha, beta, mod) == py.symplectic_kernel_count(alpha, beta, mod)


def test_env_switch_selects_fallback(monkeypatch):
    monkeypatch.setenv("COMMGROWTH_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("COMMGROWTH_PURE")
        importlib.reload(kernels)
    assert kernels.BACKEND == "compiled"

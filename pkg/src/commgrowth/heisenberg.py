"""Commensurizer growth of the integral Heisenberg group.

Cosets of the normalizer of ``H(Z_p)`` in ``H(Q_p)`` are indexed by pairs
``(a, b)`` in ``(Q_p/Z_p)^2``; the central coordinate plays no role.  Each pair
is stored as two reduced fractions in ``[0, 1)`` with ``p``-power denominators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from . import kernels
from .dirichlet import RationalInU, TruncatedDirichletSeries, euler_product


def _p_exponent(den: int, p: int) -> int:
    e = 0
    while den % p == 0:
        den //= p
        e += 1
    if den != 1:
        raise ValueError(f"denominator is not a power of {p}")
    return e


@dataclass(frozen=True)
class PadicCosetRep:
    p: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        for name in ("a", "b"):
            x = Fraction(getattr(self, name)) % 1
            _p_exponent(x.denominator, self.p)
            object.__setattr__(self, name, x)

    @property
    def exponents(self) -> tuple[int, int]:
        """Denominator exponents, i.e. ``-val(a)`` and ``-val(b)`` (0 for integral)."""
        return (_p_exponent(self.a.denominator, self.p), _p_exponent(self.b.denominator, self.p))

    @property
    def depth(self) -> int:
        return max(self.exponents)


def heisenberg_index(r: PadicCosetRep) -> int:
    """``max(p^{-val(a)}, p^{-val(b)}, 1)``; a zero coordinate contributes 1."""
    index = 1
    for x in (r.a, r.b):
        if x == 0:
            continue
        index = max(index, x.denominator)
    return index


def heisenberg_index_oracle(r: PadicCosetRep, K: int | None = None) -> int:
    """Index by counting ``(x, y)`` in ``(Z/p^K)^2`` with ``x*b - y*a`` integral."""
    if K is None:
        K = r.depth + 1
    if K < r.depth:
        raise ValueError(f"depth K={K} below denominator exponent {r.depth}")
    M = r.p**K
    alpha = int(r.a * M)
    beta = int(r.b * M)
    passing = kernels.symplectic_kernel_count(alpha, beta, M)
    total = M * M
    if total % passing:
        raise ArithmeticError("integral pairs do not form a subgroup of finite index")
    return total // passing


def coset_reps(p: int, n: int):
    """All reps whose denominators divide ``p^n``."""
    M = p**n
    for A in range(M):
        for B in range(M):
            yield PadicCosetRep(p, Fraction(A, M), Fraction(B, M))


def local_count(p: int, n: int) -> int:
    """Number of cosets of index exactly ``p^n``, by enumeration."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return kernels.heisenberg_tally(p, n)[n]


def local_count_formula(p: int, n: int) -> int:
    return 1 if n == 0 else p ** (2 * n) - p ** (2 * n - 2)


def local_factor(p: int) -> RationalInU:
    """``(1 - u) / (1 - p^2 u)`` with ``u = p^{-s}``."""
    return RationalInU(num=(1, -1), den=(1, -(p * p)), p=p)


def global_series(N: int) -> TruncatedDirichletSeries:
    return euler_product(local_factor, N)


def mobius_oracle_series(N: int) -> TruncatedDirichletSeries:
    """Coefficients of ``zeta(s-2)/zeta(s)`` as the convolution of Moebius with ``n^2``."""
    mu = [0] * (N + 1)
    mu[1] = 1
    # mu via the recursion sum_{d | n} mu(d) = [n == 1]
    for d in range(1, N + 1):
        for m in range(2 * d, N + 1, d):
            mu[m] -= mu[d]
    c = [0] * (N + 1)
    for d in range(1, N + 1):
        if mu[d]:
            for m in range(d, N + 1, d):
                q = m // d
                c[m] += mu[d] * q * q
    return TruncatedDirichletSeries(N, {n: c[n] for n in range(1, N + 1)})

"""Commensurizer growth of arithmetic lattices in PGL_2.

Local factors come from the Cartan decomposition ``K t^n K``; the oracle
reduces modulo ``p^n`` and counts inside ``PGL_2(Z/p^n)``.  Global series are
assembled over ``k = Q`` only, with user-supplied ramified primes.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from sympy import isprime

from . import kernels
from .dirichlet import TRIVIAL, ExplicitSupport, TruncatedDirichletSeries, euler_product
from .errors import SizeCapExceeded

ORACLE_CAP = 10**6


@dataclass(frozen=True)
class LocalPlace:
    q: int
    split: bool = True

    def __post_init__(self):
        if self.q < 2:
            raise ValueError("residue field size must be at least 2")


def cartan_index(q: int, n: int) -> int:
    """``[K : K^{t^n} ∩ K]``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 1 if n == 0 else (q + 1) * q ** (n - 1)


def pgl2_order(p: int, n: int) -> int:
    return (p * p - 1) * p ** (3 * n - 2)


def cartan_index_oracle(p: int, n: int, cap: int = ORACLE_CAP) -> int:
    """Index of the upper-triangular image in ``PGL_2(Z/p^n)``, by enumeration."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    if pgl2_order(p, n) > cap:
        raise SizeCapExceeded(f"|PGL_2(Z/{p}^{n})| = {pgl2_order(p, n)} exceeds cap {cap}")
    total, borel = kernels.pgl2_canonical_counts(p, n)
    if total % borel:
        raise ArithmeticError(f"subgroup order {borel} does not divide {total}")
    return total // borel


def oracle_pairs(cap: int = ORACLE_CAP, primes: Iterable[int] = (2, 3, 5)) -> list[tuple[int, int]]:
    """All ``(p, n)`` with ``|PGL_2(Z/p^n)| <= cap``."""
    out = []
    for p in primes:
        n = 1
        while pgl2_order(p, n) <= cap:
            out.append((p, n))
            n += 1
    return out


def regular_tree_sphere(q: int, n: int) -> int:
    """Vertices at distance ``n`` from a root in the ``(q+1)``-regular tree, by BFS."""
    degree = q + 1
    # a vertex is recorded by the slot leading back to its parent; each child is
    # entered through its own slot 0
    frontier = deque([None])
    for _ in range(n):
        layer = deque()
        for back in frontier:
            for slot in range(degree):
                if slot != back:
                    layer.append(0)
        frontier = layer
    return len(frontier)


def coset_count(q: int, n: int, cross_check_depth: int = 6) -> int:
    """Number of ``K``-cosets in ``K t^n K``; checked against a tree sphere for small ``n``."""
    if n < 1:
        raise ValueError("n must be positive")
    value = (q + 1) * q ** (n - 1)
    if n <= cross_check_depth and value <= 10**6:
        tree = regular_tree_sphere(q, n)
        if tree != value:
            raise ArithmeticError(f"tree sphere {tree} != coset count {value}")
    return value


def local_factor_pgl2(place: LocalPlace, N: int) -> ExplicitSupport:
    """Split place: term ``m^{1-s}`` stored as coefficient ``m`` at index ``m``."""
    if not place.split:
        return TRIVIAL
    terms = []
    n = 1
    while True:
        m = cartan_index(place.q, n)
        if m > N:
            break
        terms.append((m, m))
        n += 1
    return ExplicitSupport(tuple(terms))


def global_series_pgl2(ramified: Iterable[int], N: int) -> TruncatedDirichletSeries:
    ramified = frozenset(ramified)
    bad = [p for p in ramified if not isprime(p)]
    if bad:
        raise ValueError(f"ramified set contains non-primes: {sorted(bad)}")
    return euler_product(lambda p: local_factor_pgl2(LocalPlace(p, p not in ramified), N), N)

"""Brute-force commensurizer computations in explicit finite groups.

Groups are multiplication tables on ``range(order)`` with identity ``0``;
subgroups are explicit sorted element sets.  Everything here is an oracle, so
no quotient-group shortcuts are taken.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

import numpy as np
from sympy import isprime, primerange

from .dirichlet import ExplicitSupport, TruncatedDirichletSeries, euler_product, partial_sums
from .errors import SizeCapExceeded

FULL_CHECK_ORDER = 2000
AFFINE_CAP = 10**5


class FiniteGroupTable:
    """A finite group given by its Cayley table.

    ``mul[a, b]`` is the index of ``a*b``.  Element 0 must be the identity.
    Group axioms are verified on construction: exactly up to
    ``FULL_CHECK_ORDER`` elements, on random triples beyond that.
    """

    def __init__(self, mul, labels: Sequence[str] | None = None, check: bool = True, rng=None):
        mul = np.asarray(mul)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
            raise ValueError("multiplication table must be a non-empty square array")
        k = mul.shape[0]
        dtype = np.int16 if k < 2**15 else np.int32
        self.mul = mul.astype(dtype, copy=True)
        self.mul.setflags(write=False)
        self.order = k
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != k:
            raise ValueError("need one label per element")
        if check:
            self._check_axioms(rng)
        inv = np.empty(k, dtype=dtype)
        rows, cols = np.nonzero(self.mul == 0)
        inv[rows] = cols
        self.inv = inv
        self.inv.setflags(write=False)

    def _check_axioms(self, rng=None):
        k = self.order
        T = self.mul
        if T.min() < 0 or T.max() >= k:
            raise ValueError("table entries out of range")
        idx = np.arange(k)
        if not (np.array_equal(T[0], idx) and np.array_equal(T[:, 0], idx)):
            raise ValueError("element 0 is not the identity")
        # Latin square gives unique inverses and cancellation
        if not all(len(np.unique(T[i])) == k for i in range(k)):
            raise ValueError("some row is not a permutation")
        if not all(len(np.unique(T[:, j])) == k for j in range(k)):
            raise ValueError("some column is not a permutation")
        if k <= FULL_CHECK_ORDER:
            # Light's test: g with (xg)y == x(gy) for all x, y are closed under
            # products, so checking a generating set suffices
            for g in self._greedy_generators():
                lhs = T[T[:, g]][:, :]            # (x g) y  -> rows indexed by x
                rhs = T[:, T[g]]                  # x (g y)
                if not np.array_equal(lhs, rhs):
                    raise ValueError(f"associativity fails through element {g}")
        else:
            rng = rng or random.Random(0)
            for _ in range(20000):
                a, b, c = (rng.randrange(k) for _ in range(3))
                if T[T[a, b], c] != T[a, T[b, c]]:
                    raise ValueError(f"associativity fails at {(a, b, c)}")

    def _greedy_generators(self) -> list[int]:
        gens: list[int] = []
        span = np.zeros(self.order, dtype=bool)
        span[0] = True
        for g in range(1, self.order):
            if not span[g]:
                gens.append(g)
                span[list(self.closure(gens))] = True
        return gens

    def closure(self, gens: Iterable[int]) -> set[int]:
        """Subgroup generated by ``gens`` (finite, so closure under products suffices)."""
        gens = [int(g) for g in gens]
        seen = {0}
        frontier = [0]
        T = self.mul
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(T[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroupTable(order={self.order})"

    def element_order(self, g: int) -> int:
        n, x = 1, g
        while x != 0:
            x = int(self.mul[x, g])
            n += 1
        return n

    def subgroup(self, elements: Iterable[int]) -> "SubgroupRef":
        return SubgroupRef(self, tuple(sorted({int(e) for e in elements})))

    def generated(self, gens: Iterable[int]) -> "SubgroupRef":
        return SubgroupRef(self, tuple(sorted(self.closure(gens))), check=False)

    def whole(self) -> "SubgroupRef":
        return SubgroupRef(self, tuple(range(self.order)), check=False)

    def trivial(self) -> "SubgroupRef":
        return SubgroupRef(self, (0,), check=False)

    # text format ---------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"order {self.order}"]
        lines.extend(" ".join(str(int(x)) for x in row) for row in self.mul)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FiniteGroupTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if len(head) != 2 or head[0] != "order":
            raise ValueError("group table must start with 'order k'")
        k = int(head[1])
        rows = [[int(x) for x in ln.split()] for ln in lines[1 : k + 1]]
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"expected {k} rows of {k} entries")
        return cls(rows)

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], max_order: int | None = None) -> "FiniteGroupTable":
        """Table of the permutation group generated by ``gens`` (images of ``0..d-1``)."""
        gens = [tuple(g) for g in gens]
        d = len(gens[0]) if gens else 1
        ident = tuple(range(d))
        elements = [ident]
        index = {ident: 0}
        i = 0
        while i < len(elements):
            x = elements[i]
            for g in gens:
                y = tuple(g[x[j]] for j in range(d))
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    if max_order is not None and len(elements) > max_order:
                        raise SizeCapExceeded(f"group order exceeds {max_order}")
            i += 1
        k = len(elements)
        # product a*b = "apply a, then b"
        mul = np.empty((k, k), dtype=np.int32)
        for a, x in enumerate(elements):
            for b, y in enumerate(elements):
                mul[a, b] = index[tuple(y[x[j]] for j in range(d))]
        return cls(mul, labels=[str(e) for e in elements], check=False)


@dataclass(frozen=True, eq=False)
class SubgroupRef:
    parent: FiniteGroupTable
    elements: tuple[int, ...]
    check: bool = True

    def __post_init__(self):
        if self.check:
            if not self.elements or self.elements[0] != 0:
                raise ValueError("subgroup must contain the identity")
            els = np.array(self.elements)
            prods = self.parent.mul[np.ix_(els, els)]
            if not np.isin(prods, els).all():
                raise ValueError("element set is not closed under multiplication")

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupRef)
            and other.parent is self.parent
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def __contains__(self, g):
        return int(g) in self.as_set()

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def index(self) -> int:
        return self.parent.order // len(self.elements)

    def intersect(self, other: "SubgroupRef") -> "SubgroupRef":
        return SubgroupRef(self.parent, tuple(sorted(self.as_set() & other.as_set())), check=False)

    def to_text(self) -> str:
        return " ".join(str(e) for e in self.elements) + "\n"

    @classmethod
    def from_text(cls, parent: FiniteGroupTable, text: str) -> "SubgroupRef":
        return parent.subgroup(int(x) for x in text.split())


def conjugate(A: SubgroupRef, g: int) -> SubgroupRef:
    """``A^g = {g^-1 a g}``."""
    G = A.parent
    els = np.array(A.elements)
    conj = G.mul[G.mul[G.inv[g], els], g]
    return SubgroupRef(G, tuple(sorted(int(x) for x in conj)), check=False)


def chi(A: SubgroupRef, g: int) -> int:
    """``[A : A ∩ A^g]``."""
    inter = A.as_set() & conjugate(A, g).as_set()
    return len(A) // len(inter)


def normalizer(A: SubgroupRef) -> SubgroupRef:
    G = A.parent
    aset = A.as_set()
    members = [g for g in range(G.order) if conjugate(A, g).as_set() == aset]
    return SubgroupRef(G, tuple(members), check=False)


def comm_classes(A: SubgroupRef) -> dict[int, int]:
    """``n -> c_n``: left ``N_G(A)``-orbits on ``{g : [A : A ∩ A^g] = n}``."""
    G = A.parent
    N = np.array(normalizer(A).elements)
    seen = np.zeros(G.order, dtype=bool)
    counts: dict[int, int] = {}
    for g in range(G.order):
        if seen[g]:
            continue
        orbit = G.mul[N, g]
        seen[orbit] = True
        n = chi(A, g)
        counts[n] = counts.get(n, 0) + 1
    return dict(sorted(counts.items()))


def zeta_polynomial(A: SubgroupRef) -> TruncatedDirichletSeries:
    return TruncatedDirichletSeries(len(A), comm_classes(A))


# constructions -----------------------------------------------------------


def direct_product(G: FiniteGroupTable, H: FiniteGroupTable) -> FiniteGroupTable:
    """``G x H`` with ``(g, h)`` at index ``g * |H| + h``."""
    k, l = G.order, H.order
    gi = np.repeat(np.arange(k), l)
    hi = np.tile(np.arange(l), k)
    mul = G.mul[np.ix_(gi, gi)].astype(np.int64) * l + H.mul[np.ix_(hi, hi)]
    return FiniteGroupTable(mul, check=False)


def product_subgroup(GH: FiniteGroupTable, A: SubgroupRef, B: SubgroupRef) -> SubgroupRef:
    l = B.parent.order
    return SubgroupRef(GH, tuple(sorted(a * l + b for a in A.elements for b in B.elements)), check=False)


def _gl_matrices(n: int, p: int) -> list[np.ndarray]:
    mats = []
    for entries in itertools.product(range(p), repeat=n * n):
        M = np.array(entries, dtype=np.int64).reshape(n, n)
        if _det_mod_p(M, p):
            mats.append(M)
    return mats


def _det_mod_p(M: np.ndarray, p: int) -> int:
    """Determinant mod ``p`` by Gaussian elimination over ``F_p``."""
    A = [[int(x) % p for x in row] for row in M]
    n = len(A)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c] % p
        inv = pow(A[c][c], -1, p)
        for r in range(c + 1, n):
            f = A[r][c] * inv % p
            if f:
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[c])]
    return det % p


def build_affine_group(n: int, p: int, cap: int = AFFINE_CAP) -> tuple[FiniteGroupTable, SubgroupRef]:
    """``GL_n(F_p) ⋉ F_p^n`` and the translations along the first coordinate line.

    An element ``(M, v)`` is the affine map ``x -> M x + v`` and the product is
    composition, ``(g h)(x) = g(h(x))``.  Conjugating the translation by ``w``
    by ``(M, v)`` gives the translation by ``M^{-1} w``, so the line subgroup is
    normalized exactly by ``(M, v)`` with ``M`` stabilizing the line.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    gl_order = 1
    for i in range(n):
        gl_order *= p**n - p**i
    order = gl_order * p**n
    if order > cap:
        raise SizeCapExceeded(f"|GL_{n}(F_{p}) ⋉ F_{p}^{n}| = {order} exceeds cap {cap}")

    mats = _gl_matrices(n, p)
    assert len(mats) == gl_order
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=n)]
    ident = np.eye(n, dtype=np.int64)
    # identity first
    mats.sort(key=lambda M: not np.array_equal(M, ident))
    elems = np.zeros((order, n + 1, n + 1), dtype=np.int64)
    labels = []
    i = 0
    for M in mats:
        for v in vecs:
            elems[i, :n, :n] = M
            elems[i, :n, n] = v
            elems[i, n, n] = 1
            labels.append(f"({M.tolist()},{v.tolist()})")
            i += 1

    weights = p ** np.arange(n * (n + 1), dtype=np.int64)

    def keys(arr):
        flat = arr[..., :n, :].reshape(*arr.shape[:-2], n * (n + 1))
        return flat @ weights

    lookup = np.full(p ** (n * (n + 1)), -1, dtype=np.int64)
    lookup[keys(elems)] = np.arange(order)
    mul = np.empty((order, order), dtype=np.int32)
    for a in range(order):
        prods = np.matmul(elems[a], elems) % p
        mul[a] = lookup[keys(prods)]
    G = FiniteGroupTable(mul, labels=labels, check=order <= FULL_CHECK_ORDER)
    G.affine_elements = elems

    line = []
    for idx in range(order):
        E = elems[idx]
        if np.array_equal(E[:n, :n], ident) and not E[1:n, n].any():
            line.append(idx)
    return G, SubgroupRef(G, tuple(sorted(line)))


def affine_zeta_formula(n: int, p: int) -> dict[int, int]:
    """Closed form ``1 + ((p^n - 1)/(p - 1) - 1) p^{-s}`` as a coefficient map."""
    lines = (p**n - 1) // (p - 1)
    out = {1: 1}
    if lines - 1:
        out[p] = lines - 1
    return out


def line_stabilizer_elements(G: FiniteGroupTable) -> set[int]:
    """Elements ``(M, v)`` of an affine group whose linear part maps the first line to itself."""
    E = G.affine_elements
    n = E.shape[1] - 1
    return {int(i) for i in np.nonzero(~E[:, 1:n, 0].any(axis=1))[0]}


# random groups for property tests ---------------------------------------


def random_permutation_group(
    rng: random.Random, max_degree: int = 6, max_order: int = 500, max_gens: int = 2
) -> FiniteGroupTable:
    """Subgroup of ``S_d`` (``d <= max_degree``) from random generators, order ``<= max_order``."""
    while True:
        d = rng.randint(2, max_degree)
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            perm = list(range(d))
            rng.shuffle(perm)
            gens.append(perm)
        try:
            return FiniteGroupTable.from_permutations(gens, max_order=max_order)
        except SizeCapExceeded:
            continue


def random_subgroup(G: FiniteGroupTable, rng: random.Random, max_gens: int = 2) -> SubgroupRef:
    gens = [rng.randrange(G.order) for _ in range(rng.randint(0, max_gens))]
    return G.generated(gens)


def random_subgroup_of(H: SubgroupRef, rng: random.Random, max_gens: int = 2) -> SubgroupRef:
    gens = [rng.choice(H.elements) for _ in range(rng.randint(0, max_gens))]
    return H.parent.generated(gens)


def check_intersection_index(B: SubgroupRef, C: SubgroupRef) -> bool:
    """``[G : B ∩ C] <= [G : B] [G : C]``."""
    G = B.parent
    return G.order // len(B.intersect(C)) <= B.index() * C.index()


def check_chi_laws(A: SubgroupRef, g: int, h: int) -> bool:
    """``chi(g) == chi(g^-1)`` and ``chi(gh) <= chi(g) chi(h)``."""
    G = A.parent
    cg = chi(A, g)
    return cg == chi(A, int(G.inv[g])) and chi(A, int(G.mul[g, h])) <= cg * chi(A, h)


def check_index_gap(gamma: SubgroupRef, sub: SubgroupRef, g: int) -> bool:
    """``chi_Γ(g)/t <= chi_Γ'(g) <= t chi_Γ(g)`` for ``Γ' <= Γ`` of index ``t``."""
    t = len(gamma) // len(sub)
    big = chi(gamma, g)
    small = chi(sub, g)
    return Fraction(big, t) <= small <= t * big


# unbounded growth --------------------------------------------------------


def choose_line_dimensions(f: Callable[[int], int], N: int) -> dict[int, int]:
    """Smallest ``n_p >= 1`` with ``f(p + i) < (p^{n_p} - 1)/(p - 1)`` for ``0 <= i <= p``, ``p + i <= N``."""
    dims = {}
    for p in primerange(2, N + 1):
        target = max(f(p + i) for i in range(0, p + 1) if p + i <= N)
        n = 1
        while (p**n - 1) // (p - 1) <= target:
            n += 1
        dims[p] = n
    return dims


def growth_floor_demo(
    f: Union[Callable[[int], int], Mapping[int, int]], N: int
) -> tuple[TruncatedDirichletSeries, dict[int, int]]:
    """Series of a product of affine-group pairs whose partial sums dominate ``f``.

    Returns the truncated series and the chosen ``n_p``.  ``c_{<=1}`` is always
    1, so domination is guaranteed (and checked) for ``2 <= n <= N``.
    """
    fn = f.__getitem__ if isinstance(f, Mapping) else f
    dims = choose_line_dimensions(fn, N)

    def factor(p):
        return ExplicitSupport(tuple(sorted(affine_zeta_formula(dims[p], p).items()))[1:])

    series = euler_product(factor, N)
    sums = partial_sums(series)
    for n in range(2, N + 1):
        if sums[n - 1] < fn(n):
            raise ArithmeticError(f"partial sum {sums[n - 1]} below f({n}) = {fn(n)}")
    return series, dims

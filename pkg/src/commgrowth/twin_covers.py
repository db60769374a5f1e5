"""Graph coverings, twin covers and their minimality.

Graphs are stored by darts (half-edges) so loops and parallel edges are
first-class: a dart knows its vertex and its partner under a fixed-point-free
involution.  A covering map sends vertices to vertices and darts to darts,
commutes with both structures and is a bijection on every vertex star.

Minimal twin covers of degree ``n`` of a pointed base ``(Y, y0)`` count the
double cosets ``Γ\\Comm_n`` of the tree lattice with quotient ``Y``.
"""
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import BudgetExceeded

DEFAULT_MAX_DEGREE = 5
DEFAULT_MAX_BASE_VERTICES = 2


@dataclass(frozen=True)
class DartMultigraph:
    num_vertices: int
    dart_vertex: tuple[int, ...]
    dart_involution: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dart_vertex", tuple(int(v) for v in self.dart_vertex))
        object.__setattr__(self, "dart_involution", tuple(int(d) for d in self.dart_involution))
        D = len(self.dart_vertex)
        if len(self.dart_involution) != D:
            raise ValueError("dart_vertex and dart_involution differ in length")
        for d, e in enumerate(self.dart_involution):
            if not 0 <= e < D or e == d or self.dart_involution[e] != d:
                raise ValueError(f"dart {d}: partner {e} does not give a fixed-point-free involution")
        if any(not 0 <= v < self.num_vertices for v in self.dart_vertex):
            raise ValueError("dart attached to a nonexistent vertex")
        stars: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for d, v in enumerate(self.dart_vertex):
            stars[v].append(d)
        if any(not s for s in stars):
            raise ValueError("every vertex needs at least one dart")
        object.__setattr__(self, "_stars", tuple(tuple(s) for s in stars))

    @property
    def num_darts(self) -> int:
        return len(self.dart_vertex)

    def star(self, v: int) -> tuple[int, ...]:
        return self._stars[v]

    def degree(self, v: int) -> int:
        return len(self._stars[v])

    def max_degree(self) -> int:
        return max(len(s) for s in self._stars)

    def partner_vertex(self, d: int) -> int:
        return self.dart_vertex[self.dart_involution[d]]

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for d in self.star(v):
                w = self.partner_vertex(d)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def is_simple(self) -> bool:
        """No loops and no parallel edges."""
        pairs = set()
        for d, e in enumerate(self.dart_involution):
            u, v = self.dart_vertex[d], self.dart_vertex[e]
            if u == v:
                return False
            if d < e:
                key = (min(u, v), max(u, v))
                if key in pairs:
                    return False
                pairs.add(key)
        return True

    def betti_number(self) -> int:
        """Rank of the fundamental group of a connected graph."""
        return self.num_darts // 2 - self.num_vertices + 1

    @classmethod
    def bouquet(cls, k: int) -> "DartMultigraph":
        """One vertex with ``k`` loops; loop ``i`` has darts ``2i, 2i+1``."""
        return cls(1, (0,) * (2 * k), tuple(d ^ 1 for d in range(2 * k)))

    @classmethod
    def cycle(cls, n: int) -> "DartMultigraph":
        """Cycle on ``n >= 3`` vertices; edge ``i`` joins ``i`` and ``i+1``."""
        verts = []
        for i in range(n):
            verts += [i, (i + 1) % n]
        return cls(n, tuple(verts), tuple(d ^ 1 for d in range(2 * n)))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Sequence[tuple[int, int]]) -> "DartMultigraph":
        verts = []
        for u, v in edges:
            verts += [u, v]
        return cls(num_vertices, tuple(verts), tuple(d ^ 1 for d in range(2 * len(edges))))

    def to_text(self, base: int | None = None) -> str:
        lines = [f"vertices {self.num_vertices} darts {self.num_darts}"]
        for d in range(self.num_darts):
            lines.append(f"{d} {self.dart_vertex[d]} {self.dart_involution[d]}")
        if base is not None:
            lines.append(f"base {base}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> tuple["DartMultigraph", int | None]:
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        head = lines[0]
        if len(head) != 4 or head[0] != "vertices" or head[2] != "darts":
            raise ValueError("first line must be 'vertices V darts D'")
        V, D = int(head[1]), int(head[3])
        vertex = [None] * D
        partner = [None] * D
        base = None
        for parts in lines[1:]:
            if parts[0] == "base":
                base = int(parts[1])
                continue
            d, v, e = (int(x) for x in parts)
            if not 0 <= d < D or vertex[d] is not None:
                raise ValueError(f"bad or repeated dart id {d}")
            vertex[d], partner[d] = v, e
        if any(v is None for v in vertex):
            raise ValueError("missing dart lines")
        g = cls(V, tuple(vertex), tuple(partner))
        if base is not None and not 0 <= base < V:
            raise ValueError("base vertex out of range")
        return g, base


@dataclass(frozen=True)
class CoveringMap:
    source: DartMultigraph
    target: DartMultigraph
    vertex_map: tuple[int, ...]
    dart_map: tuple[int, ...]

    @property
    def degree(self) -> int:
        return self.source.num_vertices // self.target.num_vertices

    def compose(self, inner: "CoveringMap") -> "CoveringMap":
        """``self ∘ inner``."""
        return CoveringMap(
            inner.source,
            self.target,
            tuple(self.vertex_map[v] for v in inner.vertex_map),
            tuple(self.dart_map[d] for d in inner.dart_map),
        )

    @classmethod
    def identity(cls, g: DartMultigraph) -> "CoveringMap":
        return cls(g, g, tuple(range(g.num_vertices)), tuple(range(g.num_darts)))


def is_covering(f: CoveringMap) -> bool:
    X, Y = f.source, f.target
    if len(f.vertex_map) != X.num_vertices or len(f.dart_map) != X.num_darts:
        return False
    if any(not (isinstance(v, int) and 0 <= v < Y.num_vertices) for v in f.vertex_map):
        return False
    if any(not (isinstance(e, int) and 0 <= e < Y.num_darts) for e in f.dart_map):
        return False
    for d in range(X.num_darts):
        e = f.dart_map[d]
        if f.vertex_map[X.dart_vertex[d]] != Y.dart_vertex[e]:
            return False
        if f.dart_map[X.dart_involution[d]] != Y.dart_involution[e]:
            return False
    for v in range(X.num_vertices):
        image = sorted(f.dart_map[d] for d in X.star(v))
        if image != sorted(Y.star(f.vertex_map[v])):
            return False
    if X.is_connected():
        fibers = [0] * Y.num_vertices
        for w in f.vertex_map:
            fibers[w] += 1
        if len(set(fibers)) != 1:
            return False
    return True


# pointed covers via monodromy ---------------------------------------------


def spanning_tree_generators(Y: DartMultigraph, y0: int) -> list[int]:
    """One dart per edge outside a BFS spanning tree rooted at ``y0``.

    These darts index the free generators of ``π_1(Y, y0)``.
    """
    seen = {y0}
    tree_darts = set()
    queue = [y0]
    for v in queue:
        for d in Y.star(v):
            w = Y.partner_vertex(d)
            if w not in seen:
                seen.add(w)
                tree_darts.add(d)
                tree_darts.add(Y.dart_involution[d])
                queue.append(w)
    if len(seen) != Y.num_vertices:
        raise ValueError("base graph is not connected")
    gens = []
    for d in range(Y.num_darts):
        e = Y.dart_involution[d]
        if d not in tree_darts and d < e:
            gens.append(d)
    return gens


def cover_from_monodromy(
    Y: DartMultigraph, y0: int, perms: Sequence[Sequence[int]], gens: Sequence[int] | None = None
) -> tuple[DartMultigraph, int, CoveringMap]:
    """Degree-``m`` cover: dart ``(d, i)`` of a generator edge pairs with ``(d', perm(i))``.

    Vertex ``(v, i)`` has index ``v*m + i``, dart ``(d, i)`` index ``d*m + i``;
    the basepoint is ``(y0, 0)``.
    """
    if gens is None:
        gens = spanning_tree_generators(Y, y0)
    if len(perms) != len(gens):
        raise ValueError(f"need {len(gens)} permutations, got {len(perms)}")
    m = len(perms[0]) if perms else 1
    twist = {}
    for d, perm in zip(gens, perms):
        perm = tuple(perm)
        inv = [0] * m
        for i, j in enumerate(perm):
            inv[j] = i
        twist[d] = perm
        twist[Y.dart_involution[d]] = tuple(inv)
    vertex = []
    partner = []
    for d in range(Y.num_darts):
        e = Y.dart_involution[d]
        perm = twist.get(d)
        for i in range(m):
            vertex.append(Y.dart_vertex[d] * m + i)
            partner.append(e * m + (perm[i] if perm else i))
    X = DartMultigraph(Y.num_vertices * m, tuple(vertex), tuple(partner))
    f = CoveringMap(
        X,
        Y,
        tuple(v // m for v in range(X.num_vertices)),
        tuple(d // m for d in range(X.num_darts)),
    )
    return X, y0 * m, f


def canonical_transitive_tuples(k: int, m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Transitive ``k``-tuples in ``S_m``, one per class under relabelings fixing sheet 0.

    Sheets are labelled in order of first appearance when scanning, sheet by
    sheet, the forward then backward image under each generator; the search
    only ever opens a new sheet at the first undefined slot, so every class is
    produced exactly once.
    """
    fwd = [[-1] * m for _ in range(k)]
    bwd = [[-1] * m for _ in range(k)]

    def first_open(used):
        for i in range(used):
            for j in range(k):
                if fwd[j][i] < 0:
                    return i, j, 0
                if bwd[j][i] < 0:
                    return i, j, 1
        return None

    def search(used):
        slot = first_open(used)
        if slot is None:
            if used == m:
                yield tuple(tuple(f) for f in fwd)
            return
        i, j, backward = slot
        if not backward:
            options = [t for t in range(used) if bwd[j][t] < 0]
        else:
            options = [s for s in range(used) if fwd[j][s] < 0]
        if used < m:
            options.append(used)
        for t in options:
            if not backward:
                fwd[j][i], bwd[j][t] = t, i
            else:
                fwd[j][t], bwd[j][i] = i, t
            yield from search(used + (t == used))
            if not backward:
                fwd[j][i] = bwd[j][t] = -1
            else:
                fwd[j][t] = bwd[j][i] = -1

    if m < 1:
        return
    yield from search(1)


def is_transitive(perms: Sequence[Sequence[int]], m: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for p in perms:
            j = p[i]
            if j not in seen:
                seen.add(j)
                stack.append(j)
        # inverses are not needed: a finite permutation orbit is closed under them
    return len(seen) == m


def all_transitive_tuples(k: int, m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Every transitive ``k``-tuple in ``S_m`` (labelled)."""
    perms = list(itertools.permutations(range(m)))
    for tup in itertools.product(perms, repeat=k):
        if is_transitive(tup, m):
            yield tup


@dataclass(frozen=True)
class PointedCover:
    X: DartMultigraph
    x0: int
    f1: CoveringMap
    monodromy: tuple[tuple[int, ...], ...]


def enumerate_pointed_covers(Y: DartMultigraph, y0: int, m: int) -> list[PointedCover]:
    """Connected degree-``m`` covers of ``(Y, y0)`` up to pointed isomorphism."""
    gens = spanning_tree_generators(Y, y0)
    out = []
    for perms in canonical_transitive_tuples(len(gens), m):
        X, x0, f = cover_from_monodromy(Y, y0, perms, gens)
        out.append(PointedCover(X, x0, f, perms))
    return out


def hall_count(k: int, m: int) -> int:
    """Number of index-``m`` subgroups of the free group of rank ``k``."""
    if k < 1 or m < 1:
        raise ValueError("need k >= 1 and m >= 1")
    a = [0]
    for n in range(1, m + 1):
        total = n * math.factorial(n) ** (k - 1)
        for i in range(1, n):
            total -= math.factorial(n - i) ** (k - 1) * a[i]
        a.append(total)
    return a[m]


def transitive_tuple_count_oracle(k: int, m: int) -> int:
    """Index-``m`` subgroup count as (transitive tuples) / (m-1)!, by brute force."""
    return sum(1 for _ in all_transitive_tuples(k, m)) // math.factorial(m - 1)


# covering maps between given graphs ----------------------------------------


def enumerate_second_covers(X: DartMultigraph, Y: DartMultigraph) -> list[CoveringMap]:
    """All covering maps ``X -> Y`` for connected ``X``."""
    if X.num_vertices % Y.num_vertices or X.num_darts * Y.num_vertices != Y.num_darts * X.num_vertices:
        return []
    if not X.is_connected():
        raise ValueError("source graph must be connected")
    nX, nD = X.num_vertices, X.num_darts
    vmap = [-1] * nX
    dmap = [-1] * nD
    used = [set() for _ in range(nX)]
    inv_x, inv_y = X.dart_involution, Y.dart_involution
    # darts in BFS order from vertex 0 so each dart's vertex is mapped before it is reached
    order: list[int] = []
    seen = {0}
    queue = [0]
    for v in queue:
        for d in X.star(v):
            order.append(d)
            w = X.partner_vertex(d)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    results: list[CoveringMap] = []
    found: set[tuple[int, ...]] = set()

    def search(pos):
        while pos < len(order) and dmap[order[pos]] >= 0:
            pos += 1
        if pos == len(order):
            key = tuple(dmap)
            if key not in found:
                found.add(key)
                results.append(CoveringMap(X, Y, tuple(vmap), key))
            return
        d = order[pos]
        x = X.dart_vertex[d]
        dp = inv_x[d]
        xp = X.dart_vertex[dp]
        for e in Y.star(vmap[x]):
            if e in used[x]:
                continue
            ep = inv_y[e]
            yp = Y.dart_vertex[ep]
            fresh = vmap[xp] < 0
            if fresh:
                if X.degree(xp) != Y.degree(yp):
                    continue
                vmap[xp] = yp
            elif vmap[xp] != yp:
                continue
            if ep in used[xp] or (xp == x and ep == e):
                if fresh:
                    vmap[xp] = -1
                continue
            dmap[d], dmap[dp] = e, ep
            used[x].add(e)
            used[xp].add(ep)
            search(pos + 1)
            used[x].discard(e)
            used[xp].discard(ep)
            dmap[d] = dmap[dp] = -1
            if fresh:
                vmap[xp] = -1

    for y in range(Y.num_vertices):
        if Y.degree(y) != X.degree(0):
            continue
        vmap[0] = y
        search(0)
        vmap[0] = -1
    return results


def automorphism_count(X: DartMultigraph, level: str = "dart") -> int:
    """``|Aut(X)|`` acting on darts, or on vertices (``level="vertex"``)."""
    autos = enumerate_second_covers(X, X)
    if level == "dart":
        return len(autos)
    if level == "vertex":
        return len({f.vertex_map for f in autos})
    raise ValueError(f"unknown level {level!r}")


def aut_bound(X: DartMultigraph, b: int) -> int:
    """``|V| * b^(|V|-1)``: images of a labelled spanning tree.

    Bounds vertex automorphisms of any graph with degrees at most ``b``, and
    dart automorphisms of simple graphs; loops and parallel edges add dart
    symmetries the spanning-tree count does not see.
    """
    if b < X.max_degree():
        raise ValueError(f"b={b} is below the maximum degree {X.max_degree()}")
    V = X.num_vertices
    return V * b ** (V - 1)


# twin covers ----------------------------------------------------------------


@dataclass(frozen=True)
class TwinCover:
    X: DartMultigraph
    x0: int
    f1: CoveringMap
    f2: CoveringMap
    y0: int

    def __post_init__(self):
        if self.f1.source is not self.X and self.f1.source != self.X:
            raise ValueError("f1 must start at X")
        if self.f2.source is not self.X and self.f2.source != self.X:
            raise ValueError("f2 must start at X")
        if self.f1.target != self.f2.target:
            raise ValueError("f1 and f2 must share a target")
        if self.f1.vertex_map[self.x0] != self.y0:
            raise ValueError("f1 must send x0 to y0")

    @property
    def Y(self) -> DartMultigraph:
        return self.f1.target

    @property
    def degree(self) -> int:
        return self.X.num_vertices // self.Y.num_vertices

    def is_valid(self) -> bool:
        return is_covering(self.f1) and is_covering(self.f2) and self.X.num_vertices % self.Y.num_vertices == 0


def _lift_table(X: DartMultigraph, f: CoveringMap) -> list[dict[int, int]]:
    """``lift[x][e]``: the dart at ``x`` over dart ``e`` of the target."""
    table = [dict() for _ in range(X.num_vertices)]
    for d in range(X.num_darts):
        table[X.dart_vertex[d]][f.dart_map[d]] = d
    return table


def pointed_morphism(
    X: DartMultigraph, x0: int, f1: CoveringMap, Z: DartMultigraph, z0: int, h1: CoveringMap
) -> CoveringMap | None:
    """The unique map ``φ`` with ``φ(x0) = z0`` and ``h1 ∘ φ = f1``, if it exists.

    Once ``φ(x0)`` is fixed every dart image is forced by lifting through ``h1``.
    """
    if f1.vertex_map[x0] != h1.vertex_map[z0]:
        return None
    lift = _lift_table(Z, h1)
    vmap = [-1] * X.num_vertices
    dmap = [-1] * X.num_darts
    vmap[x0] = z0
    stack = [x0]
    while stack:
        x = stack.pop()
        for d in X.star(x):
            e = lift[vmap[x]].get(f1.dart_map[d])
            if e is None:
                return None
            if dmap[d] >= 0 and dmap[d] != e:
                return None
            dmap[d] = e
            xp = X.partner_vertex(d)
            zp = Z.partner_vertex(e)
            if vmap[xp] < 0:
                vmap[xp] = zp
                stack.append(xp)
            elif vmap[xp] != zp:
                return None
    for d in range(X.num_darts):
        if dmap[X.dart_involution[d]] != Z.dart_involution[dmap[d]]:
            return None
    return CoveringMap(X, Z, tuple(vmap), tuple(dmap))


def find_morphism(t: TwinCover, s: TwinCover) -> CoveringMap | None:
    phi = pointed_morphism(t.X, t.x0, t.f1, s.X, s.x0, s.f1)
    if phi is None:
        return None
    if s.f2.compose(phi).dart_map != t.f2.dart_map:
        return None
    if s.f2.compose(phi).vertex_map != t.f2.vertex_map:
        return None
    return phi


def twin_iso(t1: TwinCover, t2: TwinCover) -> bool:
    """Whether a basepoint-preserving isomorphism commutes with both covers."""
    if t1.Y != t2.Y or t1.y0 != t2.y0:
        return False
    if t1.X.num_vertices != t2.X.num_vertices or t1.X.num_darts != t2.X.num_darts:
        return False
    phi = find_morphism(t1, t2)
    return phi is not None and len(set(phi.dart_map)) == t1.X.num_darts


def _vertex_congruence(t: TwinCover, x: int, y: int) -> list[int] | None:
    """Finest f1-compatible congruence identifying ``x`` and ``y``, as vertex roots.

    Returns ``None`` when the congruence is not also compatible with ``f2``.
    """
    X, f1, f2 = t.X, t.f1, t.f2
    lift = _lift_table(X, f1)
    parent = list(range(X.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    pending = [(x, y)]
    while pending:
        a, b = pending.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[rb] = ra
        for d in X.star(a):
            e = lift[b][f1.dart_map[d]]
            pending.append((X.partner_vertex(d), X.partner_vertex(e)))
    roots = [find(v) for v in range(X.num_vertices)]
    for v in range(X.num_vertices):
        r = roots[v]
        if f2.vertex_map[v] != f2.vertex_map[r]:
            return None
        for d in X.star(v):
            if f2.dart_map[d] != f2.dart_map[lift[r][f1.dart_map[d]]]:
                return None
    return roots


def is_minimal(t: TwinCover) -> bool:
    """No morphism from ``t`` onto a twin cover of strictly intermediate degree.

    A morphism is a quotient by a congruence that respects both covers; it is
    enough to try the congruences generated by ``x0`` and one other point of
    its ``f1``-fiber.
    """
    Y = t.Y
    fiber = [v for v in range(t.X.num_vertices) if t.f1.vertex_map[v] == t.y0 and v != t.x0]
    for y in fiber:
        roots = _vertex_congruence(t, t.x0, y)
        if roots is not None and len(set(roots)) > Y.num_vertices:
            return False
    return True


def twin_covers_over(pc: PointedCover, Y: DartMultigraph, y0: int) -> list[TwinCover]:
    return [TwinCover(pc.X, pc.x0, pc.f1, f2, y0) for f2 in enumerate_second_covers(pc.X, Y)]


@dataclass
class DegreeCount:
    degree: int
    pointed_covers: int
    twin_covers: int
    minimal_classes: int

    def as_row(self) -> tuple[int, int, int, int]:
        return (self.degree, self.pointed_covers, self.twin_covers, self.minimal_classes)


def _check_base(Y: DartMultigraph, y0: int, n: int, max_degree: int, max_base_vertices: int):
    if not Y.is_connected():
        raise ValueError("base graph must be connected")
    if not 0 <= y0 < Y.num_vertices:
        raise ValueError("basepoint out of range")
    low = [v for v in range(Y.num_vertices) if Y.degree(v) < 3]
    if low:
        raise ValueError(f"vertices {low} have degree below 3")
    if Y.num_vertices > max_base_vertices:
        raise BudgetExceeded(f"base graph has {Y.num_vertices} vertices, budget is {max_base_vertices}")


def count_comm_classes(
    Y: DartMultigraph,
    y0: int,
    n: int,
    *,
    minimality: bool = True,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_base_vertices: int = DEFAULT_MAX_BASE_VERTICES,
) -> list[DegreeCount]:
    """Per-degree counts of minimal twin covers, ``m = 1..n``.

    Pointed covers come out pairwise non-isomorphic, and the only automorphism
    of a connected pointed cover over ``f1`` is the identity, so distinct
    ``f2`` on one pointed cover are distinct twin-cover classes.
    """
    _check_base(Y, y0, n, max_degree, max_base_vertices)
    out: list[DegreeCount] = []
    for m in range(1, n + 1):
        if m > max_degree:
            raise BudgetExceeded(f"degree {m} exceeds budget {max_degree}", partial=out)
        pcs = enumerate_pointed_covers(Y, y0, m)
        twins = 0
        minimal = 0
        for pc in pcs:
            for t in twin_covers_over(pc, Y, y0):
                twins += 1
                if not minimality or is_minimal(t):
                    minimal += 1
        out.append(DegreeCount(m, len(pcs), twins, minimal))
    return out


def _relabel_invariant(t: TwinCover) -> tuple:
    """Cheap isomorphism invariant used to bucket twin covers before pairwise tests."""
    x0 = t.x0
    star = sorted((t.f1.dart_map[d], t.f2.dart_map[d]) for d in t.X.star(x0))
    fiber_images = sorted(
        t.f2.vertex_map[v] for v in range(t.X.num_vertices) if t.f1.vertex_map[v] == t.y0
    )
    return (t.degree, t.f2.vertex_map[x0], tuple(star), tuple(fiber_images))


def classify(twins: Sequence[TwinCover]) -> list[TwinCover]:
    """Representatives of isomorphism classes, by pairwise :func:`twin_iso` within buckets."""
    buckets: dict[tuple, list[TwinCover]] = defaultdict(list)
    for t in twins:
        bucket = buckets[_relabel_invariant(t)]
        if not any(twin_iso(t, r) for r in bucket):
            bucket.append(t)
    return [r for b in buckets.values() for r in b]


def count_comm_classes_bruteforce(Y: DartMultigraph, y0: int, n: int) -> list[DegreeCount]:
    """Oracle for :func:`count_comm_classes` that skips every shortcut.

    All labelled transitive monodromy tuples are expanded, isomorphism classes
    are found with :func:`twin_iso`, and minimality is decided by searching
    for explicit morphisms into the twin covers of every intermediate degree.
    """
    _check_base(Y, y0, n, n, Y.num_vertices)
    gens = spanning_tree_generators(Y, y0)
    reps_by_degree: dict[int, list[TwinCover]] = {}
    out = []
    for m in range(1, n + 1):
        pointed_reps: list[tuple] = []
        twins: list[TwinCover] = []
        for perms in all_transitive_tuples(len(gens), m):
            X, x0, f1 = cover_from_monodromy(Y, y0, perms, gens)
            if not any(pointed_morphism(X, x0, f1, Z, z0, h1) is not None for Z, z0, h1 in pointed_reps):
                pointed_reps.append((X, x0, f1))
            for f2 in enumerate_second_covers(X, Y):
                twins.append(TwinCover(X, x0, f1, f2, y0))
        reps = classify(twins)
        reps_by_degree[m] = reps
        smaller = [s for d in range(2, m) if m % d == 0 for s in reps_by_degree[d]]
        minimal = sum(1 for t in reps if not any(find_morphism(t, s) is not None for s in smaller))
        out.append(DegreeCount(m, len(pointed_reps), len(reps), minimal))
    return out


def growth_trend(counts: Sequence[DegreeCount]) -> list[tuple[int, int, float]]:
    """``(n, c(<=n), log2 c(<=n) / (n lg n))`` for ``n >= 2``."""
    out = []
    total = 0
    for row in counts:
        total += row.minimal_classes
        if row.degree >= 2:
            out.append((row.degree, total, math.log2(total) / (row.degree * math.log2(row.degree))))
    return out

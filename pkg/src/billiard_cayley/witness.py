"""K3,3 subdivisions certifying non-planarity, and the planar embedding for
isosceles triangles with n even.

Constructions work in normalized labels a', b', c' (a permutation of the
original a, b, c recorded on the witness). With a', b' generating D_n, the
{a', b'} edges form one cycle of length 2n through

    e, a', b'a', a'b'a', (b'a')^2, a'(b'a')^2, ...

so position 2k holds (ba)^k and position 2k+1 holds a(ba)^k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .cayley import CayleyGraph
from .dihedral import (
    LABELS,
    DihedralElement,
    Permutation,
    TriangleTriple,
    element_order,
    generators,
    isosceles_permutation,
    right_permutation,
    translate_word,
)
from .embedding import RotationSystem, rotation_from_neighbor_orders
from .errors import ConsistencyError, PreconditionError, ResourceError

DEFAULT_SEARCH_BUDGET = 10**6
MAX_GENERIC_VERTICES = 24


@dataclass(frozen=True)
class K33Witness:
    """Branch sets and the nine connecting paths of a K3,3 subdivision.

    ``paths[3 * i + j]`` runs from ``part1[i]`` to ``part2[j]``, endpoints
    included. ``symbols`` optionally names vertices by normalized words.
    """

    triple: TriangleTriple
    part1: tuple[DihedralElement, ...]
    part2: tuple[DihedralElement, ...]
    paths: tuple[tuple[DihedralElement, ...], ...]
    permutation: Permutation = (0, 1, 2)
    symbols: dict = field(default_factory=dict, compare=False)

    def name(self, x: DihedralElement) -> str:
        return str(x)

    def to_json(self) -> dict:
        out = {
            "triple": list(self.triple.ps),
            "normalization": {
                "permutation": list(self.permutation),
                "labels": {LABELS[i]: LABELS[self.permutation[i]] for i in range(3)},
            },
            "part1": [str(x) for x in self.part1],
            "part2": [str(x) for x in self.part2],
            "paths": [[str(x) for x in p] for p in self.paths],
        }
        if self.symbols:
            out["symbols"] = {str(x): s for x, s in sorted(self.symbols.items(), key=lambda kv: kv[0].vertex_index)}
        return out


@dataclass(frozen=True)
class Verification:
    ok: bool
    diagnostic: str = "ok"

    def __bool__(self):
        return self.ok


def _is_edge(g: CayleyGraph, x: DihedralElement, y: DihedralElement) -> bool:
    return y.vertex_index in g.adjacency[x.vertex_index]


def verify_k33_subdivision(g: CayleyGraph, w: K33Witness) -> Verification:
    """Check a witness against the actual edges of ``g``.

    The diagnostic names the first violated condition.
    """
    n = g.n
    part1, part2 = list(w.part1), list(w.part2)
    branch = part1 + part2
    if len(part1) != 3 or len(part2) != 3:
        return Verification(False, "branch sets must have 3 vertices each")
    if any(x.modulus != n for x in branch):
        return Verification(False, "branch vertex not in the graph")
    if len(set(branch)) != 6:
        return Verification(False, "branch sets not disjoint")
    if len(w.paths) != 9:
        return Verification(False, f"expected 9 paths, got {len(w.paths)}")

    want = {(u, v) for u in part1 for v in part2}
    seen_pairs = set()
    internal_owner = {}
    degree = {}
    used_edges = set()
    for k, path in enumerate(w.paths):
        if len(path) < 2:
            return Verification(False, f"path {k} has fewer than two vertices")
        if any(x.modulus != n for x in path):
            return Verification(False, f"path {k} leaves the graph")
        ends = (path[0], path[-1]) if path[0] in w.part1 else (path[-1], path[0])
        if ends not in want:
            return Verification(False, f"path {k} does not join a part1 vertex to a part2 vertex")
        if ends in seen_pairs:
            return Verification(False, f"pair {ends[0]}-{ends[1]} joined twice")
        seen_pairs.add(ends)
        if len(set(path)) != len(path):
            return Verification(False, f"path {k} repeats a vertex")
        for x in path[1:-1]:
            if x in branch:
                return Verification(False, f"path {k} passes through branch vertex {x}")
            if x in internal_owner:
                return Verification(False, "paths not internally disjoint")
            internal_owner[x] = k
        for x, y in zip(path, path[1:]):
            if not _is_edge(g, x, y):
                return Verification(False, f"path {k} uses non-edge {x}-{y}")
            e = frozenset((x, y))
            if e in used_edges:
                return Verification(False, f"edge {x}-{y} used twice")
            used_edges.add(e)
            degree[x] = degree.get(x, 0) + 1
            degree[y] = degree.get(y, 0) + 1
    if seen_pairs != want:
        return Verification(False, "some branch pair is not joined")
    for x in branch:
        if degree.get(x, 0) != 3:
            return Verification(False, f"branch vertex {x} has witness degree {degree.get(x, 0)}")
    for x in internal_owner:
        if degree[x] != 2:
            return Verification(False, f"internal vertex {x} has witness degree {degree[x]}")
    return Verification(True)


class _Cycle:
    """The {a', b'} cycle of G(t) in normalized labels."""

    def __init__(self, t: TriangleTriple, perm: Permutation):
        gens = generators(t)
        self.a, self.b, self.c = (gens[LABELS[perm[i]]] for i in range(3))
        if element_order(self.b * self.a) != t.n:
            raise ConsistencyError(f"normalized generators of {t} do not span one cycle")
        n = t.n
        self.n = n
        x = DihedralElement.identity(n)
        self.elements = []
        for k in range(n):
            self.elements.append(x)
            x = self.a * x
            self.elements.append(x)
            x = self.b * x
        self.position = {x: i for i, x in enumerate(self.elements)}

    def ba(self, k: int) -> DihedralElement:
        return self.elements[2 * (k % self.n)]

    def aba(self, k: int) -> DihedralElement:
        return self.elements[2 * (k % self.n) + 1]

    def symbol(self, x: DihedralElement) -> str:
        i = self.position[x]
        k = i // 2
        if i % 2 == 0:
            return "e" if k == 0 else "ba" if k == 1 else f"(ba)^{k}"
        return "a" if k == 0 else "aba" if k == 1 else f"a(ba)^{k}"

    def walk(self, start: DihedralElement, first, second, stop: DihedralElement) -> list[DihedralElement]:
        """Apply ``first``, ``second`` alternately from ``start`` until ``stop``."""
        out = [start]
        steps = (first, second)
        for i in range(2 * self.n):
            out.append(steps[i % 2] * out[-1])
            if out[-1] == stop:
                return out
        raise ConsistencyError(f"walk from {start} never reached {stop}")


def isosceles_odd_witness(t: TriangleTriple) -> K33Witness:
    """K3,3 subdivision in G(t) for an isosceles triangle with n odd.

    Branch sets {e, ba, (ba)^2} and {a, aba, a(ba)^2}; seven pairs are
    adjacent, and the last two are joined by walking the cycle with
    alternating b' and c' steps. For n = 3 every path is a single edge and
    the witness is G(1,1,1) itself.
    """
    perm = isosceles_permutation(t)
    if perm is None:
        raise PreconditionError(f"{t} is not isosceles")
    if t.n % 2 == 0:
        raise PreconditionError(f"{t} has even n = {t.n}; the graph is planar")
    cyc = _Cycle(t, perm)
    a, b, c = cyc.a, cyc.b, cyc.c
    if c != a * b * a:
        raise ConsistencyError(f"c' != a'b'a' after normalizing {t}")
    e, ba, ba2 = cyc.ba(0), cyc.ba(1), cyc.ba(2)
    x_a, x_aba, x_aba2 = cyc.aba(0), cyc.aba(1), cyc.aba(2)
    long1 = cyc.walk(x_a, c, b, ba2)
    long2 = cyc.walk(e, b, c, x_aba2)
    routes = {
        (e, x_a): [e, x_a],
        (e, x_aba): [e, x_aba],
        (e, x_aba2): long2,
        (ba, x_a): [ba, x_a],
        (ba, x_aba): [ba, x_aba],
        (ba, x_aba2): [ba, x_aba2],
        (ba2, x_a): list(reversed(long1)),
        (ba2, x_aba): [ba2, x_aba],
        (ba2, x_aba2): [ba2, x_aba2],
    }
    part1, part2 = (e, ba, ba2), (x_a, x_aba, x_aba2)
    paths = tuple(tuple(routes[(u, w)]) for u in part1 for w in part2)
    used = {x for p in paths for x in p}
    return K33Witness(t, part1, part2, paths, perm, {x: cyc.symbol(x) for x in used})


def _free_distances(adj: Sequence[Sequence[int]], target: int, blocked: set[int]) -> dict[int, int]:
    dist = {target: 0}
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist and w not in blocked:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


class _Linker:
    """Backtracking search for internally disjoint paths joining given pairs."""

    def __init__(self, adj: Sequence[Sequence[int]], budget: int):
        self.adj = adj
        self.budget = budget
        self.steps = 0

    def _tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise ResourceError(f"disjoint-path search exceeded budget {self.budget}")

    def link(self, pairs: list[tuple[int, int]], branch: set[int]) -> Optional[list[list[int]]]:
        return self._link(pairs, 0, set(branch), set(), [])

    def _link(self, pairs, k, branch, used, done):
        if k == len(pairs):
            return list(done)
        u, w = pairs[k]
        blocked = (branch | used) - {w}
        dist = _free_distances(self.adj, w, blocked - {u})
        if u not in dist:
            return None
        for path in self._paths(u, w, blocked, dist):
            inner = set(path[1:-1])
            done.append(path)
            found = self._link(pairs, k + 1, branch, used | inner, done)
            if found is not None:
                return found
            done.pop()
        return None

    def _paths(self, u, w, blocked, dist):
        """Simple u-w paths avoiding ``blocked``, nearer neighbours first."""
        path = [u]
        on_path = {u}

        def candidates(v):
            return iter(sorted(
                (x for x in self.adj[v] if x in dist and x not in on_path and (x == w or x not in blocked)),
                key=lambda x: (dist[x], x),
            ))

        stack = [candidates(u)]
        while stack:
            self._tick()
            x = next(stack[-1], None)
            if x is None:
                stack.pop()
                on_path.discard(path.pop())
            elif x == w:
                yield path + [w]
            else:
                path.append(x)
                on_path.add(x)
                stack.append(candidates(x))


def _witness_from_search(
    g: CayleyGraph,
    part1: Sequence[int],
    part2: Sequence[int],
    budget: int,
    permutation: Permutation = (0, 1, 2),
    symbols: Optional[dict] = None,
) -> Optional[K33Witness]:
    adj = [g.neighbors(v) for v in range(g.num_vertices)]
    pairs = [(u, w) for u in part1 for w in part2]
    # adjacent pairs first: they are forced whenever the edge is available
    order = sorted(range(9), key=lambda i: (pairs[i][1] not in adj[pairs[i][0]], i))
    linked = _Linker(adj, budget).link([pairs[i] for i in order], set(part1) | set(part2))
    if linked is None:
        return None
    by_pair = dict(zip(order, linked))
    V = g.vertices
    paths = tuple(tuple(V[x] for x in by_pair[i]) for i in range(9))
    return K33Witness(
        g.triple,
        tuple(V[x] for x in part1),
        tuple(V[x] for x in part2),
        paths,
        permutation,
        symbols or {},
    )


def right_triangle_witness(
    t: TriangleTriple, g: Optional[CayleyGraph] = None, budget: int = DEFAULT_SEARCH_BUDGET
) -> K33Witness:
    """K3,3 subdivision in G(t) for a right triangle with n > 4.

    Branch sets {e, (ba)^2, (ba)^(n/2+1)} and {aba, a(ba)^(n/2), a(ba)^(n/2+2)}
    in labels normalized so that c' = a'(b'a')^(n/2); the nine paths come from
    a deterministic disjoint-path search.
    """
    from .cayley import build_cayley

    if not t.right:
        raise PreconditionError(f"{t} is not a right triangle")
    if t.n == 4:
        raise PreconditionError(
            f"{t} with n = 4 is the isosceles triangle T(2,1,1), whose graph is planar; "
            "use the isosceles route"
        )
    perm = right_permutation(t)
    cyc = _Cycle(t, perm)
    h = t.n // 2
    if cyc.c != cyc.aba(h):
        raise ConsistencyError(f"c' != a'(b'a')^(n/2) after normalizing {t}")
    g = g or build_cayley(t)
    part1 = [cyc.ba(0), cyc.ba(2), cyc.ba(h + 1)]
    part2 = [cyc.aba(1), cyc.aba(h), cyc.aba(h + 2)]
    w = _witness_from_search(
        g,
        [x.vertex_index for x in part1],
        [x.vertex_index for x in part2],
        budget,
        perm,
    )
    if w is None:
        raise ConsistencyError(f"no disjoint paths for the right-triangle branch sets of {t}")
    used = {x for p in w.paths for x in p}
    return K33Witness(w.triple, w.part1, w.part2, w.paths, perm, {x: cyc.symbol(x) for x in used})


def generic_k33_search(g: CayleyGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> Optional[K33Witness]:
    """Brute-force K3,3 subdivision search, independent of the constructions.

    Branch 6-sets are tried in lexicographic order, the part holding the
    smallest vertex listed first. In a cubic graph every edge at a branch
    vertex is used, so each part must be an independent set. Returns None
    when no subdivision exists.
    """
    nv = g.num_vertices
    if nv > MAX_GENERIC_VERTICES:
        raise PreconditionError(f"generic search is limited to {MAX_GENERIC_VERTICES} vertices, graph has {nv}")
    adj = [set(g.neighbors(v)) for v in range(nv)]
    tried = 0
    for six in combinations(range(nv), 6):
        first, rest = six[0], six[1:]
        for pair in combinations(rest, 2):
            part1 = (first,) + pair
            part2 = tuple(x for x in rest if x not in pair)
            if any(y in adj[x] for x, y in combinations(part1, 2)):
                continue
            if any(y in adj[x] for x, y in combinations(part2, 2)):
                continue
            tried += 1
            if tried > budget:
                raise ResourceError(f"generic K3,3 search exceeded budget {budget}")
            w = _witness_from_search(g, part1, part2, budget)
            if w is not None:
                return w
    return None


def isosceles_even_embedding(t: TriangleTriple) -> RotationSystem:
    """Planar rotation system for an isosceles triangle with n even.

    The {a', b'} cycle is drawn as a circle; the c' edge from (ba)^k to
    a(ba)^(k+1) goes inside for k even and outside for k odd. Reading
    neighbours counter-clockwise gives (next, c', previous) at a vertex whose
    c' edge is inside and (next, previous, c') otherwise.
    """
    from .cayley import build_cayley

    perm = isosceles_permutation(t)
    if perm is None:
        raise PreconditionError(f"{t} is not isosceles")
    if t.n % 2:
        raise PreconditionError(f"{t} has odd n = {t.n}; the graph is not planar")
    g = build_cayley(t)
    cyc = _Cycle(t, perm)
    L = len(cyc.elements)
    orders = {}
    for i, x in enumerate(cyc.elements):
        nxt = cyc.elements[(i + 1) % L].vertex_index
        prv = cyc.elements[(i - 1) % L].vertex_index
        across = (cyc.c * x).vertex_index
        k = i // 2
        inside = (k if i % 2 == 0 else k - 1) % 2 == 0
        orders[x.vertex_index] = (nxt, across, prv) if inside else (nxt, prv, across)
    return rotation_from_neighbor_orders(g, orders)


def cycle_positions(t: TriangleTriple, perm: Permutation) -> list[DihedralElement]:
    """Elements along the {a', b'} cycle in normalized labels ``perm``."""
    return list(_Cycle(t, perm).elements)


def normalized_word_element(word: str, t: TriangleTriple, perm: Permutation) -> DihedralElement:
    from .dihedral import evaluate_word

    return evaluate_word(translate_word(word, perm), t)

"""The Cayley graph G(p1,p2,p3) of D_n with respect to the three side reflections."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

import numpy as np

from .dihedral import (
    LABELS,
    DihedralElement,
    TriangleTriple,
    all_elements,
    evaluate_word,
    generators,
    isosceles_permutation,
    translate_word,
)
from .errors import ConsistencyError, ResourceError

MAX_WORD_LENGTH = 16
DEFAULT_WORD_BUDGET = 10**6


@dataclass(frozen=True)
class CayleyGraph:
    """Undirected, 3-regular, edge-labelled Cayley graph.

    Vertex ``i`` is ``vertices[i]``: rotations Rot(0..n-1) first, then
    reflections Ref(0..n-1). ``adjacency[i, j]`` is the neighbour of vertex
    ``i`` along label ``LABELS[j]``, i.e. the vertex of g * vertices[i].
    """

    triple: TriangleTriple
    vertices: tuple[DihedralElement, ...]
    adjacency: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.triple.n

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return 3 * self.num_vertices // 2

    def neighbor(self, v: int, label: str) -> int:
        return int(self.adjacency[v, LABELS.index(label)])

    def index_of(self, x: DihedralElement) -> int:
        return x.vertex_index

    def edges(self) -> Iterator[tuple[int, int, str]]:
        """Each undirected edge once, as (lower index, higher index, label).

        Ordered by lower endpoint, then label; this order is stable and is what
        the DOT export relies on.
        """
        for v in range(self.num_vertices):
            for j, label in enumerate(LABELS):
                w = int(self.adjacency[v, j])
                if v < w:
                    yield v, w, label

    def neighbors(self, v: int) -> list[int]:
        return [int(w) for w in self.adjacency[v]]


@dataclass(frozen=True)
class Circuit:
    """Closed walk from ``start`` spelled by ``word`` (labels of the edges taken)."""

    start: DihedralElement
    word: str

    def __post_init__(self):
        w = self.word
        if any(w[i] == w[i + 1] for i in range(len(w) - 1)):
            raise ValueError(f"circuit word {w!r} backtracks")

    def is_closed(self, t: TriangleTriple) -> bool:
        return evaluate_word(self.word, t) == DihedralElement.identity(t.n)

    def vertices(self, t: TriangleTriple) -> list[DihedralElement]:
        """Vertices visited, starting at ``start``, excluding the final return."""
        gens = generators(t)
        out = [self.start]
        for letter in self.word[:-1]:
            out.append(gens[letter] * out[-1])
        return out


def build_cayley(t: TriangleTriple) -> CayleyGraph:
    n = t.n
    vertices = tuple(all_elements(n))
    gens = generators(t)
    adjacency = np.empty((2 * n, 3), dtype=np.int64)
    for j, label in enumerate(LABELS):
        g = gens[label]
        # left multiplication by a reflection, written out on indices
        adjacency[:n, j] = n + (g.index - np.arange(n)) % n
        adjacency[n:, j] = (g.index - np.arange(n)) % n
    return CayleyGraph(t, vertices, adjacency)


def is_bipartite_by_kind(g: CayleyGraph) -> bool:
    """Every edge joins a rotation to a reflection."""
    kinds = np.array([x.is_reflection for x in g.vertices])
    return bool(np.all(kinds[:, None] != kinds[g.adjacency]))


def is_connected(g: CayleyGraph) -> bool:
    seen = np.zeros(g.num_vertices, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                queue.append(int(w))
    return bool(seen.all())


def girth(g: CayleyGraph) -> int:
    """Length of a shortest cycle, by breadth-first search from every vertex.

    Once a cycle of length L is known, searches from later roots stop at depth
    L // 2, which keeps each search to a small ball in a cubic graph.
    """
    best = None
    adj = g.adjacency
    for root in range(g.num_vertices):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        limit = None if best is None else best // 2
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if limit is not None and dv >= limit:
                break
            for w in adj[v]:
                w = int(w)
                if w == parent[v]:
                    continue
                if w in dist:
                    length = dv + dist[w] + 1
                    if best is None or length < best:
                        best = length
                        limit = best // 2
                else:
                    dist[w] = dv + 1
                    parent[w] = v
                    queue.append(w)
        if best == 4:
            # a simple 3-regular bipartite graph has no shorter cycle
            break
    if best is None:
        raise ConsistencyError("Cayley graph has no cycle")
    return best


def has_length4_circuit(t: TriangleTriple) -> tuple[bool, Optional[str]]:
    """Whether G(t) has a 4-cycle, with a witness word in the original labels.

    Isosceles triangles get an ``xyxz`` word with x the side opposite the odd
    angle out; right triangles get ``xyxy`` with x, y the legs.
    """
    perm = isosceles_permutation(t)
    if perm is not None:
        word = translate_word("abac", perm)
    elif t.right:
        i = t.ps.index(t.n // 2)
        legs = [LABELS[j] for j in range(3) if j != i]
        word = (legs[0] + legs[1]) * 2
    else:
        return False, None
    if evaluate_word(word, t) != DihedralElement.identity(t.n):
        raise ConsistencyError(f"length-4 witness {word} is not closed in {t}")
    return True, word


def _reduced_words(length: int) -> Iterator[str]:
    """Words with no two equal adjacent letters, including across the wrap."""
    if length == 0:
        return
    for first in LABELS:
        for rest in product((1, 2), repeat=length - 1):
            letters = [first]
            for step in rest:
                letters.append(LABELS[(LABELS.index(letters[-1]) + step) % 3])
            if length == 1 or letters[0] != letters[-1]:
                yield "".join(letters)


def canonical_circuit_word(word: str) -> str:
    """Smallest representative under cyclic rotation and reversal."""
    candidates = []
    for w in (word, word[::-1]):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates)


def enumerate_identity_words(
    t: TriangleTriple, max_len: int, budget: int = DEFAULT_WORD_BUDGET
) -> list[str]:
    """All closed circuit words up to ``max_len``, one per rotation/reversal class.

    Returned sorted by (length, word).
    """
    if max_len > MAX_WORD_LENGTH:
        raise ResourceError(f"max_len={max_len} exceeds the limit {MAX_WORD_LENGTH}")
    total = sum(3 * 2 ** (k - 1) for k in range(1, max_len + 1))
    if total > budget:
        raise ResourceError(f"enumerating {total} words exceeds budget {budget}")
    identity = DihedralElement.identity(t.n)
    gens = generators(t)
    found = set()
    for length in range(2, max_len + 1, 2):
        for word in _reduced_words(length):
            x = identity
            for letter in word:
                x = gens[letter] * x
            if x == identity:
                found.add(canonical_circuit_word(word))
    return sorted(found, key=lambda w: (len(w), w))

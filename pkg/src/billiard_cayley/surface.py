"""Combinatorial billiard surface X(p1,p2,p3).

The surface is glued from 2n copies of the triangle, one per group element
delta. Side e of copy delta is glued to side e of copy rho_e * delta, where
rho_e is the reflection named by e. Corner i of a copy sits opposite side i,
so the two sides meeting there carry the other two labels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .cayley import CayleyGraph, build_cayley
from .dihedral import LABELS, DihedralElement, TriangleTriple, all_elements, evaluate_word, generators
from .errors import ConsistencyError

Side = tuple[int, str]
Corner = tuple[int, int]


@dataclass(frozen=True)
class SurfaceComplex:
    """Faces are indexed like Cayley graph vertices; corners are (face, type).

    ``gluing`` maps each side (face, label) to the side it is glued to.
    ``corner_classes`` lists the vertices of the surface, each as a sorted
    tuple of corners; corner type i (0, 1, 2) has angle p_{i+1} * pi / n.
    """

    triple: TriangleTriple
    faces: tuple[DihedralElement, ...]
    gluing: dict
    corner_classes: tuple[tuple[Corner, ...], ...]

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def E(self) -> int:
        return len(self.gluing) // 2

    @property
    def V(self) -> int:
        return len(self.corner_classes)

    @property
    def euler_characteristic(self) -> int:
        return self.V - self.E + self.F

    def to_json(self) -> dict:
        pairs = sorted(
            {tuple(sorted((s, o))) for s, o in self.gluing.items()},
        )
        return {
            "triple": list(self.triple.ps),
            "n": self.triple.n,
            "faces": [str(x) for x in self.faces],
            "gluing": [
                {"face": str(self.faces[f1]), "other": str(self.faces[f2]), "side": lab}
                for (f1, lab), (f2, _) in pairs
            ],
            "corner_classes": [
                {"type": cls[0][1] + 1, "corners": [str(self.faces[f]) for f, _ in cls]}
                for cls in self.corner_classes
            ],
            "counts": {"F": self.F, "E": self.E, "V": self.V, "chi": self.euler_characteristic},
        }


def _glue(t: TriangleTriple) -> dict:
    n = t.n
    gens = generators(t)
    faces = all_elements(n)
    gluing = {}
    for f, delta in enumerate(faces):
        for label in LABELS:
            gluing[(f, label)] = ((gens[label] * delta).vertex_index, label)
    return gluing


def _corner_classes(num_faces: int, gluing: dict) -> tuple[tuple[Corner, ...], ...]:
    corners = DisjointSet((f, i) for f in range(num_faces) for i in range(3))
    for (f, label), (f2, _) in gluing.items():
        for i in range(3):
            if LABELS[i] != label:
                corners.merge((f, i), (f2, i))
    classes = [tuple(sorted(s)) for s in corners.subsets()]
    return tuple(sorted(classes, key=lambda c: (c[0][1], c[0][0])))


def build_surface(t: TriangleTriple) -> SurfaceComplex:
    faces = tuple(all_elements(t.n))
    gluing = _glue(t)
    for side, other in gluing.items():
        if other == side or gluing[other] != side:
            raise ConsistencyError(f"gluing is not a fixed-point-free involution at {side}")
    return SurfaceComplex(t, faces, gluing, _corner_classes(len(faces), gluing))


def surface_genus(t: TriangleTriple, s: SurfaceComplex | None = None) -> int:
    """Genus from V - E + F, cross-checked against 1 + (n - sum gcd(p_i, n)) / 2."""
    s = s or build_surface(t)
    chi = s.euler_characteristic
    if chi % 2:
        raise ConsistencyError(f"odd Euler characteristic {chi} for X{t.ps}")
    g = (2 - chi) // 2
    closed = 1 + (t.n - sum(math.gcd(p, t.n) for p in t.ps)) // 2
    if g != closed:
        raise ConsistencyError(f"surface genus {g} from the complex disagrees with closed form {closed}")
    return g


@dataclass(frozen=True)
class ConeType:
    """Cone points coming from one corner of the triangle.

    ``angle`` is the total angle at each such point in units of pi/n.
    """

    corner_type: int
    count: int
    copies: int
    angle: int
    n: int

    @property
    def regular(self) -> bool:
        return self.angle == 2 * self.n


@dataclass(frozen=True)
class ConePointSummary:
    triple: TriangleTriple
    types: tuple[ConeType, ...]

    @property
    def total_points(self) -> int:
        return sum(c.count for c in self.types)

    def to_json(self) -> list[dict]:
        return [
            {
                "corner_type": c.corner_type,
                "count": c.count,
                "copies": c.copies,
                "angle_pi_over_n": c.angle,
                "angle": f"{c.angle}pi/{self.triple.n}",
                "regular": c.regular,
            }
            for c in self.types
        ]


def cone_points(t: TriangleTriple, s: SurfaceComplex | None = None) -> ConePointSummary:
    s = s or build_surface(t)
    n = t.n
    out = []
    for i, p in enumerate(t.ps):
        classes = [c for c in s.corner_classes if c[0][1] == i]
        sizes = {len(c) for c in classes}
        if len(sizes) != 1:
            raise ConsistencyError(f"corner type {i + 1} classes have unequal sizes {sorted(sizes)}")
        copies = sizes.pop()
        if len(classes) != math.gcd(p, n) or copies != 2 * n // math.gcd(p, n):
            raise ConsistencyError(f"corner type {i + 1}: {len(classes)} classes of {copies} corners")
        out.append(ConeType(i + 1, len(classes), copies, copies * p, n))
    return ConePointSummary(t, tuple(out))


@dataclass(frozen=True)
class DualGraph:
    """Faces of the surface as vertices, gluings as labelled edges."""

    triple: TriangleTriple
    adjacency: np.ndarray
    isomorphism: tuple[int, ...]


def dual_graph(s: SurfaceComplex, g: CayleyGraph | None = None) -> DualGraph:
    """Dual of the triangulation, with a checked labelled isomorphism onto G(t).

    Face delta goes to vertex delta; every labelled edge is compared.
    """
    t = s.triple
    g = g or build_cayley(t)
    nf = s.F
    adj = np.full((nf, 3), -1, dtype=np.int64)
    for (f, label), (f2, label2) in s.gluing.items():
        if label2 != label:
            raise ConsistencyError(f"side {label} of face {s.faces[f]} glued to side {label2}")
        adj[f, LABELS.index(label)] = f2
    iso = tuple(s.faces[f].vertex_index for f in range(nf))
    if sorted(iso) != list(range(g.num_vertices)):
        raise ConsistencyError("face-to-vertex map is not a bijection")
    for f in range(nf):
        for j, label in enumerate(LABELS):
            if adj[f, j] < 0 or iso[adj[f, j]] != g.adjacency[iso[f], j]:
                raise ConsistencyError(
                    f"dual edge {s.faces[f]} --{label}-- does not match the Cayley graph"
                )
    return DualGraph(t, adj, iso)


def fagnano_check(t: TriangleTriple) -> bool:
    """Whether the word abcabc closes up in D_n."""
    return evaluate_word("abcabc", t) == DihedralElement.identity(t.n)

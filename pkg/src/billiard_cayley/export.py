"""DOT and JSON artifacts. Output is byte-for-byte deterministic."""

from __future__ import annotations

import json

from . import __version__
from .cayley import CayleyGraph, build_cayley
from .dihedral import TriangleTriple
from .embedding import RotationSystem, predicted_genus, trace_faces, verified_genus
from .errors import ConsistencyError, PreconditionError
from .surface import build_surface
from .witness import (
    MAX_GENERIC_VERTICES,
    generic_k33_search,
    isosceles_even_embedding,
    isosceles_odd_witness,
    right_triangle_witness,
    verify_k33_subdivision,
)

EXPORTS = ("cayley-dot", "surface-json", "witness-json", "faces-json", "embedding-dot")


def _name(g: CayleyGraph, v: int) -> str:
    return str(g.vertices[v])


def _dump(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def cayley_dot(g: CayleyGraph) -> str:
    t = g.triple
    lines = [
        f'graph "G({t.p1},{t.p2},{t.p3})" {{',
        f"  // billiard-cayley {__version__}; n = {t.n}; R = rotations, F = reflections",
    ]
    for v in range(g.num_vertices):
        lines.append(f"  {_name(g, v)};")
    for v, w, label in g.edges():
        lines.append(f'  {_name(g, v)} -- {_name(g, w)} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def embedding_dot(g: CayleyGraph, rho: RotationSystem) -> str:
    """Cayley graph DOT with per-vertex rotations and the traced faces as comments."""
    t = g.triple
    faces = trace_faces(g, rho)
    p, q, r = g.num_vertices, g.num_edges, faces.r
    lines = [
        f'graph "G({t.p1},{t.p2},{t.p3}) embedding" {{',
        f"  // billiard-cayley {__version__}; n = {t.n}",
        f'  label="G({t.p1},{t.p2},{t.p3}): V={p} E={q} faces={r} genus={(2 - (p - q + r)) // 2}";',
    ]
    for v in range(g.num_vertices):
        order = " ".join(_name(g, g.neighbor(v, lab)) for lab in rho.order(v))
        lines.append(f'  {_name(g, v)} [rotation="{order}"];')
    for v, w, label in g.edges():
        lines.append(f'  {_name(g, v)} -- {_name(g, w)} [label="{label}"];')
    for i, face in enumerate(faces.faces):
        walk = " ".join(f"{_name(g, v)}-{lab}" for v, lab in face)
        lines.append(f"  // face {i} (length {len(face)}): {walk}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def faces_json(g: CayleyGraph, rho: RotationSystem, method: str) -> str:
    faces = trace_faces(g, rho)
    return _dump(
        {
            "triple": list(g.triple.ps),
            "n": g.n,
            "method": method,
            "rotation": rho.bitstring(),
            "r": faces.r,
            "vertices": [_name(g, v) for v in range(g.num_vertices)],
            "faces": faces.to_json(),
        }
    )


def witness_for(t: TriangleTriple, g: CayleyGraph):
    if predicted_genus(t) != 1:
        raise PreconditionError(f"{t} has a planar Cayley graph; there is no K3,3 witness")
    if t.isosceles:
        return isosceles_odd_witness(t)
    if t.right:
        return right_triangle_witness(t, g)
    if g.num_vertices <= MAX_GENERIC_VERTICES:
        w = generic_k33_search(g)
        if w is not None:
            return w
    raise PreconditionError(
        f"no K3,3 construction for the scalene non-right triangle {t} with n = {t.n} "
        f"(generic search covers n <= {MAX_GENERIC_VERTICES // 2})"
    )


def export(t: TriangleTriple, what: str, budget: int) -> str:
    if what not in EXPORTS:
        raise PreconditionError(f"unknown export {what!r}; choose from {', '.join(EXPORTS)}")
    g = build_cayley(t)
    if what == "cayley-dot":
        return cayley_dot(g)
    if what == "surface-json":
        return _dump(build_surface(t).to_json())
    if what == "witness-json":
        w = witness_for(t, g)
        check = verify_k33_subdivision(g, w)
        if not check:
            raise ConsistencyError(f"witness failed verification: {check.diagnostic}")
        return _dump(w.to_json())
    if what == "embedding-dot":
        if predicted_genus(t) != 0:
            raise PreconditionError(f"{t} is not isosceles with n even; its Cayley graph is not planar")
        return embedding_dot(g, isosceles_even_embedding(t))
    vg = verified_genus(t, budget)
    return faces_json(g, vg.rotation, vg.method)


__all__ = ["EXPORTS", "cayley_dot", "embedding_dot", "export", "faces_json", "witness_for"]

import dataclasses

import networkx as nx
import pytest

from billiard_cayley.cayley import build_cayley
from billiard_cayley.dihedral import DihedralElement, TriangleTriple, evaluate_word, right_permutation
from billiard_cayley.embedding import predicted_genus, trace_faces
from billiard_cayley.errors import PreconditionError, ResourceError
from billiard_cayley.survey import canonical_triples
from billiard_cayley.witness import (
    cycle_positions,
    generic_k33_search,
    isosceles_even_embedding,
    isosceles_odd_witness,
    normalized_word_element,
    right_triangle_witness,
    verify_k33_subdivision,
)

ODD_ISOSCELES = [t for t in canonical_triples(31) if t.isosceles and t.n % 2 and t.n >= 5]
EVEN_ISOSCELES = [t for t in canonical_triples(30) if t.isosceles and t.n % 2 == 0]
RIGHT = [t for t in canonical_triples(30) if t.right and t.n >= 6]


def to_nx(g):
    G = nx.Graph()
    G.add_edges_from((v, w) for v, w, _ in g.edges())
    return G


class TestIsoscelesOdd:
    @pytest.mark.parametrize("t", ODD_ISOSCELES)
    def test_verifies(self, t):
        w = isosceles_odd_witness(t)
        assert verify_k33_subdivision(build_cayley(t), w)

    def test_trivial_n3(self):
        t = TriangleTriple(1, 1, 1)
        w = isosceles_odd_witness(t)
        assert all(len(p) == 2 for p in w.paths)
        assert verify_k33_subdivision(build_cayley(t), w)

    def test_user_order_is_normalized(self):
        for t in (TriangleTriple(1, 5, 1), TriangleTriple(5, 1, 1), TriangleTriple(3, 5, 3)):
            assert verify_k33_subdivision(build_cayley(t), isosceles_odd_witness(t))

    def test_115_path_pattern(self):
        t = TriangleTriple(1, 1, 5)
        w = isosceles_odd_witness(t)
        assert [w.symbols[x] for x in w.part1] == ["e", "ba", "(ba)^2"]
        assert [w.symbols[x] for x in w.part2] == ["a", "aba", "a(ba)^2"]
        b, c = (normalized_word_element(x, t, w.permutation) for x in "bc")
        long = [p for p in w.paths if len(p) > 2]
        assert len(long) == 2
        for p in long:
            steps = ["b" if b * x == y else "c" if c * x == y else "?" for x, y in zip(p, p[1:])]
            assert "?" not in steps
            assert all(steps[i] != steps[i + 1] for i in range(len(steps) - 1))
        ends = {(w.symbols[p[0]], w.symbols[p[-1]]) for p in long}
        assert ends == {("e", "a(ba)^2"), ("(ba)^2", "a")}

    def test_rejects_even_and_scalene(self):
        with pytest.raises(PreconditionError):
            isosceles_odd_witness(TriangleTriple(3, 3, 4))
        with pytest.raises(PreconditionError):
            isosceles_odd_witness(TriangleTriple(2, 3, 4))

    def test_corrupted_witness(self):
        t = TriangleTriple(1, 1, 5)
        g = build_cayley(t)
        w = isosceles_odd_witness(t)
        paths = list(w.paths)
        i, j = [k for k, p in enumerate(paths) if len(p) > 2]
        # path j borrows the interior of path i
        paths[j] = (paths[j][0],) + paths[i][1:-1] + (paths[j][-1],)
        result = verify_k33_subdivision(g, dataclasses.replace(w, paths=tuple(paths)))
        assert not result
        assert result.diagnostic == "paths not internally disjoint"

    def test_non_edge(self):
        t = TriangleTriple(1, 1, 5)
        w = isosceles_odd_witness(t)
        paths = list(w.paths)
        paths[0] = (paths[0][0], paths[0][0] * paths[0][0], paths[0][-1])
        result = verify_k33_subdivision(build_cayley(t), dataclasses.replace(w, paths=tuple(paths)))
        assert not result


class TestIsoscelesEven:
    @pytest.mark.parametrize("t", EVEN_ISOSCELES)
    def test_face_count(self, t):
        g = build_cayley(t)
        faces = trace_faces(g, isosceles_even_embedding(t))
        assert faces.r == t.n + 2
        assert sum(faces.lengths) == 6 * t.n

    def test_334_has_twelve_faces(self):
        t = TriangleTriple(3, 3, 4)
        assert trace_faces(build_cayley(t), isosceles_even_embedding(t)).r == 12

    def test_rejects_odd(self):
        with pytest.raises(PreconditionError):
            isosceles_even_embedding(TriangleTriple(1, 1, 1))


class TestRightTriangle:
    @pytest.mark.parametrize("t", RIGHT)
    def test_verifies(self, t):
        w = right_triangle_witness(t)
        assert verify_k33_subdivision(build_cayley(t), w)

    @pytest.mark.parametrize("t", RIGHT)
    def test_c_identity(self, t):
        perm = right_permutation(t)
        h = t.n // 2
        c = normalized_word_element("c", t, perm)
        assert c == normalized_word_element("a" + "ba" * h, t, perm)

    def test_n4_redirect(self):
        with pytest.raises(PreconditionError, match="isosceles"):
            right_triangle_witness(TriangleTriple(1, 1, 2))

    def test_larger_n(self):
        for t in (TriangleTriple(1, 50, 49), TriangleTriple(7, 50, 43)):
            assert verify_k33_subdivision(build_cayley(t), right_triangle_witness(t))

    def test_rejects_non_right(self):
        with pytest.raises(PreconditionError):
            right_triangle_witness(TriangleTriple(2, 3, 4))

    def test_search_budget(self):
        with pytest.raises(ResourceError):
            right_triangle_witness(TriangleTriple(1, 14, 13), budget=3)


class TestCycle:
    def test_positions(self):
        t = TriangleTriple(4, 3, 3)
        els = cycle_positions(t, (0, 1, 2))
        assert len(set(els)) == 20
        assert els[0] == DihedralElement.identity(10)
        assert els[2] == normalized_word_element("ba", t, (0, 1, 2)) == evaluate_word("ba", t)


class TestGeneric:
    @pytest.mark.parametrize("t", [t for t in canonical_triples(8)])
    def test_agrees_with_prediction(self, t):
        g = build_cayley(t)
        w = generic_k33_search(g)
        assert (w is not None) == (predicted_genus(t) == 1)
        if w is not None:
            assert verify_k33_subdivision(g, w)

    @pytest.mark.parametrize("t", list(canonical_triples(16)))
    def test_networkx_planarity_oracle(self, t):
        planar, _ = nx.check_planarity(to_nx(build_cayley(t)))
        assert planar == (predicted_genus(t) == 0)

    def test_too_large(self):
        with pytest.raises(PreconditionError):
            generic_k33_search(build_cayley(TriangleTriple(1, 2, 10)))

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from billiard_cayley.dihedral import (
    DihedralElement,
    TriangleTriple,
    all_elements,
    closure,
    compose,
    element_order,
    evaluate_word,
    generator_element,
    generators,
    inverse,
    isosceles_permutation,
    pair_generates,
    right_permutation,
    translate_word,
)
from billiard_cayley.errors import InvalidOperandError, InvalidTripleError, PreconditionError
from billiard_cayley.survey import canonical_triples

Rot = DihedralElement.rotation
Ref = DihedralElement.reflection


def triples_upto(max_n):
    return list(canonical_triples(max_n))


@st.composite
def elements(draw, n):
    kind = draw(st.sampled_from(["rotation", "reflection"]))
    return DihedralElement(kind, draw(st.integers(0, n - 1)), n)


@st.composite
def element_triples(draw):
    n = draw(st.integers(1, 50))
    return n, draw(elements(n)), draw(elements(n)), draw(elements(n))


def _brute_order(x):
    identity = DihedralElement.identity(x.modulus)
    y, k = x, 1
    while y != identity:
        y, k = compose(y, x), k + 1
    return k


class TestTriangleTriple:
    def test_n_and_predicates(self):
        t = TriangleTriple(3, 3, 4)
        assert t.n == 10 and t.isosceles and not t.right
        assert TriangleTriple(1, 2, 3).right
        assert not TriangleTriple(2, 3, 4).isosceles

    @pytest.mark.parametrize("ps, rule", [((2, 4, 6), "gcd"), ((0, 1, 2), ">= 1"), ((-1, 2, 2), ">= 1")])
    def test_rejects_invalid(self, ps, rule):
        with pytest.raises(InvalidTripleError, match=rule):
            TriangleTriple(*ps)

    def test_rejects_huge_modulus(self):
        with pytest.raises(InvalidTripleError, match="<="):
            TriangleTriple(1, 1, 10**6)

    def test_order_is_preserved(self):
        assert TriangleTriple(4, 3, 3).ps == (4, 3, 3)


class TestCompose:
    def test_reflection_involution(self):
        assert compose(Ref(0, 5), Ref(0, 5)) == Rot(0, 5)

    def test_ab_is_double_third_angle(self):
        # T(3,3,4): Ref(0) Ref(6) = Rot(4)
        assert compose(Ref(0, 10), Ref(6, 10)) == Rot(4, 10)

    def test_rotation_addition(self):
        assert compose(Rot(3, 7), Rot(5, 7)) == Rot(1, 7)

    def test_modulus_mismatch(self):
        with pytest.raises(InvalidOperandError):
            compose(Rot(1, 5), Rot(1, 6))

    @pytest.mark.parametrize(
        "x_kind, y_kind, expected",
        [
            ("rotation", "rotation", "rotation"),
            ("rotation", "reflection", "reflection"),
            ("reflection", "rotation", "reflection"),
            ("reflection", "reflection", "rotation"),
        ],
    )
    def test_closure_table(self, x_kind, y_kind, expected):
        for n in (3, 7, 12):
            for i in range(n):
                for j in range(n):
                    assert compose(DihedralElement(x_kind, i, n), DihedralElement(y_kind, j, n)).kind == expected

    @settings(max_examples=300)
    @given(element_triples())
    def test_group_axioms(self, data):
        n, x, y, z = data
        e = DihedralElement.identity(n)
        assert compose(compose(x, y), z) == compose(x, compose(y, z))
        assert compose(e, x) == x == compose(x, e)
        assert compose(x, inverse(x)) == e == compose(inverse(x), x)


class TestInverse:
    def test_examples(self):
        assert inverse(Ref(3, 7)) == Ref(3, 7)
        assert inverse(Rot(0, 7)) == Rot(0, 7)
        assert inverse(Rot(4, 10)) == Rot(6, 10)


class TestGenerators:
    def test_a_is_base_reflection(self):
        for t in triples_upto(9):
            assert generator_element("a", t) == Ref(0, t.n)

    def test_b_and_c_for_334(self):
        t = TriangleTriple(3, 3, 4)
        # solve Ref(0) Ref(k) = Rot(p3), resp. Rot(-p2), by brute force over k
        b_k = [k for k in range(10) if compose(Ref(0, 10), Ref(k, 10)) == Rot(4, 10)]
        c_k = [k for k in range(10) if compose(Ref(0, 10), Ref(k, 10)) == Rot(-3, 10)]
        assert b_k == [6] and c_k == [3]
        assert generator_element("b", t) == Ref(6, 10)
        assert generator_element("c", t) == Ref(3, 10)

    @pytest.mark.parametrize("t", triples_upto(50)[::7])
    def test_ab_ac_aba(self, t):
        a, b, c = (generators(t)[x] for x in "abc")
        n = t.n
        assert compose(a, b) == Rot(t.p3, n)
        assert compose(a, c) == Rot(n - t.p2, n)
        assert compose(compose(a, b), a) == Ref(t.p3, n)

    def test_unknown_label(self):
        with pytest.raises(ValueError):
            generator_element("d", TriangleTriple(1, 1, 1))


class TestWords:
    def test_empty_word(self):
        assert evaluate_word("", TriangleTriple(1, 2, 4)) == Rot(0, 7)

    @pytest.mark.parametrize("t", triples_upto(20))
    def test_abcabc_closes(self, t):
        assert evaluate_word("abcabc", t) == DihedralElement.identity(t.n)

    def test_abab_right(self):
        assert evaluate_word("abab", TriangleTriple(1, 1, 2)) == Rot(0, 4)

    def test_ab_334(self):
        assert evaluate_word("ab", TriangleTriple(3, 3, 4)) == Rot(4, 10)


class TestOrder:
    def test_examples(self):
        assert element_order(Rot(0, 5)) == 1
        assert element_order(Ref(5, 7)) == 2
        assert element_order(Rot(3, 10)) == _brute_order(Rot(3, 10)) == 10

    @given(st.integers(1, 60).flatmap(lambda n: elements(n)))
    def test_matches_brute_force(self, x):
        assert element_order(x) == _brute_order(x)

    def test_ab_order_law(self):
        for t in triples_upto(50):
            ab = evaluate_word("ab", t)
            assert element_order(ab) == t.n // math.gcd(t.n, t.p3)


class TestClosure:
    def test_full_group_from_three_generators(self):
        for t in triples_upto(50):
            g = closure([generators(t)[x] for x in "abc"])
            assert len(g) == 2 * t.n
            assert g == set(all_elements(t.n))

    def test_pair_generates_examples(self):
        # with the equal angles in positions 2 and 3, ab = Rot(3) has order 10
        assert pair_generates("a", "b", TriangleTriple(4, 3, 3))
        # as entered, ab = Rot(4) has order 5 and the spanning pair is b, c
        assert not pair_generates("a", "b", TriangleTriple(3, 3, 4))
        assert pair_generates("b", "c", TriangleTriple(3, 3, 4))
        t = TriangleTriple(5, 9, 16)
        assert not pair_generates("a", "b", t)
        assert len(closure([generator_element("a", t), generator_element("b", t)])) < 60

    def test_pair_generates_matches_closure(self):
        for t in triples_upto(18):
            for l1, l2 in ("ab", "ac", "bc"):
                size = len(closure([generator_element(l1, t), generator_element(l2, t)]))
                assert pair_generates(l1, l2, t) == (size == 2 * t.n)

    def test_identical_labels_rejected(self):
        with pytest.raises(PreconditionError):
            pair_generates("a", "a", TriangleTriple(1, 1, 1))

    def test_5_9_16_no_coprime_angle(self):
        t = TriangleTriple(5, 9, 16)
        assert [math.gcd(p, 30) for p in t.ps] == [5, 3, 2]
        assert not any(pair_generates(x, y, t) for x, y in ("ab", "ac", "bc"))


class TestNormalization:
    def test_isosceles_permutation(self):
        for t in triples_upto(30):
            perm = isosceles_permutation(t)
            if not t.isosceles:
                assert perm is None
                continue
            tn = t.permuted(perm)
            assert tn.p2 == tn.p3
            # the relabelled word abac closes in the original group
            assert evaluate_word(translate_word("abac", perm), t) == DihedralElement.identity(t.n)

    def test_right_permutation(self):
        for t in triples_upto(30):
            perm = right_permutation(t)
            assert (perm is not None) == t.right
            if perm:
                tn = t.permuted(perm)
                assert 2 * tn.p2 == t.n and tn.p3 % 2 == 1

"""Exact arithmetic in the dihedral group D_n.

Rotations are stored as integer multiples of 2*pi/n and reflections (across
lines through the origin) as integer multiples of pi/n, so every product is
computed with integer addition mod n and no floating point is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from typing import Iterable, Literal, Optional, Sequence

from .errors import InvalidOperandError, InvalidTripleError, PreconditionError

LABELS = "abc"
MAX_MODULUS = 10**6

Label = Literal["a", "b", "c"]
Permutation = tuple[int, int, int]

IDENTITY_PERMUTATION: Permutation = (0, 1, 2)


@dataclass(frozen=True, slots=True)
class TriangleTriple:
    """Angles p1*pi/n, p2*pi/n, p3*pi/n of a rational triangle, n = p1+p2+p3.

    Label ``a`` is the side opposite the first angle, ``b`` the second and
    ``c`` the third. Triples are kept in the order given.
    """

    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        ps = (self.p1, self.p2, self.p3)
        for p in ps:
            if isinstance(p, bool) or not isinstance(p, int):
                raise InvalidTripleError(f"angle numerators must be integers, got {p!r}")
        if min(ps) < 1:
            raise InvalidTripleError("p1, p2, p3 must all be >= 1")
        if math.gcd(*ps) != 1:
            raise InvalidTripleError("gcd(p1,p2,p3) must be 1")
        if self.n > MAX_MODULUS:
            raise InvalidTripleError(f"n = p1+p2+p3 must be <= {MAX_MODULUS}, got {self.n}")

    @property
    def n(self) -> int:
        return self.p1 + self.p2 + self.p3

    @property
    def ps(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, self.p3)

    @property
    def isosceles(self) -> bool:
        return self.p1 == self.p2 or self.p2 == self.p3 or self.p1 == self.p3

    @property
    def right(self) -> bool:
        return 2 * max(self.ps) == self.n

    def permuted(self, perm: Permutation) -> TriangleTriple:
        """Triple whose i-th angle is angle ``perm[i]`` of this one."""
        ps = self.ps
        return TriangleTriple(*(ps[j] for j in perm))

    def canonical(self) -> TriangleTriple:
        return TriangleTriple(*sorted(self.ps))

    def __str__(self):
        return f"T({self.p1},{self.p2},{self.p3})"


@dataclass(frozen=True, slots=True)
class DihedralElement:
    """Rot(2*pi*index/n) when ``kind == "rotation"``, Ref(pi*index/n) otherwise."""

    kind: Literal["rotation", "reflection"]
    index: int
    modulus: int

    def __post_init__(self):
        if self.kind not in ("rotation", "reflection"):
            raise ValueError(f"unknown element kind {self.kind!r}")
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "index", self.index % self.modulus)

    @classmethod
    def rotation(cls, k: int, n: int) -> DihedralElement:
        return cls("rotation", k, n)

    @classmethod
    def reflection(cls, k: int, n: int) -> DihedralElement:
        return cls("reflection", k, n)

    @classmethod
    def identity(cls, n: int) -> DihedralElement:
        return cls("rotation", 0, n)

    @property
    def is_reflection(self) -> bool:
        return self.kind == "reflection"

    @property
    def vertex_index(self) -> int:
        """Position in the canonical listing: rotations 0..n-1, then reflections."""
        return self.index + (self.modulus if self.is_reflection else 0)

    def __mul__(self, other: DihedralElement) -> DihedralElement:
        return compose(self, other)

    def __str__(self):
        return f"{'F' if self.is_reflection else 'R'}{self.index}"

    def __repr__(self):
        name = "Ref" if self.is_reflection else "Rot"
        return f"{name}({self.index} mod {self.modulus})"


def compose(x: DihedralElement, y: DihedralElement) -> DihedralElement:
    """Return the product x*y (apply y first, then x)."""
    if x.modulus != y.modulus:
        raise InvalidOperandError(f"cannot compose elements of D_{x.modulus} and D_{y.modulus}")
    n = x.modulus
    if x.is_reflection:
        if y.is_reflection:
            return DihedralElement("rotation", x.index - y.index, n)
        return DihedralElement("reflection", x.index - y.index, n)
    if y.is_reflection:
        return DihedralElement("reflection", y.index + x.index, n)
    return DihedralElement("rotation", x.index + y.index, n)


def inverse(x: DihedralElement) -> DihedralElement:
    if x.is_reflection:
        return x
    return DihedralElement("rotation", -x.index, x.modulus)


def all_elements(n: int) -> list[DihedralElement]:
    """The 2n elements of D_n in canonical vertex order."""
    return [DihedralElement.rotation(k, n) for k in range(n)] + [
        DihedralElement.reflection(k, n) for k in range(n)
    ]


def element_from_vertex_index(i: int, n: int) -> DihedralElement:
    if not 0 <= i < 2 * n:
        raise IndexError(i)
    return DihedralElement.reflection(i - n, n) if i >= n else DihedralElement.rotation(i, n)


def generator_element(label: str, t: TriangleTriple) -> DihedralElement:
    """Reflection attached to the side named ``label``.

    Anchored so that a = Ref(0); then ab = Rot(p3), ac = Rot(-p2) and
    aba = Ref(p3).
    """
    n = t.n
    if label == "a":
        return DihedralElement.reflection(0, n)
    if label == "b":
        return DihedralElement.reflection(n - t.p3, n)
    if label == "c":
        return DihedralElement.reflection(t.p2, n)
    raise ValueError(f"unknown generator label {label!r}")


def generators(t: TriangleTriple) -> dict[str, DihedralElement]:
    return {label: generator_element(label, t) for label in LABELS}


def evaluate_word(word: Iterable[str], t: TriangleTriple) -> DihedralElement:
    """Product of the generators spelled by ``word``, read left to right."""
    gens = generators(t)
    return reduce(compose, (gens[letter] for letter in word), DihedralElement.identity(t.n))


def element_order(x: DihedralElement) -> int:
    if x.is_reflection:
        return 2
    return x.modulus // math.gcd(x.modulus, x.index)


def closure(elements: Sequence[DihedralElement]) -> set[DihedralElement]:
    """Subgroup generated by ``elements`` (breadth-first under left products)."""
    if not elements:
        return set()
    seen = {DihedralElement.identity(elements[0].modulus)}
    frontier = list(seen)
    while frontier:
        new = []
        for x in frontier:
            for g in elements:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return seen


def pair_generates(l1: str, l2: str, t: TriangleTriple) -> bool:
    """Whether the two reflections named by l1, l2 generate all of D_n."""
    if l1 == l2:
        raise PreconditionError("pair_generates needs two distinct labels")
    g1, g2 = generator_element(l1, t), generator_element(l2, t)
    return element_order(compose(g1, g2)) == t.n


def translate_word(word: str, perm: Permutation) -> str:
    """Rewrite a word in normalized labels as a word in the original labels.

    Normalized label i names the side opposite original angle ``perm[i]``.
    """
    return "".join(LABELS[perm[LABELS.index(letter)]] for letter in word)


def isosceles_permutation(t: TriangleTriple) -> Optional[Permutation]:
    """First permutation putting the two equal angles in positions 2 and 3."""
    ps = t.ps
    for perm in permutations(range(3)):
        if ps[perm[1]] == ps[perm[2]]:
            return perm
    return None


def right_permutation(t: TriangleTriple) -> Optional[Permutation]:
    """First permutation with the right angle in position 2 and an odd third angle.

    In that position c = a(ba)^(n/2) holds for the relabelled generators.
    """
    ps = t.ps
    if not t.right:
        return None
    for perm in permutations(range(3)):
        if 2 * ps[perm[1]] == t.n and ps[perm[2]] % 2 == 1:
            return perm
    return None


def coprime_angles(t: TriangleTriple) -> list[int]:
    """Positions (0-based) of the angle numerators coprime to n."""
    return [i for i, p in enumerate(t.ps) if math.gcd(p, t.n) == 1]

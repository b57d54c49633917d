"""Multilinear identities of one binary operation.

An identity of arity n is a rational vector over pairs (tree shape, labeling):
the shape is a full binary tree with n leaves, the labeling assigns the
variable indices 1..n to the leaves left to right.  The associator, the
weak-associativity expression, flexibility, Lie admissibility and the Leibniz
expression all live here, and the symmetric-group algebra acts by relabeling.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .linalg import as_rational
from .symgroup import GroupAlgebraElement, Perm, sigma_basis

# A shape is None for a leaf or a pair (left, right) of shapes.
LEAF = None
Shape = object

LEFT_COMB3 = ((LEAF, LEAF), LEAF)
RIGHT_COMB3 = (LEAF, (LEAF, LEAF))


@lru_cache(maxsize=None)
def shapes(n: int) -> tuple:
    """All full binary tree shapes with n leaves, larger left subtree first
    (so the left comb is always shapes(n)[0])."""
    if n < 1:
        raise ValueError("need at least one leaf")
    if n > 5:
        raise ValueError("arity > 5 not supported")
    if n == 1:
        return (LEAF,)
    out = []
    for left_leaves in range(n - 1, 0, -1):
        for l in shapes(left_leaves):
            for r in shapes(n - left_leaves):
                out.append((l, r))
    return tuple(out)


def leaf_count(shape: Shape) -> int:
    if shape is LEAF:
        return 1
    return leaf_count(shape[0]) + leaf_count(shape[1])


def shape_str(shape: Shape, labels: Iterable[int]) -> str:
    it = iter(labels)

    def rec(s, top=False):
        if s is LEAF:
            return f"x{next(it)}"
        inner = rec(s[0]) + rec(s[1])
        return inner if top else "(" + inner + ")"

    return rec(shape, top=True)


class MultilinearIdentity:
    """Rational combination of (shape, labeling) monomials of one arity."""

    __slots__ = ("arity", "coeffs")

    def __init__(self, arity: int, coeffs: dict | None = None):
        self.arity = arity
        clean: dict[tuple, Fraction] = {}
        for (shape, labels), q in (coeffs or {}).items():
            labels = tuple(labels)
            if leaf_count(shape) != arity or sorted(labels) != list(range(1, arity + 1)):
                raise ValueError(f"bad monomial for arity {arity}: {shape}, {labels}")
            q = as_rational(q)
            if q != 0:
                clean[(shape, labels)] = q
        self.coeffs = clean

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultilinearIdentity)
            and self.arity == other.arity
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def term_count(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "MultilinearIdentity") -> "MultilinearIdentity":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        acc = dict(self.coeffs)
        for k, q in other.coeffs.items():
            acc[k] = acc.get(k, Fraction(0)) + q
        return MultilinearIdentity(self.arity, acc)

    def __sub__(self, other: "MultilinearIdentity") -> "MultilinearIdentity":
        return self + other.scale(-1)

    def scale(self, q) -> "MultilinearIdentity":
        q = as_rational(q)
        return MultilinearIdentity(self.arity, {k: q * c for k, c in self.coeffs.items()})

    def coefficient(self, shape: Shape, labels: Iterable[int]) -> Fraction:
        return self.coeffs.get((shape, tuple(labels)), Fraction(0))

    def monomial_basis(self) -> list[tuple]:
        """Canonical (shape, labels) order of the full arity-n component:
        shapes in canonical order, labelings in the group-basis order."""
        return [
            (shape, p.images)
            for shape in shapes(self.arity)
            for p in sigma_basis(self.arity)
        ]

    def coordinates(self) -> tuple[Fraction, ...]:
        return tuple(self.coeffs.get(k, Fraction(0)) for k in self.monomial_basis())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for key in self.monomial_basis():
            if key not in self.coeffs:
                continue
            q = self.coeffs[key]
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            mono = shape_str(*key)
            parts.append((sign, mono if mag == 1 else f"{mag}*{mono}"))
        sign, term = parts[0]
        out = ("-" if sign == "-" else "") + term
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self) -> str:
        return f"MultilinearIdentity({self})"


def monomial(shape: Shape, labels: Iterable[int], coeff=1) -> MultilinearIdentity:
    labels = tuple(labels)
    return MultilinearIdentity(len(labels), {(shape, labels): as_rational(coeff)})


def zero_identity(arity: int) -> MultilinearIdentity:
    return MultilinearIdentity(arity, {})


def apply_perm(e: MultilinearIdentity, s: Perm) -> MultilinearIdentity:
    """Relabel variables through s (label j becomes s(j)); this realizes
    precomposition of the evaluated map with the slot permutation of s."""
    if e.arity != s.n:
        raise ValueError("arity mismatch")
    acc: dict[tuple, Fraction] = {}
    for (shape, labels), q in e.coeffs.items():
        key = (shape, tuple(s(l) for l in labels))
        acc[key] = acc.get(key, Fraction(0)) + q
    return MultilinearIdentity(e.arity, acc)


def apply_group_vector(e: MultilinearIdentity, v: GroupAlgebraElement) -> MultilinearIdentity:
    """Linear extension of apply_perm over a group-algebra element."""
    if e.arity != v.n:
        raise ValueError("arity mismatch")
    out = zero_identity(e.arity)
    for p, q in v.coeffs.items():
        out = out + apply_perm(e, p).scale(q)
    return out


def associator() -> MultilinearIdentity:
    """x1(x2x3) - (x1x2)x3."""
    return monomial(RIGHT_COMB3, (1, 2, 3), 1) + monomial(LEFT_COMB3, (1, 2, 3), -1)


def wa_expression() -> MultilinearIdentity:
    """The weak-associativity expression: the associator symmetrized by
    Id + c - (12).  Algebras annihilating it are weakly associative."""
    from .symgroup import wa_vector

    return apply_group_vector(associator(), wa_vector())


def flexibility_expression() -> MultilinearIdentity:
    """Associator symmetrized by Id + (13); vanishes on flexible algebras."""
    from .symgroup import ID3, T13, ga

    return apply_group_vector(associator(), ga(3, (1, ID3), (1, T13)))


def lie_admissible_expression() -> MultilinearIdentity:
    """Signed S3-symmetrized associator; vanishes iff the commutator
    satisfies the Jacobi identity."""
    from .symgroup import lie_admissible_vector

    return apply_group_vector(associator(), lie_admissible_vector())


def leibniz_expression() -> MultilinearIdentity:
    """Associator symmetrized by the Leibniz vector; its evaluation is the
    Leibniz defect of the polarized product pair."""
    from .symgroup import leibniz_vector

    return apply_group_vector(associator(), leibniz_vector())

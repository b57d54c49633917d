"""Arity-3 and arity-4 components of binary quadratic operads.

The free arity-n component on one binary generator has dimension
Catalan(n-1) * n! (12 at arity 3, 120 at arity 4); its vectors are
`MultilinearIdentity` values.  This module computes relation spans and their
operadic consequences, the quadratic-duality pairing with annihilators, the
dual dimensions in the associative word space, and generating-function
arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .identities import (
    LEAF,
    MultilinearIdentity,
    apply_perm,
    associator,
    monomial,
    shapes,
    wa_expression,
)
from .linalg import Matrix, Vector, in_span, kernel_basis, rank, row_space_basis
from .symgroup import Perm, all_perms, sigma_basis


def free_dim(arity: int) -> int:
    return len(shapes(arity)) * len(sigma_basis(arity))


@dataclass
class RelationSpace:
    """Subspace of the free arity-n component, stored as reduced row basis."""

    arity: int
    basis: list[Vector]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def quotient_dim(self) -> int:
        return free_dim(self.arity) - self.dim

    def contains(self, e: MultilinearIdentity) -> bool:
        if e.arity != self.arity:
            raise ValueError("arity mismatch")
        return in_span(e.coordinates(), self.basis)


def span_of(vectors: list[MultilinearIdentity], arity: int) -> RelationSpace:
    coords = [v.coordinates() for v in vectors]
    if not coords:
        return RelationSpace(arity, [])
    return RelationSpace(arity, row_space_basis(Matrix.from_rows(coords)))


def relation_closure(generator: MultilinearIdentity) -> RelationSpace:
    """Span of all relabelings of a single arity-3 relation vector."""
    return span_of(
        [apply_perm(generator, p) for p in sigma_basis(3)], 3
    )


def wa_relation_space() -> RelationSpace:
    """The relation span of weak associativity inside the 12-dimensional
    arity-3 free component; dimension 4, quotient dimension 8."""
    return relation_closure(wa_expression())


def associativity_relation_space() -> RelationSpace:
    return relation_closure(associator())


def full_free_space(arity: int = 3) -> RelationSpace:
    out = []
    for shape in shapes(arity):
        for p in sigma_basis(arity):
            out.append(monomial(shape, p.images))
    return span_of(out, arity)


# ---------------------------------------------------------------------------
# Operadic consequences at arity 4.
# ---------------------------------------------------------------------------

def _substitute_product(e: MultilinearIdentity, var: int) -> MultilinearIdentity:
    """Replace variable `var` by a product of two fresh slots: the pair gets
    labels (var, 4), other labels are kept.  Result has arity 4."""
    acc: dict = {}
    for (shape, labels), q in e.coeffs.items():
        out_labels: list[int] = []

        def rec(s, it):
            if s is LEAF:
                l = next(it)
                if l == var:
                    out_labels.extend((var, 4))
                    return (LEAF, LEAF)
                out_labels.append(l)
                return LEAF
            return (rec(s[0], it), rec(s[1], it))

        new_shape = rec(shape, iter(labels))
        key = (new_shape, tuple(out_labels))
        acc[key] = acc.get(key, Fraction(0)) + q
    return MultilinearIdentity(4, acc)


def _multiply_slot(e: MultilinearIdentity, side: str) -> MultilinearIdentity:
    """Multiply the whole arity-3 expression by a fresh fourth slot."""
    acc: dict = {}
    for (shape, labels), q in e.coeffs.items():
        if side == "left":
            key = ((LEAF, shape), (4,) + tuple(labels))
        else:
            key = ((shape, LEAF), tuple(labels) + (4,))
        acc[key] = acc.get(key, Fraction(0)) + q
    return MultilinearIdentity(4, acc)


def consequences(r: RelationSpace) -> RelationSpace:
    """Arity-4 span generated by an arity-3 relation space: substitution of a
    product into each slot and outer multiplication on both sides, closed
    under relabeling of the four slots."""
    if r.arity != 3:
        raise ValueError("expected an arity-3 relation space")
    gens3 = [
        MultilinearIdentity(
            3,
            {
                key: q
                for key, q in zip(
                    MultilinearIdentity(3, {}).monomial_basis(), vec
                )
                if q != 0
            },
        )
        for vec in r.basis
    ]
    raw: list[MultilinearIdentity] = []
    for g in gens3:
        for var in (1, 2, 3):
            raw.append(_substitute_product(g, var))
        raw.append(_multiply_slot(g, "left"))
        raw.append(_multiply_slot(g, "right"))
    closed = [apply_perm(v, p) for v in raw for p in all_perms(4)]
    return span_of(closed, 4)


# ---------------------------------------------------------------------------
# Quadratic-duality pairing on the arity-3 free component.
# ---------------------------------------------------------------------------

LEFT3 = ((LEAF, LEAF), LEAF)
RIGHT3 = (LEAF, (LEAF, LEAF))


def dual_pairing(u: MultilinearIdentity, w: MultilinearIdentity) -> Fraction:
    """Diagonal pairing: equal left-comb monomials pair to the sign of their
    labeling, equal right-comb monomials to minus the sign, everything else
    to zero."""
    if u.arity != 3 or w.arity != 3:
        raise ValueError("pairing is defined at arity 3")
    total = Fraction(0)
    for (shape, labels), q in u.coeffs.items():
        q2 = w.coeffs.get((shape, labels))
        if q2 is None:
            continue
        sign = Perm(3, labels).sign()
        if shape == LEFT3:
            total += q * q2 * sign
        else:
            total -= q * q2 * sign
    return total


def pairing_gram_matrix() -> Matrix:
    basis = [
        monomial(shape, p.images) for shape in shapes(3) for p in sigma_basis(3)
    ]
    return Matrix.from_rows(
        [[dual_pairing(u, w) for w in basis] for u in basis]
    )


def annihilator(r: RelationSpace) -> RelationSpace:
    """Orthogonal complement under the pairing; the pairing is nondegenerate
    so dimensions add up to 12."""
    if r.arity != 3:
        raise ValueError("annihilator is defined at arity 3")
    gram = pairing_gram_matrix()
    if not r.basis:
        return full_free_space(3)
    m = Matrix.from_rows(r.basis) @ gram
    return RelationSpace(3, row_space_basis(Matrix.from_rows(kernel_basis(m))))


def wa_dual_relation_space() -> RelationSpace:
    """Annihilator of the weak-associativity relation span (dimension 8)."""
    return annihilator(wa_relation_space())


def wa_operad_dims() -> dict:
    """Arity <= 3 dimension table for the operad and its quadratic dual."""
    r = wa_relation_space()
    rp = annihilator(r)
    return {
        "free(3)": free_dim(3),
        "relation": r.dim,
        "operad(3)": r.quotient_dim(),
        "dual relation": rp.dim,
        "dual(3)": 12 - rp.dim,
    }


# ---------------------------------------------------------------------------
# The arity-4 dual computation in the associative word space.
#
# Algebras over the dual operad are associative and satisfy the cubic
# relation R3(a,b,c) = abc + cba - acb - bca = 0, so the arity-4 component is
# the 24-dimensional word space modulo every placement of R3.
# ---------------------------------------------------------------------------

Word = tuple[int, ...]


def _cat(*parts: Word) -> Word:
    out: tuple[int, ...] = ()
    for p in parts:
        out += p
    return out


def r3_terms(u: Word, v: Word, w: Word) -> dict[Word, int]:
    """R3(u, v, w) = uvw + wvu - uwv - vwu as a word combination."""
    acc: dict[Word, int] = {}
    for word, c in (
        (_cat(u, v, w), 1),
        (_cat(w, v, u), 1),
        (_cat(u, w, v), -1),
        (_cat(v, w, u), -1),
    ):
        acc[word] = acc.get(word, 0) + c
    return {k: v for k, v in acc.items() if v != 0}


def _word_vector(terms: dict[Word, int], letters: int) -> Vector:
    basis = [p.images for p in all_perms(letters)]
    index = {w: i for i, w in enumerate(basis)}
    out = [Fraction(0)] * len(basis)
    for w, c in terms.items():
        out[index[w]] += c
    return tuple(out)


def dual_arity4_generators() -> list[Vector]:
    """Every placement of R3 among four letters: one slot a two-letter word
    (three positions), or an outer letter on either side."""
    gens: list[dict[Word, int]] = []
    letters = (1, 2, 3, 4)
    for assign in itertools.permutations(letters):
        a, b, c, d = assign
        gens.append(r3_terms((a, b), (c,), (d,)))
        gens.append(r3_terms((a,), (b, c), (d,)))
        gens.append(r3_terms((a,), (b,), (c, d)))
    for assign in itertools.permutations(letters):
        a, b, c, d = assign
        gens.append({_cat((a,), w): q for w, q in r3_terms((b,), (c,), (d,)).items()})
        gens.append({_cat(w, (a,)): q for w, q in r3_terms((b,), (c,), (d,)).items()})
    return [_word_vector(g, 4) for g in gens]


@dataclass
class DualArity4:
    relation_matrix: Matrix
    rank: int
    kernel: list[Vector]

    @property
    def dim(self) -> int:
        return len(self.kernel)


def wass_dual_arity4() -> DualArity4:
    """Relation matrix of the arity-4 dual component: rank 18 on the
    24-dimensional word space, kernel of dimension 6."""
    m = Matrix.from_rows(dual_arity4_generators())
    rk = rank(m)
    return DualArity4(relation_matrix=m, rank=rk, kernel=kernel_basis(m))


def wass_dual_arity4_dim() -> int:
    return wass_dual_arity4().dim


def reduced_placement_matrix() -> Matrix:
    """The 24 x 24 matrix of middle placements R3(x, yz, w) (16 rows after
    the syzygy reductions) plus outer products x R3(y,z,w) (8 rows): a square
    system of rank 18."""
    rows: list[dict[Word, int]] = []
    listed = [
        (1, (2, 3), 4), (2, (1, 3), 4), (3, (2, 1), 4), (4, (2, 3), 1),
        (1, (3, 2), 4), (1, (4, 3), 2), (2, (3, 1), 4), (2, (4, 3), 1),
        (3, (1, 2), 4), (3, (2, 4), 1), (4, (1, 3), 2), (4, (2, 1), 3),
        (1, (3, 4), 2), (2, (3, 4), 1), (3, (4, 2), 1), (4, (3, 1), 2),
    ]
    for a, (b, c), d in listed:
        rows.append(r3_terms((a,), (b, c), (d,)))
    for a in (1, 2, 3, 4):
        rest = sorted(set((1, 2, 3, 4)) - {a})
        b, c, d = rest
        rows.append({_cat((a,), w): q for w, q in r3_terms((b,), (c,), (d,)).items()})
        rows.append({_cat((a,), w): q for w, q in r3_terms((c,), (b,), (d,)).items()})
    return Matrix.from_rows([_word_vector(r, 4) for r in rows])


def word_vector_from_group(v) -> Vector:
    """Group-algebra element -> word-space vector via sigma -> x_{sigma(1)}..x_{sigma(n)}."""
    return _word_vector({p.images: q for p, q in v.coeffs.items()}, v.n)


def r3_syzygies() -> dict[str, bool]:
    """The displayed consequences of R3, verified by direct word expansion."""

    def is_zero(terms: dict[Word, int]) -> bool:
        return all(c == 0 for c in terms.values())

    def add(*dicts):
        acc: dict[Word, int] = {}
        for d, s in dicts:
            for w, c in d.items():
                acc[w] = acc.get(w, 0) + s * c
        return acc

    a, b, c, d = (1,), (2,), (3,), (4,)
    checks = {
        "R3(a,b,c) + R3(a,c,b) = 0": add(
            (r3_terms(a, b, c), 1), (r3_terms(a, c, b), 1)
        ),
        "R3(a,b,c) + R3(c,a,b) - R3(b,a,c) = 0": add(
            (r3_terms(a, b, c), 1), (r3_terms(c, a, b), 1), (r3_terms(b, a, c), -1)
        ),
        "R3(a,bc,d) + R3(a,db,c) - R3(a,cd,b) = 0": add(
            (r3_terms(a, _cat(b, c), d), 1),
            (r3_terms(a, _cat(d, b), c), 1),
            (r3_terms(a, _cat(c, d), b), -1),
        ),
        "R3(a,b,c)d - R3(d,bc,a) + R3(d,cb,a) - dR3(a,b,c) = 0": add(
            ({_cat(w, d): q for w, q in r3_terms(a, b, c).items()}, 1),
            (r3_terms(d, _cat(b, c), a), -1),
            (r3_terms(d, _cat(c, b), a), 1),
            ({_cat(d, w): q for w, q in r3_terms(a, b, c).items()}, -1),
        ),
    }
    eight = add(
        (r3_terms((1,), (4, 3), (2,)), 1),
        (r3_terms((1,), (3, 4), (2,)), -1),
        (r3_terms((2,), (3, 4), (1,)), 1),
        (r3_terms((2,), (4, 3), (1,)), -1),
        (r3_terms((3,), (2, 1), (4,)), 1),
        (r3_terms((3,), (1, 2), (4,)), -1),
        (r3_terms((4,), (1, 2), (3,)), 1),
        (r3_terms((4,), (2, 1), (3,)), -1),
    )
    checks["eight-term middle-placement relation = 0"] = eight
    return {name: is_zero(terms) for name, terms in checks.items()}


# ---------------------------------------------------------------------------
# Generating functions.
# ---------------------------------------------------------------------------

def generating_function(dims: list[int], order: int) -> list[Fraction]:
    """Coefficients of x^1..x^order of sum_n (-1)^n dim(n) x^n / n!."""
    if not dims:
        raise ValueError("need at least one dimension")
    out = []
    fact = 1
    for n in range(1, order + 1):
        fact *= n
        d = dims[n - 1] if n - 1 < len(dims) else 0
        out.append(Fraction((-1) ** n * d, fact))
    return out


def compose_series(f: list[Fraction], g: list[Fraction], order: int) -> list[Fraction]:
    """Coefficients of f(g(x)) for power series with zero constant term."""
    # g_pow[k] = coefficients of g(x)^k, truncated
    g = [Fraction(x) for x in g[:order]] + [Fraction(0)] * max(0, order - len(g))
    out = [Fraction(0)] * order
    g_pow = [Fraction(0)] * order
    # start with g^1
    current = list(g)
    for k in range(1, order + 1):
        if k > 1:
            nxt = [Fraction(0)] * order
            for i, a in enumerate(current, start=1):
                if a == 0:
                    continue
                for j, b in enumerate(g, start=1):
                    if i + j <= order and b != 0:
                        nxt[i + j - 1] += a * b
            current = nxt
        coeff = f[k - 1] if k - 1 < len(f) else Fraction(0)
        if coeff != 0:
            for i in range(order):
                out[i] += coeff * current[i]
    return out


def koszul_composition_check(f: list[Fraction], g: list[Fraction], order: int) -> list[Fraction]:
    """Coefficients of f(g(x)) - x through the given order; identically zero
    composition is the numerical shadow of Koszul duality."""
    comp = compose_series(f, g, order)
    comp[0] -= 1
    return comp

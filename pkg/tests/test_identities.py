import pytest

from wassoc.corpus import random_group_element, two_dim_family
from wassoc.finalg import FinAlg, evaluate
from wassoc.identities import (
    LEFT_COMB3,
    RIGHT_COMB3,
    MultilinearIdentity,
    apply_group_vector,
    apply_perm,
    associator,
    flexibility_expression,
    leibniz_expression,
    lie_admissible_expression,
    shape_str,
    shapes,
    wa_expression,
)
from wassoc.symgroup import (
    C3,
    ID3,
    T12,
    T13,
    act,
    all_perms,
    ga,
    wa_vector,
)


def test_shapes_counts_and_order():
    assert len(shapes(2)) == 1
    assert len(shapes(3)) == 2
    assert len(shapes(4)) == 5
    assert len(shapes(5)) == 14
    assert shapes(3)[0] == LEFT_COMB3  # left comb first


def test_associator_coefficients():
    a = associator()
    assert a.arity == 3
    assert a.term_count() == 2
    assert a.coefficient(LEFT_COMB3, (1, 2, 3)) == -1
    assert a.coefficient(RIGHT_COMB3, (1, 2, 3)) == 1
    assert apply_perm(a, ID3) == a


def test_wa_expression_structure():
    wa = wa_expression()
    assert wa.term_count() == 6
    # A(x1,x2,x3) + A(x2,x3,x1) - A(x2,x1,x3), expanded by hand
    expected = (
        associator()
        + apply_perm(associator(), C3)
        - apply_perm(associator(), T12)
    )
    assert wa == expected
    assert wa.coefficient(RIGHT_COMB3, (1, 2, 3)) == 1
    assert wa.coefficient(LEFT_COMB3, (1, 2, 3)) == -1
    assert wa.coefficient(RIGHT_COMB3, (2, 3, 1)) == 1


def test_apply_group_vector_zero_and_linearity():
    from wassoc.symgroup import GroupAlgebraElement

    zero = GroupAlgebraElement(3, {})
    assert apply_group_vector(associator(), zero).is_zero()
    v = ga(3, (2, ID3), (-1, T13))
    lhs = apply_group_vector(associator(), v)
    rhs = apply_perm(associator(), ID3).scale(2) - apply_perm(associator(), T13)
    assert lhs == rhs


def test_apply_consistent_with_act(rng):
    perms = all_perms(3)
    e = associator()
    for _ in range(200):
        v = random_group_element(3, rng, 2)
        s = rng.choice(perms)
        assert apply_perm(apply_group_vector(e, v), s) == apply_group_vector(
            e, act(v, s)
        )


def test_arity_mismatch_rejected():
    from wassoc.symgroup import identity_perm

    with pytest.raises(ValueError):
        apply_group_vector(associator(), ga(4, (1, identity_perm(4))))


def test_leibniz_expression_arity_and_vanishing():
    le = leibniz_expression()
    assert le.arity == 3
    # any commutative associative product with zero bracket kills it
    comm = FinAlg.from_products(2, {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}})
    assert evaluate(comm, le).is_zero()


def test_flexibility_expression_on_flexible_algebra():
    alg = two_dim_family(6)
    assert evaluate(alg, flexibility_expression()).is_zero()
    # Id + (13) symmetrization of the associator
    flex = associator() + apply_perm(associator(), T13)
    assert flexibility_expression() == flex


def test_pretty_printer():
    a = associator()
    assert shape_str(LEFT_COMB3, (1, 2, 3)) == "(x1x2)x3"
    assert shape_str(RIGHT_COMB3, (1, 2, 3)) == "x1(x2x3)"
    assert str(a) == "-(x1x2)x3 + x1(x2x3)"


def test_coordinates_deterministic():
    wa = wa_expression()
    coords = wa.coordinates()
    assert len(coords) == 12
    assert wa.coordinates() == coords
    basis = wa.monomial_basis()
    assert len(basis) == 12
    rebuilt = MultilinearIdentity(
        3, {key: q for key, q in zip(basis, coords) if q != 0}
    )
    assert rebuilt == wa


def test_wa_and_lie_admissible_cross_relation():
    # W + w = 2 * (orbit element), at the level of identity vectors
    from wassoc.symgroup import C3SQ, leibniz_vector, lie_admissible_vector

    lhs = apply_group_vector(
        associator(), lie_admissible_vector() + leibniz_vector()
    )
    rhs = apply_group_vector(associator(), act(wa_vector(), C3SQ)).scale(2)
    assert lhs == rhs
    assert lie_admissible_expression() == apply_group_vector(
        associator(), lie_admissible_vector()
    )

import json
from fractions import Fraction

import pytest

from wassoc.corpus import (
    abelian,
    flexible_non_wa,
    nonabelian_lie2,
    plane_quotient,
    random_multimap,
    sl2,
    truncated_polynomials,
    two_dim_family,
)
from wassoc.finalg import (
    AlgebraFormatError,
    FinAlg,
    MultiMap,
    algebra_from_json,
    algebra_to_json,
    depolarize,
    evaluate,
    inner_derivation_candidate,
    is_associative,
    is_commutative,
    is_derivation,
    is_flexible,
    is_jordan,
    is_lie_admissible,
    is_nonassociative_poisson,
    is_weakly_associative,
    jordan_identity_defect,
    leibniz_defect_pair,
    multimap_from_json,
    multimap_to_json,
    polarize,
    satisfies_jacobi,
    satisfies_jordan_identity,
)
from wassoc.identities import associator, wa_expression
from wassoc.linalg import Matrix


def test_two_dim_family_wa_and_associativity():
    alg = two_dim_family(6)
    assert is_weakly_associative(alg)
    assert not is_associative(alg)
    assert is_flexible(alg)
    assert is_lie_admissible(alg)
    assert is_associative(two_dim_family(2))
    assert is_associative(two_dim_family(-2))
    assert not is_associative(two_dim_family(0))


def test_two_dim_family_associator_value():
    # A(e1, e1, e2) = -((a^2 - 4) / 16) e2 with the convention
    # A(x, y, z) = x(yz) - (xy)z
    for a in (6, 0, 3):
        alg = two_dim_family(a)
        defect = evaluate(alg, associator())
        expected = -Fraction(a * a - 4, 16)
        assert defect.values[(0, 0, 1)] == (0, expected)
        assert defect.values[(1, 0, 0)] == (0, -expected)


def test_a6_example_matches_printed_products():
    alg = two_dim_family(6)
    assert alg.product(0, 0) == (3, 0)
    assert alg.product(0, 1) == (0, 2)
    assert alg.product(1, 0) == (0, 1)
    assert alg.product(1, 1) == (0, 0)


def test_commutative_algebras_are_wa():
    for alg in (abelian(3), truncated_polynomials(4), plane_quotient().algebra()):
        assert is_commutative(alg)
        assert evaluate(alg, wa_expression()).is_zero()


def test_lie_algebras_are_wa():
    for alg in (sl2(), nonabelian_lie2()):
        assert satisfies_jacobi(alg)
        assert is_weakly_associative(alg)


def test_zero_algebra_satisfies_everything():
    z = abelian(2)
    assert is_weakly_associative(z) and is_associative(z)
    assert is_flexible(z) and is_lie_admissible(z) and is_jordan(z)


def test_evaluate_is_linear_in_the_identity(rng):
    alg = two_dim_family(6)
    e1, e2 = associator(), wa_expression()
    q = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
    lhs = evaluate(alg, e1 + e2.scale(q))
    rhs = evaluate(alg, e1) + evaluate(alg, e2).scale(q)
    assert lhs == rhs


def test_polarize_trivial_cases():
    comm = truncated_polynomials(3)
    bullet, bracket = polarize(comm)
    assert bullet == comm.scale(2)
    assert all(
        all(x == 0 for x in bracket.product(i, j)) for i in range(3) for j in range(3)
    )
    lie = sl2()
    bullet, bracket = polarize(lie)
    assert bracket == lie.scale(2)
    assert all(
        all(x == 0 for x in bullet.product(i, j)) for i in range(3) for j in range(3)
    )


def test_polarize_depolarize_roundtrip_doubles():
    alg = two_dim_family(6)
    bullet, bracket = polarize(alg)
    back = depolarize(bullet, bracket)
    assert back == alg.scale(2)
    b2, k2 = polarize(depolarize(bullet, bracket))
    assert b2 == bullet.scale(2)
    assert k2 == bracket.scale(2)


def test_depolarize_preconditions():
    noncomm = two_dim_family(6)
    with pytest.raises(ValueError, match="commutative"):
        depolarize(noncomm, abelian(2))
    with pytest.raises(ValueError, match="anticommutative"):
        depolarize(abelian(3), truncated_polynomials(3))


def test_depolarize_lie_bracket_gives_lie_algebra():
    lie = sl2()
    assert depolarize(abelian(3), lie) == lie


def test_nonassociative_poisson_examples():
    alg = two_dim_family(6)
    bullet, bracket = polarize(alg)
    assert is_nonassociative_poisson(bullet, bracket)
    assert is_nonassociative_poisson(truncated_polynomials(3), abelian(3))
    # uniform rescaling preserves Leibniz (it is linear in the bracket), so
    # the breaking perturbation must change the bracket's direction
    scaled = FinAlg.from_products(2, {(1, 2): {2: 2}, (2, 1): {2: -2}})
    assert is_nonassociative_poisson(bullet, scaled)
    tilted = FinAlg.from_products(2, {(1, 2): {1: 1, 2: 1}, (2, 1): {1: -1, 2: -1}})
    assert not is_nonassociative_poisson(bullet, tilted)
    witness = leibniz_defect_pair(bullet, tilted).first_nonzero()
    assert witness is not None and witness[0] == (0, 0, 1)


def test_derivation_predicate():
    alg = two_dim_family(6)
    for i in range(2):
        assert is_derivation(alg, inner_derivation_candidate(alg, i))
    assert is_derivation(alg, Matrix.zero(2, 2))
    bad = FinAlg.from_products(2, {(1, 1): {2: 1}, (1, 2): {1: 1}})
    assert not is_weakly_associative(bad)
    failing = [
        i for i in range(2) if not is_derivation(bad, inner_derivation_candidate(bad, i))
    ]
    assert failing


def test_derivation_iff_wa_across_corpus(wa_members, non_wa_members):
    for _, alg in wa_members:
        for i in range(alg.dim):
            assert is_derivation(alg, inner_derivation_candidate(alg, i))
    for _, alg in non_wa_members:
        assert any(
            not is_derivation(alg, inner_derivation_candidate(alg, i))
            for i in range(alg.dim)
        )


def test_wa_implies_lie_admissible_and_flexible(wa_members):
    for _, alg in wa_members:
        assert is_lie_admissible(alg)
        assert is_flexible(alg)


def test_flexible_does_not_imply_wa():
    alg = flexible_non_wa()
    assert is_flexible(alg)
    assert not is_weakly_associative(alg)


def test_jordan_examples():
    assert is_jordan(truncated_polynomials(4))
    # symmetrized 2x2 matrices
    prods = {}
    idx = {"11": 1, "12": 2, "21": 3, "22": 4}
    for i in "12":
        for j in "12":
            for k in "12":
                for l in "12":
                    if j == k:
                        prods.setdefault((idx[i + j], idx[k + l]), {})[idx[i + l]] = 1
    mat2 = FinAlg.from_products(4, prods)
    bullet, _ = polarize(mat2)
    assert is_jordan(bullet)
    assert not is_jordan(two_dim_family(6))  # not commutative


def test_jordan_biconditional_across_corpus(wa_members):
    seen = set()
    for _, alg in wa_members:
        bullet, _ = polarize(alg)
        lhs = is_jordan(bullet)
        rhs = satisfies_jordan_identity(alg)
        assert lhs == rhs
        seen.add(lhs)
    assert seen == {True, False}


def test_jordan_defect_witness_on_free_algebra():
    from wassoc.freewa import as_truncated_algebra, build

    free4 = as_truncated_algebra(build(4)).algebra
    assert is_commutative(free4)
    defect = jordan_identity_defect(free4)
    assert not defect.is_zero()


# ---------------------------------------------------------------------------
# JSON interchange.
# ---------------------------------------------------------------------------

def test_algebra_json_roundtrip():
    alg = two_dim_family(6)
    doc = algebra_to_json(alg)
    back = algebra_from_json(json.dumps(doc))
    assert back == alg


def test_algebra_json_example_format():
    doc = {"dim": 2, "products": [{"i": 1, "j": 2, "out": [{"k": 2, "c": "3/1"}]}]}
    alg = algebra_from_json(doc)
    assert alg.product(0, 1) == (0, 3)
    assert alg.product(1, 0) == (0, 0)


def test_algebra_json_rejects_bad_indices():
    with pytest.raises(AlgebraFormatError):
        algebra_from_json({"dim": 2, "products": [{"i": 3, "j": 1, "out": []}]})
    with pytest.raises(AlgebraFormatError):
        algebra_from_json(
            {"dim": 2, "products": [{"i": 1, "j": 1, "out": [{"k": 5, "c": "1/1"}]}]}
        )


def test_algebra_json_rejects_malformed_rationals():
    with pytest.raises(AlgebraFormatError):
        algebra_from_json(
            {"dim": 1, "products": [{"i": 1, "j": 1, "out": [{"k": 1, "c": "x/y"}]}]}
        )
    with pytest.raises(AlgebraFormatError):
        algebra_from_json(
            {"dim": 1, "products": [{"i": 1, "j": 1, "out": [{"k": 1, "c": "1/0"}]}]}
        )
    with pytest.raises(AlgebraFormatError):
        algebra_from_json("{not json")


def test_multimap_json_roundtrip(rng):
    m = random_multimap(2, 3, rng)
    doc = multimap_to_json(m)
    back = multimap_from_json(doc, 3, arity=2)
    assert back == m


def test_multimap_permute_inputs():
    m = MultiMap.from_function(2, 2, lambda i, j: (i, j))
    t = m.permute_inputs((2, 1))
    assert t.values[(0, 1)] == m.values[(1, 0)]
    sk = m.skew_part()
    assert sk.is_skew()
    sym = m.sym_part()
    assert sym.is_symmetric()

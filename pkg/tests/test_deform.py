import json

import pytest

from wassoc.cohomology import CochainContext, wa_delta1, wa_delta2
from wassoc.corpus import (
    plane_quotient,
    random_endomorphism,
    random_multimap,
    two_dim_family,
)
from wassoc.deform import (
    GaugeTransform,
    TruncatedDeformation,
    bullet_preserving_check,
    deformation_from_json,
    deformation_to_json,
    first_failing_order,
    gauge,
    gauge_compose,
    identity_gauge,
    is_wa_deformation,
    linear_deformation,
    ncp_defect,
    polarized_deformation,
    quantization,
    wa_defect,
    zero_deformation,
)
from wassoc.finalg import (
    FinAlg,
    MultiMap,
    is_associative,
    is_commutative,
    is_nonassociative_poisson,
    polarize,
)
from wassoc.linalg import Matrix


@pytest.fixture(scope="module")
def ring():
    return plane_quotient()


@pytest.fixture(scope="module")
def mu(ring):
    return ring.algebra()


@pytest.fixture(scope="module")
def bracket_map(ring):
    return ring.poisson_bracket((1, 0))


def upper_triangular():
    return FinAlg.from_products(
        3, {(1, 1): {1: 1}, (1, 2): {2: 1}, (2, 3): {2: 1}, (3, 3): {3: 1}}
    )


def test_order1_defect_is_wa_coboundary(mu, rng):
    n = mu.dim
    phi1 = random_multimap(2, n, rng, 2)
    d = TruncatedDeformation(mu, [phi1, MultiMap.zero(2, n), MultiMap.zero(2, n)])
    ctx = CochainContext(mu)
    assert wa_defect(d, 1) == wa_delta2(ctx, phi1)


def test_zero_deformation_is_wa(mu):
    assert is_wa_deformation(zero_deformation(mu, 3))


def test_linear_quantization_orders_1_to_3(mu, bracket_map):
    d = linear_deformation(mu, bracket_map, order=3)
    for k in (1, 2, 3):
        assert wa_defect(d, k).is_zero()
    assert is_wa_deformation(d)


def test_invalid_first_order_detected(mu, rng):
    phi1 = random_multimap(2, mu.dim, rng, 2)
    d = linear_deformation(mu, phi1, order=3)
    assert not is_wa_deformation(d)
    assert first_failing_order(d) == 1


def test_quantization_of_linear_deformation(mu, bracket_map, ring):
    d = linear_deformation(mu, bracket_map, order=3)
    q = quantization(d)
    assert q.failure is None
    assert q.jacobi_ok and q.leibniz_ok and q.poisson_ok
    # skew first-order term: extracted bracket is twice the term
    assert q.bracket == bracket_map.scale(2)
    assert is_nonassociative_poisson(mu, q.bracket_algebra)


def test_quantization_symmetric_first_order(mu, rng):
    n = mu.dim
    h = random_endomorphism(n, rng, 2)
    g = GaugeTransform([h, Matrix.zero(n, n), Matrix.zero(n, n)])
    d = gauge(zero_deformation(mu, 3), g)
    # over a commutative base the gauged first-order term is symmetric
    assert d.terms[0].is_symmetric()
    q = quantization(d)
    assert q.failure is None
    assert q.bracket.is_zero()
    assert q.poisson_ok  # degenerate bracket is still a valid Poisson pair


def test_quantization_requires_commutative_base():
    alg = two_dim_family(6)
    with pytest.raises(ValueError, match="commutative"):
        quantization(zero_deformation(alg, 2))


def test_quantization_reports_failing_order(mu, rng):
    phi1 = random_multimap(2, mu.dim, rng, 2)
    d = linear_deformation(mu, phi1, order=2)
    q = quantization(d)
    assert q.failure == "not weakly associative at order 1"


def test_identity_gauge_fixes_deformation(mu, bracket_map):
    d = linear_deformation(mu, bracket_map, order=3)
    g = identity_gauge(mu.dim, 3)
    gd = gauge(d, g)
    assert all(gd.terms[k] == d.terms[k] for k in range(3))


def test_gauge_of_zero_deformation_is_coboundary(rng):
    base = two_dim_family(2)  # associative member
    assert is_associative(base)
    n = base.dim
    h = random_endomorphism(n, rng, 2)
    g = GaugeTransform([h, Matrix.zero(n, n), Matrix.zero(n, n)])
    gz = gauge(zero_deformation(base, 3), g)
    ctx = CochainContext(base)
    assert gz.terms[0] == wa_delta1(ctx, h).scale(-1)


def test_gauge_preserves_wa_on_30_seeded_pairs(mu, ring, rng):
    brackets = [ring.poisson_bracket(w) for w in ((1, 0), (0, 1), (1, 1))]
    count = 0
    while count < 30:
        br = brackets[count % 3]
        d = linear_deformation(mu, br, order=3)
        g = GaugeTransform([random_endomorphism(mu.dim, rng, 1) for _ in range(3)])
        gd = gauge(d, g)
        assert is_wa_deformation(gd)
        count += 1


def test_gauge_composition_is_group_action(mu, bracket_map, rng):
    d = linear_deformation(mu, bracket_map, order=3)
    n = mu.dim
    for _ in range(3):
        inner = GaugeTransform([random_endomorphism(n, rng, 1) for _ in range(3)])
        outer = GaugeTransform([random_endomorphism(n, rng, 1) for _ in range(3)])
        lhs = gauge(gauge(d, inner), outer)
        rhs = gauge(d, gauge_compose(outer, inner))
        assert all(lhs.terms[k] == rhs.terms[k] for k in range(3))


def test_defect_bilinearity(mu, rng):
    n = mu.dim
    a = random_multimap(2, n, rng, 2)
    b = random_multimap(2, n, rng, 2)
    d_a = TruncatedDeformation(mu, [a, MultiMap.zero(2, n)])
    d_b = TruncatedDeformation(mu, [b, MultiMap.zero(2, n)])
    d_ab = TruncatedDeformation(mu, [a + b, MultiMap.zero(2, n)])
    assert wa_defect(d_ab, 1) == wa_defect(d_a, 1) + wa_defect(d_b, 1)


def test_polarized_deformation_parts(mu, bracket_map, rng):
    n = mu.dim
    sym = random_multimap(2, n, rng, 2).sym_part()
    d = TruncatedDeformation(mu, [bracket_map + sym, MultiMap.zero(2, n)])
    brackets, bullets = polarized_deformation(d)
    assert brackets[0] == bracket_map.scale(2)
    assert bullets[0] == sym.scale(2)
    skew_only = TruncatedDeformation(mu, [bracket_map])
    _, r = polarized_deformation(skew_only)
    assert all(t.is_zero() for t in r)
    sym_only = TruncatedDeformation(mu, [sym])
    b, _ = polarized_deformation(sym_only)
    assert all(t.is_zero() for t in b)


def test_order1_mixed_leibniz_identity(mu, ring, rng):
    # for every weakly associative deformation the polarized first-order
    # terms satisfy the mixed Leibniz identity
    base_defs = [
        linear_deformation(mu, ring.poisson_bracket((1, 0)), 3),
        gauge(
            linear_deformation(mu, ring.poisson_bracket((0, 1)), 3),
            GaugeTransform([random_endomorphism(mu.dim, rng, 1) for _ in range(3)]),
        ),
    ]
    for d in base_defs:
        assert is_wa_deformation(d)
        bullet, brk = polarize(d.base)
        brackets, bullets = polarized_deformation(d)
        b1, rho1 = brackets[0], bullets[0]
        n = mu.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = brk.lmul_basis(i, rho1.values[(j, k)])
                    lhs = tuple(
                        l
                        - sum(
                            brk.product(i, k)[a] * rho1.values[(j, a)][t]
                            for a in range(n)
                        )
                        - sum(
                            brk.product(i, j)[a] * rho1.values[(a, k)][t]
                            for a in range(n)
                        )
                        for t, l in enumerate(lhs)
                    )
                    rhs = tuple(
                        -sum(
                            bullet.product(j, k)[a] * b1.values[(i, a)][t]
                            for a in range(n)
                        )
                        + bullet.lmul_basis(j, b1.values[(i, k)])[t]
                        + bullet.rmul_basis(b1.values[(i, j)], k)[t]
                        for t in range(n)
                    )
                    assert lhs == rhs


def test_ncp_defect_associative_deformation(rng):
    ut = upper_triangular()
    assert is_associative(ut) and not is_commutative(ut)
    h = random_endomorphism(3, rng, 2)
    g = GaugeTransform([h, Matrix.zero(3, 3), Matrix.zero(3, 3)])
    adef = gauge(zero_deformation(ut, 3), g)
    assert is_wa_deformation(adef)
    bullet, bracket = polarize(ut)
    rho1 = adef.terms[0].sym_part()
    b1 = adef.terms[0].skew_part()
    assert ncp_defect(bullet, bracket, rho1, b1).is_zero()


def test_ncp_defect_order_zero_identity(mu, ring):
    base = mu.add(ring.bracket_algebra((1, 0)))
    bullet, bracket = polarize(base)
    n = mu.dim
    brmap = MultiMap.from_function(2, n, lambda i, j: bracket.product(i, j))
    assert ncp_defect(bullet, bracket, MultiMap.zero(2, n), brmap).is_zero()


def test_ncp_defect_random_nonzero_with_witness(mu, ring, rng):
    from wassoc.corpus import random_skew_bilinear, random_symmetric_bilinear

    base = mu.add(ring.bracket_algebra((1, 0)))
    bullet, bracket = polarize(base)
    n = mu.dim
    rho = random_symmetric_bilinear(n, rng, 2)
    b = random_skew_bilinear(n, rng, 2)
    defect = ncp_defect(bullet, bracket, rho, b)
    assert not defect.is_zero()
    witness = defect.first_nonzero()
    assert witness is not None


def test_bullet_preserving_pencil(mu, ring):
    base = mu.add(ring.bracket_algebra((1, 0)))
    n = mu.dim
    pencil = TruncatedDeformation(
        base, [ring.poisson_bracket((2, 0)), MultiMap.zero(2, n), MultiMap.zero(2, n)]
    )
    assert is_wa_deformation(pencil)
    rep = bullet_preserving_check(pencil)
    assert rep.all_terms_skew
    assert rep.phi1_multiderivation
    assert rep.lichnerowicz_cocycle


def test_bullet_preserving_bracket_itself(mu, ring):
    base = mu.add(ring.bracket_algebra((1, 0)))
    n = mu.dim
    d = TruncatedDeformation(
        base, [ring.poisson_bracket((1, 0)), MultiMap.zero(2, n), MultiMap.zero(2, n)]
    )
    assert is_wa_deformation(d)
    rep = bullet_preserving_check(d)
    assert rep.lichnerowicz_cocycle


def test_bullet_preserving_zero_deformation(mu, ring):
    base = mu.add(ring.bracket_algebra((1, 0)))
    rep = bullet_preserving_check(zero_deformation(base, 3))
    assert rep.all_terms_skew and rep.lichnerowicz_cocycle


def test_bullet_preserving_rejects_non_skew(mu, rng):
    sym = random_multimap(2, mu.dim, rng, 2).sym_part()
    d = TruncatedDeformation(mu, [sym])
    rep = bullet_preserving_check(d)
    assert not rep.all_terms_skew
    assert rep.non_skew_orders == [1]


def test_deformation_json_roundtrip(mu, bracket_map):
    d = linear_deformation(mu, bracket_map, order=2)
    doc = deformation_to_json(d)
    back = deformation_from_json(json.dumps(doc))
    assert back.base == d.base
    assert all(a == b for a, b in zip(back.terms, d.terms))

"""Truncated formal deformations mu_t = mu + t phi_1 + ... + t^N phi_N.

Everything is truncated at a finite order, so all statements are exact.  The
deformation is weakly associative through order N iff the order-k defect (the
t^k coefficient of the symmetrized associator of mu_t) vanishes for every
k <= N.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cohomology import (
    NotMultiderivation,
    lichnerowicz_delta,
    poisson_context,
    wa_symmetrize3,
)
from .finalg import (
    AlgebraFormatError,
    FinAlg,
    MultiMap,
    algebra_from_json,
    algebra_to_json,
    is_commutative,
    is_nonassociative_poisson,
    is_weakly_associative,
    leibniz_defect_pair,
    multimap_from_json,
    multimap_to_json,
    polarize,
    product_map,
    satisfies_jacobi,
)
from .linalg import Matrix


@dataclass
class TruncatedDeformation:
    base: FinAlg
    terms: list[MultiMap]  # phi_1 .. phi_N

    def __post_init__(self):
        for t in self.terms:
            if t.arity != 2 or t.dim != self.base.dim:
                raise ValueError("deformation terms must be bilinear on the base")

    @property
    def order(self) -> int:
        return len(self.terms)

    def coefficient(self, k: int) -> MultiMap:
        """phi_k with phi_0 = the base product."""
        if k == 0:
            return product_map(self.base)
        if 1 <= k <= self.order:
            return self.terms[k - 1]
        return MultiMap.zero(2, self.base.dim)


def zero_deformation(base: FinAlg, order: int = 3) -> TruncatedDeformation:
    return TruncatedDeformation(
        base, [MultiMap.zero(2, base.dim) for _ in range(order)]
    )


def linear_deformation(base: FinAlg, psi: MultiMap, order: int = 3) -> TruncatedDeformation:
    terms = [MultiMap.zero(2, base.dim) for _ in range(order)]
    terms[0] = psi
    return TruncatedDeformation(base, terms)


def _mixed_associator(f: MultiMap, g: MultiMap) -> MultiMap:
    """f(x, g(y,z)) - f(g(x,y), z)."""
    n = f.dim

    def fn(i, j, k):
        inner = g.values[(j, k)]
        t1 = [0] * n
        for a in range(n):
            if inner[a] != 0:
                val = f.values[(i, a)]
                for t in range(n):
                    if val[t] != 0:
                        t1[t] += inner[a] * val[t]
        inner2 = g.values[(i, j)]
        t2 = [0] * n
        for a in range(n):
            if inner2[a] != 0:
                val = f.values[(a, k)]
                for t in range(n):
                    if val[t] != 0:
                        t2[t] += inner2[a] * val[t]
        return tuple(x - y for x, y in zip(t1, t2))

    return MultiMap.from_function(3, n, fn)


def wa_defect(deformation: TruncatedDeformation, k: int) -> MultiMap:
    """Coefficient of t^k in the symmetrized associator of mu_t:
    sum_{i+j=k} of the weakly associative symmetrization of the mixed
    associator of phi_i with phi_j (phi_0 = mu)."""
    if not 1 <= k <= deformation.order:
        raise ValueError(f"order {k} outside 1..{deformation.order}")
    n = deformation.base.dim
    total = MultiMap.zero(3, n)
    for i in range(0, k + 1):
        j = k - i
        total = total + _mixed_associator(
            deformation.coefficient(i), deformation.coefficient(j)
        )
    return wa_symmetrize3(total)


def is_wa_deformation(deformation: TruncatedDeformation) -> bool:
    if not is_weakly_associative(deformation.base):
        return False
    return all(
        wa_defect(deformation, k).is_zero() for k in range(1, deformation.order + 1)
    )


def first_failing_order(deformation: TruncatedDeformation):
    for k in range(1, deformation.order + 1):
        if not wa_defect(deformation, k).is_zero():
            return k
    return None


# ---------------------------------------------------------------------------
# Quantization extraction.
# ---------------------------------------------------------------------------

@dataclass
class QuantizationReport:
    bullet: FinAlg
    bracket: MultiMap
    bracket_algebra: FinAlg
    wa_orders_checked: int
    jacobi_ok: bool
    leibniz_ok: bool
    poisson_ok: bool
    failure: str | None = None


def quantization(deformation: TruncatedDeformation) -> QuantizationReport:
    """For a weakly associative deformation of a commutative base, the skew
    part of phi_1 is a Poisson bracket for the base product.  The report
    distinguishes a deformation failing weak associativity at some order from
    the (theory-violating) case of a valid deformation whose bracket fails
    the Jacobi or Leibniz identity."""
    base = deformation.base
    if not is_commutative(base):
        raise ValueError("quantization extraction needs a commutative base")
    if not is_weakly_associative(base):
        raise ValueError("base must be weakly associative")
    if deformation.order < 2:
        raise ValueError("need a deformation truncated at order >= 2")
    failing = first_failing_order(deformation)
    psi = deformation.terms[0].skew_part()
    n = base.dim
    bracket_alg = FinAlg(n, [[psi.values[(i, j)] for j in range(n)] for i in range(n)])
    jacobi_ok = satisfies_jacobi(bracket_alg)
    leibniz_ok = leibniz_defect_pair(base, bracket_alg).is_zero()
    poisson_ok = is_nonassociative_poisson(base, bracket_alg)
    failure = None
    if failing is not None:
        failure = f"not weakly associative at order {failing}"
    elif not (jacobi_ok and leibniz_ok):
        failure = (
            "VALID deformation with failing bracket identities: "
            f"jacobi={jacobi_ok} leibniz={leibniz_ok}"
        )
    return QuantizationReport(
        bullet=base,
        bracket=psi,
        bracket_algebra=bracket_alg,
        wa_orders_checked=deformation.order,
        jacobi_ok=jacobi_ok,
        leibniz_ok=leibniz_ok,
        poisson_ok=poisson_ok,
        failure=failure,
    )


# ---------------------------------------------------------------------------
# Gauge transformations.
# ---------------------------------------------------------------------------

@dataclass
class GaugeTransform:
    """f_t = Id + t h_1 + ... + t^N h_N, column-convention matrices."""

    h: list[Matrix]

    @property
    def order(self) -> int:
        return len(self.h)

    def inverse_terms(self, order: int) -> list[Matrix]:
        """Terms g_1..g_order of the truncated series inverse of f_t."""
        n = self.h[0].rows if self.h else 0
        if n == 0:
            raise ValueError("empty gauge transform")
        ident = Matrix.identity(n)

        def term(k: int) -> Matrix:
            return self.h[k - 1] if 1 <= k <= len(self.h) else Matrix.zero(n, n)

        g: list[Matrix] = []
        for k in range(1, order + 1):
            acc = term(k).scale(-1)
            for i in range(1, k):
                acc = acc - (term(i) @ g[k - i - 1])
            g.append(acc)
        return g


def identity_gauge(dim: int, order: int = 3) -> GaugeTransform:
    return GaugeTransform([Matrix.zero(dim, dim) for _ in range(order)])


def _compose_endo_bilinear(h: Matrix, t: MultiMap) -> MultiMap:
    return MultiMap.from_function(
        2, t.dim, lambda i, j: h.apply(t.values[(i, j)])
    )


def _compose_bilinear_endos(t: MultiMap, g1: Matrix, g2: Matrix) -> MultiMap:
    n = t.dim
    c1 = [g1.col(j) for j in range(n)]
    c2 = [g2.col(j) for j in range(n)]

    def fn(i, j):
        u, v = c1[i], c2[j]
        out = [0] * n
        for a in range(n):
            if u[a] == 0:
                continue
            for b in range(n):
                if v[b] == 0:
                    continue
                q = u[a] * v[b]
                val = t.values[(a, b)]
                for s in range(n):
                    if val[s] != 0:
                        out[s] += q * val[s]
        return tuple(out)

    return MultiMap.from_function(2, n, fn)


def gauge(deformation: TruncatedDeformation, g: GaugeTransform) -> TruncatedDeformation:
    """mu'_t = f_t . mu_t . (f_t^-1 x f_t^-1), truncated at the deformation
    order."""
    n = deformation.base.dim
    order = deformation.order
    if g.order != order:
        raise ValueError("gauge order must match the deformation order")
    ident = Matrix.identity(n)

    def h_term(k: int) -> Matrix:
        return ident if k == 0 else g.h[k - 1]

    ginv = g.inverse_terms(order)

    def ginv_term(k: int) -> Matrix:
        return ident if k == 0 else ginv[k - 1]

    new_terms = []
    for k in range(1, order + 1):
        acc = MultiMap.zero(2, n)
        for a in range(0, k + 1):
            for b in range(0, k - a + 1):
                for c in range(0, k - a - b + 1):
                    d = k - a - b - c
                    phi = deformation.coefficient(b)
                    term = _compose_bilinear_endos(phi, ginv_term(c), ginv_term(d))
                    term = _compose_endo_bilinear(h_term(a), term)
                    acc = acc + term
        new_terms.append(acc)
    return TruncatedDeformation(deformation.base, new_terms)


def gauge_compose(outer: GaugeTransform, inner: GaugeTransform) -> GaugeTransform:
    """Truncated composition: gauge(gauge(def, inner), outer) equals
    gauge(def, gauge_compose(outer, inner))."""
    if outer.order != inner.order:
        raise ValueError("orders must match")
    order = outer.order
    n = outer.h[0].rows
    ident = Matrix.identity(n)

    def term(g, k):
        return ident if k == 0 else g.h[k - 1]

    h = []
    for k in range(1, order + 1):
        acc = Matrix.zero(n, n)
        for i in range(0, k + 1):
            acc = acc + (term(outer, i) @ term(inner, k - i))
        h.append(acc)
    return GaugeTransform(h)


# ---------------------------------------------------------------------------
# Polarized deformations and the noncommutative Leibniz identity.
# ---------------------------------------------------------------------------

def polarized_deformation(deformation: TruncatedDeformation):
    """Componentwise polarization: B_k = phi_k - phi_k^op (bracket terms) and
    rho_k = phi_k + phi_k^op (bullet terms)."""
    brackets = [t.skew_part() for t in deformation.terms]
    bullets = [t.sym_part() for t in deformation.terms]
    return brackets, bullets


def ncp_defect(
    bullet: FinAlg, bracket: FinAlg, rho1: MultiMap, b1: MultiMap
) -> MultiMap:
    """Six-term noncommutative Leibniz defect:
    B1(x, y.z) - B1(x,y).z - y.B1(x,z) + {x, rho1(y,z)} - rho1({x,y}, z)
    - rho1(y, {x,z})."""
    if not is_commutative(bullet):
        raise ValueError("bullet must be commutative")
    if not (is_nonassociative_poisson(bullet, bracket) or satisfies_jacobi(bracket)):
        raise ValueError("bracket must be a Lie bracket")
    n = bullet.dim

    def fn(i, j, k):
        out = [0] * n
        dot = bullet.product(j, k)
        for a in range(n):
            if dot[a] != 0:
                val = b1.values[(i, a)]
                for t in range(n):
                    if val[t] != 0:
                        out[t] += dot[a] * val[t]
        t2 = bullet.rmul_basis(b1.values[(i, j)], k)
        t3 = bullet.lmul_basis(j, b1.values[(i, k)])
        t4 = bracket.lmul_basis(i, rho1.values[(j, k)])
        br_ij = bracket.product(i, j)
        t5 = [0] * n
        for a in range(n):
            if br_ij[a] != 0:
                val = rho1.values[(a, k)]
                for t in range(n):
                    if val[t] != 0:
                        t5[t] += br_ij[a] * val[t]
        br_ik = bracket.product(i, k)
        t6 = [0] * n
        for a in range(n):
            if br_ik[a] != 0:
                val = rho1.values[(j, a)]
                for t in range(n):
                    if val[t] != 0:
                        t6[t] += br_ik[a] * val[t]
        return tuple(
            o - x2 - x3 + x4 - x5 - x6
            for o, x2, x3, x4, x5, x6 in zip(out, t2, t3, t4, t5, t6)
        )

    return MultiMap.from_function(3, n, fn)


@dataclass
class BulletPreservingReport:
    all_terms_skew: bool
    non_skew_orders: list[int]
    phi1_multiderivation: bool
    lichnerowicz_cocycle: bool
    detail: str


def bullet_preserving_check(deformation: TruncatedDeformation) -> BulletPreservingReport:
    """For a deformation whose terms are all skew (so the symmetric part of
    the product never moves), the first-order term must be a 2-cocycle of the
    Lichnerowicz complex of the polarized Poisson pair of the base."""
    non_skew = [
        k for k, t in enumerate(deformation.terms, start=1) if not t.is_skew()
    ]
    if non_skew:
        return BulletPreservingReport(
            all_terms_skew=False,
            non_skew_orders=non_skew,
            phi1_multiderivation=False,
            lichnerowicz_cocycle=False,
            detail=f"non-skew terms at orders {non_skew}",
        )
    bullet, bracket = polarize(deformation.base)
    ctx = poisson_context(bullet, bracket)
    phi1 = deformation.terms[0]
    if phi1.is_zero():
        return BulletPreservingReport(True, [], True, True, "zero first-order term")
    try:
        image = lichnerowicz_delta(ctx, phi1)
    except (NotMultiderivation, ValueError) as exc:
        return BulletPreservingReport(
            all_terms_skew=True,
            non_skew_orders=[],
            phi1_multiderivation=False,
            lichnerowicz_cocycle=False,
            detail=str(exc),
        )
    ok = image.is_zero()
    return BulletPreservingReport(
        all_terms_skew=True,
        non_skew_orders=[],
        phi1_multiderivation=True,
        lichnerowicz_cocycle=ok,
        detail="cocycle" if ok else "nonzero Lichnerowicz coboundary",
    )


# ---------------------------------------------------------------------------
# JSON interchange.
# ---------------------------------------------------------------------------

def deformation_from_json(doc) -> TruncatedDeformation:
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise AlgebraFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "base" not in doc:
        raise AlgebraFormatError("deformation document must carry a base algebra")
    base = algebra_from_json(doc["base"])
    terms = [
        multimap_from_json(t, base.dim, arity=2) for t in doc.get("terms", [])
    ]
    return TruncatedDeformation(base, terms)


def deformation_to_json(deformation: TruncatedDeformation) -> dict:
    return {
        "base": algebra_to_json(deformation.base),
        "terms": [multimap_to_json(t) for t in deformation.terms],
    }

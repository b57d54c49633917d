"""Exact-arithmetic toolkit for weakly associative algebras."""

from .linalg import Matrix, Rational, in_span, kernel_basis, rank, rref
from .symgroup import (
    GroupAlgebraElement,
    Perm,
    act,
    compose,
    in_orbit_span,
    orbit,
    orbit_span_dim,
    parse_perm,
    relations_equivalent,
    wa_vector,
)
from .identities import (
    MultilinearIdentity,
    apply_group_vector,
    apply_perm,
    associator,
    leibniz_expression,
    wa_expression,
)
from .finalg import (
    FinAlg,
    MultiMap,
    depolarize,
    evaluate,
    is_associative,
    is_commutative,
    is_derivation,
    is_flexible,
    is_jordan,
    is_lie_admissible,
    is_nonassociative_poisson,
    is_weakly_associative,
    polarize,
    satisfies_jacobi,
)
from .cohomology import (
    CochainContext,
    build_delta3_system,
    hochschild_delta,
    is_multiderivation,
    leibniz_defect,
    lichnerowicz_delta,
    operadic_cochain3_check,
    operadic_cochain4_check,
    poisson_context,
    wa_cocycle2,
    wa_delta0,
    wa_delta1,
    wa_delta2,
    wa_delta3,
)
from .operads import (
    annihilator,
    consequences,
    dual_pairing,
    generating_function,
    koszul_composition_check,
    wa_relation_space,
    wass_dual_arity4,
    wass_dual_arity4_dim,
)
from .freewa import GradedBasis, as_truncated_algebra, build, multiply
from .homology import ChainComplex
from .deform import (
    GaugeTransform,
    TruncatedDeformation,
    gauge,
    is_wa_deformation,
    ncp_defect,
    polarized_deformation,
    quantization,
    wa_defect,
)

__version__ = "0.1.0"

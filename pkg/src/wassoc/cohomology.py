"""Coboundary operators on multilinear maps over a finite-dimensional algebra.

Three families live here:

* the Hochschild-type operator `hochschild_delta` for any product;
* the weakly associative operators `wa_delta0..wa_delta2` (degree 2 is the
  Hochschild operator precomposed with the slot symmetrization Id + c - (12))
  together with the parametric degree-3 operator `wa_delta3`, whose admissible
  coefficient vectors form the kernel of the linear system assembled by
  `build_delta3_system`;
* the Lichnerowicz operator on skew multiderivations of a (possibly
  nonassociative) Poisson pair.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .finalg import (
    FinAlg,
    MultiMap,
    endo_to_map,
    is_nonassociative_poisson,
)
from .identities import LEAF
from .linalg import Matrix, Vector, kernel_basis, rref
from .symgroup import (
    C3,
    ID3,
    T12,
    Perm,
    all_perms,
    cochain3_vectors,
    cochain4_vectors,
)


@dataclass(frozen=True)
class CochainContext:
    """Algebra plus, optionally, a verified nonassociative Poisson pair."""

    alg: FinAlg
    bullet: FinAlg | None = None
    bracket: FinAlg | None = None

    def __post_init__(self):
        if (self.bullet is None) != (self.bracket is None):
            raise ValueError("bullet and bracket must be supplied together")
        if self.bullet is not None and not is_nonassociative_poisson(
            self.bullet, self.bracket
        ):
            raise ValueError("bullet/bracket pair is not nonassociative Poisson")


def poisson_context(bullet: FinAlg, bracket: FinAlg) -> CochainContext:
    return CochainContext(alg=bullet, bullet=bullet, bracket=bracket)


# ---------------------------------------------------------------------------
# Hochschild-type operator.
# ---------------------------------------------------------------------------

def hochschild_delta(ctx: CochainContext, phi: MultiMap) -> MultiMap:
    """Alternating-sum coboundary for the context product, both boundary
    terms included: for a k-linear phi,

      (d phi)(x1..x_{k+1}) = x1 phi(x2..x_{k+1})
                             + sum_i (-1)^i phi(.., x_i x_{i+1}, ..)
                             + (-1)^(k+1) phi(x1..x_k) x_{k+1}.
    """
    if phi.arity < 1:
        raise ValueError("needs arity >= 1")
    alg = ctx.alg
    n = alg.dim
    k = phi.arity

    def fn(*idx):
        out = list(alg.lmul_basis(idx[0], phi.values[idx[1:]]))
        sign = -1
        for i in range(k):
            merged = alg.product(idx[i], idx[i + 1])
            for a in range(n):
                q = merged[a]
                if q == 0:
                    continue
                val = phi.values[idx[:i] + (a,) + idx[i + 2 :]]
                for t in range(n):
                    if val[t] != 0:
                        out[t] += sign * q * val[t]
            sign = -sign
        last = alg.rmul_basis(phi.values[idx[:-1]], idx[-1])
        for t in range(n):
            if last[t] != 0:
                out[t] += sign * last[t]
        return tuple(out)

    return MultiMap.from_function(k + 1, n, fn)


# ---------------------------------------------------------------------------
# Weakly associative operators.
# ---------------------------------------------------------------------------

def wa_symmetrize3(t: MultiMap) -> MultiMap:
    """Precompose a trilinear map with Id + c - (12):
    t(x,y,z) + t(y,z,x) - t(y,x,z)."""
    if t.arity != 3:
        raise ValueError("needs arity 3")
    return t + t.permute_inputs(C3.images) - t.permute_inputs(T12.images)


def wa_delta0(ctx: CochainContext, x) -> Matrix:
    """Left-minus-right multiplication by the coordinate vector x, as a
    column-convention endomorphism."""
    alg = ctx.alg
    n = alg.dim
    cols = []
    for j in range(n):
        l = alg.mul_vec(x, alg.basis_vector(j))
        r = alg.mul_vec(alg.basis_vector(j), x)
        cols.append(tuple(a - b for a, b in zip(l, r)))
    return Matrix.from_rows([[cols[j][k] for j in range(n)] for k in range(n)])


def wa_delta1(ctx: CochainContext, f: Matrix) -> MultiMap:
    """f(x)y + x f(y) - f(xy)."""
    alg = ctx.alg
    n = alg.dim
    cols = endo_to_map(n, f)

    def fn(i, j):
        a = alg.rmul_basis(cols[i], j)
        b = alg.lmul_basis(i, cols[j])
        c = f.apply(alg.product(i, j))
        return tuple(x + y - z for x, y, z in zip(a, b, c))

    return MultiMap.from_function(2, n, fn)


def wa_delta2(ctx: CochainContext, phi: MultiMap) -> MultiMap:
    """The degree-2 weakly associative coboundary: the Hochschild image of
    phi symmetrized by Id + c - (12)."""
    if phi.arity != 2:
        raise ValueError("needs arity 2")
    return wa_symmetrize3(hochschild_delta(ctx, phi))


def wa_cocycle2(ctx: CochainContext, phi: MultiMap) -> bool:
    return wa_delta2(ctx, phi).is_zero()


def leibniz_defect(ctx: CochainContext, psi: MultiMap) -> MultiMap:
    """L(psi)(x,y,z) = psi(xy, z) - x psi(y,z) - psi(x,z) y."""
    if psi.arity != 2:
        raise ValueError("needs arity 2")
    alg = ctx.alg
    n = alg.dim

    def fn(i, j, k):
        merged = alg.product(i, j)
        t1 = [0] * n
        for a in range(n):
            if merged[a] != 0:
                val = psi.values[(a, k)]
                for t in range(n):
                    if val[t] != 0:
                        t1[t] += merged[a] * val[t]
        t2 = alg.lmul_basis(i, psi.values[(j, k)])
        t3 = alg.rmul_basis(psi.values[(i, k)], j)
        return tuple(a - b - c for a, b, c in zip(t1, t2, t3))

    return MultiMap.from_function(3, n, fn)


# ---------------------------------------------------------------------------
# Lichnerowicz operator.
# ---------------------------------------------------------------------------

class NotMultiderivation(ValueError):
    def __init__(self, slot: int):
        self.slot = slot
        super().__init__(f"not a derivation in argument {slot}")


def is_multiderivation(ctx: CochainContext, phi: MultiMap) -> bool:
    try:
        _check_multiderivation(ctx, phi)
        return True
    except NotMultiderivation:
        return False


def _check_multiderivation(ctx: CochainContext, phi: MultiMap):
    """Leibniz rule in each slot against the context product."""
    alg = ctx.alg
    n = alg.dim
    k = phi.arity
    for slot in range(k):
        for idx in itertools.product(range(n), repeat=k + 1):
            i, j = idx[slot], idx[slot + 1]
            rest_pre, rest_post = idx[:slot], idx[slot + 2 :]
            merged = alg.product(i, j)
            lhs = [0] * n
            for a in range(n):
                if merged[a] != 0:
                    val = phi.values[rest_pre + (a,) + rest_post]
                    for t in range(n):
                        if val[t] != 0:
                            lhs[t] += merged[a] * val[t]
            r1 = alg.lmul_basis(i, phi.values[rest_pre + (j,) + rest_post])
            r2 = alg.rmul_basis(phi.values[rest_pre + (i,) + rest_post], j)
            if any(l != a + b for l, a, b in zip(lhs, r1, r2)):
                raise NotMultiderivation(slot + 1)


def lichnerowicz_delta(ctx: CochainContext, phi: MultiMap) -> MultiMap:
    """Chevalley-Eilenberg style coboundary with the Poisson bracket:

      (d phi)(x0..xk) = sum_i (-1)^i {x_i, phi(.. x_i^ ..)}
                        + sum_{i<j} (-1)^(i+j) phi({x_i,x_j}, .. x_i^ .. x_j^ ..).

    Inputs must be skew multiderivations of the bullet product.
    """
    if ctx.bracket is None:
        raise ValueError("context carries no Poisson pair")
    if not phi.is_skew():
        raise ValueError("cochain must be skew-symmetric")
    _check_multiderivation(ctx, phi)
    bracket = ctx.bracket
    n = bracket.dim
    k = phi.arity

    def fn(*idx):
        out = [0] * n
        for i in range(k + 1):
            rest = idx[:i] + idx[i + 1 :]
            val = bracket.mul_vec(bracket.basis_vector(idx[i]), phi.values[rest])
            sign = -1 if i % 2 else 1
            for t in range(n):
                if val[t] != 0:
                    out[t] += sign * val[t]
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                br = bracket.product(idx[i], idx[j])
                rest = tuple(idx[t] for t in range(k + 1) if t != i and t != j)
                sign = -1 if (i + j) % 2 else 1
                for a in range(n):
                    if br[a] != 0:
                        val = phi.values[(a,) + rest]
                        for t in range(n):
                            if val[t] != 0:
                                out[t] += sign * br[a] * val[t]
        return tuple(out)

    return MultiMap.from_function(k + 1, n, fn)


def lichnerowicz_delta0(ctx: CochainContext, x) -> MultiMap:
    """Degree-0 case: (d x)(x0) = {x0, x} for an algebra element x."""
    if ctx.bracket is None:
        raise ValueError("context carries no Poisson pair")
    bracket = ctx.bracket
    n = bracket.dim
    return MultiMap.from_function(
        1, n, lambda i: bracket.mul_vec(bracket.basis_vector(i), x)
    )


# ---------------------------------------------------------------------------
# Operadic cochain symmetry checks.
# ---------------------------------------------------------------------------

def _annihilated_by(t: MultiMap, v) -> bool:
    out = MultiMap.zero(t.arity, t.dim)
    for p, q in v.coeffs.items():
        out = out + t.permute_inputs(p.images).scale(q)
    return out.is_zero()


def operadic_cochain3_check(phi3: MultiMap) -> bool:
    """Symmetry defining operadic 3-cochains:
    T(x1,x2,x3) + T(x2,x1,x3) - T(x1,x3,x2) - T(x2,x3,x1) = 0."""
    if phi3.arity != 3:
        raise ValueError("needs arity 3")
    w1, _ = cochain3_vectors()
    return _annihilated_by(phi3, w1)


def operadic_cochain3_full_check(phi3: MultiMap) -> bool:
    """Both annihilator conditions (w1 and w2)."""
    w1, w2 = cochain3_vectors()
    return _annihilated_by(phi3, w1) and _annihilated_by(phi3, w2)


def operadic_cochain4_check(phi4: MultiMap) -> bool:
    """The two symmetry relations on operadic 4-cochains."""
    if phi4.arity != 4:
        raise ValueError("needs arity 4")
    v4, v4p = cochain4_vectors()
    return _annihilated_by(phi4, v4) and _annihilated_by(phi4, v4p)


# ---------------------------------------------------------------------------
# The degree-3 coboundary ansatz: a 120-unknown linear system.
#
# The ansatz is
#   d3 phi3 (x1..x4) = sum_pi a_pi x_{pi(1)} phi3(x_{pi(2)},x_{pi(3)},x_{pi(4)})
#                    + sum_pi b_pi phi3(x_{pi(1)},x_{pi(2)},x_{pi(3)}) x_{pi(4)}
#                    + sum_pi c_pi phi3(x_{pi(1)}x_{pi(2)}, x_{pi(3)}, x_{pi(4)})
#                    + sum_pi d_pi phi3(x_{pi(1)}, x_{pi(2)}x_{pi(3)}, x_{pi(4)})
#                    + sum_pi e_pi phi3(x_{pi(1)}, x_{pi(2)}, x_{pi(3)}x_{pi(4)})
# over all 24 permutations pi, five families, 120 coefficients in total.
# Demanding d3(d2 phi2) = 0 for every bilinear phi2 over every weakly
# associative algebra is a linear condition: the formal expansion, a vector
# over the 360 degree-one monomials of the free two-operation space (product m
# and formal symbol f), must lie in the span of the consequences of the
# weak-associativity relation applied to the product.
# ---------------------------------------------------------------------------

FAMILIES = ("a", "b", "c", "d", "e")


def _tree_leaves(tree) -> int:
    if tree is LEAF:
        return 1
    return _tree_leaves(tree[1]) + _tree_leaves(tree[2])


def _two_op_trees(n: int, f_count: int) -> list:
    """Binary trees with n leaves, nodes tagged 'm' or 'f', exactly f_count
    'f' nodes."""
    if n == 1:
        return [LEAF] if f_count == 0 else []
    out = []
    for left in range(n - 1, 0, -1):
        for op in ("m", "f"):
            need = f_count - (1 if op == "f" else 0)
            if need < 0:
                continue
            for fl in range(need + 1):
                for lt in _two_op_trees(left, fl):
                    for rt in _two_op_trees(n - left, need - fl):
                        out.append((op, lt, rt))
    return out


def _free_basis4() -> list:
    """The 360 monomials: 15 one-f four-leaf tagged shapes x 24 labelings."""
    basis = []
    for tree in _two_op_trees(4, 1):
        for p in all_perms(4):
            basis.append((tree, p.images))
    return basis


def _relabel(labels, mapping) -> tuple:
    return tuple(mapping[l] for l in labels)


def _subst_leaf(tree, labels, var, replacement_tree, replacement_labels, mapping):
    """Replace the leaf labeled `var` by a subtree; remaining labels pass
    through `mapping`.  Returns (tree, labels)."""
    out_labels = []

    def rec(t, it):
        if t is LEAF:
            l = next(it)
            if l == var:
                out_labels.extend(replacement_labels)
                return replacement_tree
            out_labels.append(mapping[l])
            return LEAF
        return (t[0], rec(t[1], it), rec(t[2], it))

    new_tree = rec(tree, iter(labels))
    return new_tree, tuple(out_labels)


def _delta2_formal() -> list[tuple]:
    """The twelve monomials of the degree-2 coboundary of a formal bilinear
    symbol f over a formal product m, arity 3: list of (tree, labels, coeff)."""
    base = [
        (("m", LEAF, ("f", LEAF, LEAF)), (1, 2, 3), 1),
        (("f", ("m", LEAF, LEAF), LEAF), (1, 2, 3), -1),
        (("f", LEAF, ("m", LEAF, LEAF)), (1, 2, 3), 1),
        (("m", ("f", LEAF, LEAF), LEAF), (1, 2, 3), -1),
    ]
    out = []
    for sigma, s in ((ID3, 1), (C3, 1), (T12, -1)):
        for tree, labels, c in base:
            out.append((tree, tuple(sigma(l) for l in labels), c * s))
    return out


def _wa_relation_monomials() -> list[tuple]:
    """Six pure-product monomials of the weak-associativity expression."""
    from .identities import wa_expression

    return [
        (_tag_m(shape), labels, q)
        for (shape, labels), q in wa_expression().coeffs.items()
    ]


def _tag_m(shape):
    if shape is LEAF:
        return LEAF
    return ("m", _tag_m(shape[0]), _tag_m(shape[1]))


def delta3_unknowns() -> list[tuple[str, tuple[int, ...]]]:
    return [(fam, p.images) for fam in FAMILIES for p in all_perms(4)]


def unknown_label(fam: str, images: tuple[int, ...]) -> str:
    if fam == "a":
        return f"a: x{images[0]} * f(x{images[1]},x{images[2]},x{images[3]})"
    if fam == "b":
        return f"b: f(x{images[0]},x{images[1]},x{images[2]}) * x{images[3]}"
    if fam == "c":
        return f"c: f(x{images[0]}x{images[1]}, x{images[2]}, x{images[3]})"
    if fam == "d":
        return f"d: f(x{images[0]}, x{images[1]}x{images[2]}, x{images[3]})"
    return f"e: f(x{images[0]}, x{images[1]}, x{images[2]}x{images[3]})"


def _column_monomials(fam: str, pi: tuple[int, ...]) -> list[tuple]:
    """Expansion of one ansatz basis operation applied to the formal
    degree-2 coboundary: a list of 4-leaf one-f monomials with coefficients."""
    t_terms = _delta2_formal()
    out = []
    if fam == "a":
        for tree, labels, c in t_terms:
            out.append((("m", LEAF, tree), (pi[0],) + tuple(pi[l] for l in labels), c))
    elif fam == "b":
        for tree, labels, c in t_terms:
            out.append((("m", tree, LEAF), tuple(pi[l - 1] for l in labels) + (pi[3],), c))
    else:
        var = {"c": 1, "d": 2, "e": 3}[fam]
        pairs = {"c": (pi[0], pi[1]), "d": (pi[1], pi[2]), "e": (pi[2], pi[3])}[fam]
        mapping = {
            "c": {2: pi[2], 3: pi[3]},
            "d": {1: pi[0], 3: pi[3]},
            "e": {1: pi[0], 2: pi[1]},
        }[fam]
        for tree, labels, c in t_terms:
            nt, nl = _subst_leaf(tree, labels, var, ("m", LEAF, LEAF), pairs, mapping)
            out.append((nt, nl, c))
    return out


def _consequence_generators() -> tuple[list[dict], list[dict]]:
    """Spanning sets of the two consequence families, as monomial dicts.

    Inner family: the weak-associativity relation with a formal pair
    substituted into one slot.  Outer family: the relation inside one slot of
    the formal symbol.  Both are closed under relabeling by S4.
    """
    wa_terms = _wa_relation_monomials()
    inner = []
    for slot in (1, 2, 3):
        others = [v for v in (1, 2, 3) if v != slot]
        # Canonical pre-relabel instance: pair carries labels (slot, 4),
        # other variables keep their labels.
        base: dict = {}
        for tree, labels, c in wa_terms:
            nt, nl = _subst_leaf(
                tree, labels, slot, ("f", LEAF, LEAF), (slot, 4), {v: v for v in others}
            )
            key = (nt, nl)
            base[key] = base.get(key, 0) + c
        inner.append(base)
    outer = []
    for side in ("left", "right"):
        base = {}
        for tree, labels, c in wa_terms:
            if side == "left":
                key = (("f", tree, LEAF), tuple(labels) + (4,))
            else:
                key = (("f", LEAF, tree), (4,) + tuple(labels))
            base[key] = base.get(key, 0) + c
        outer.append(base)

    def closure(bases):
        out = []
        for base in bases:
            for p in all_perms(4):
                relab = {}
                for (tree, labels), c in base.items():
                    key = (tree, tuple(p(l) for l in labels))
                    relab[key] = relab.get(key, 0) + c
                out.append(relab)
        return out

    return closure(inner), closure(outer)


@dataclass
class Delta3System:
    """Raw and reduced forms of the degree-3 ansatz system."""

    matrix: Matrix                      # 360 x 120, one row per free monomial
    unknowns: list[tuple[str, tuple[int, ...]]]
    monomials: list = field(repr=False)
    consequence_dim: int = 0
    reduced_matrix: Matrix | None = None
    kernel: list[Vector] = field(default_factory=list)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)

    @property
    def assembled_rows(self) -> int:
        return self.matrix.rows

    @property
    def columns(self) -> int:
        return self.matrix.cols


def build_delta3_system() -> Delta3System:
    """Assemble the 360-equation, 120-unknown system and reduce it modulo the
    consequence span; the kernel of the reduced matrix is the space of
    admissible degree-3 coboundary coefficient vectors."""
    basis = _free_basis4()
    index = {mono: i for i, mono in enumerate(basis)}
    nrows = len(basis)
    unknowns = delta3_unknowns()

    cols = []
    for fam, images in unknowns:
        col = [0] * nrows
        for tree, labels, c in _column_monomials(fam, images):
            col[index[(tree, labels)]] += c
        cols.append(col)
    raw = Matrix.from_rows([[cols[j][i] for j in range(len(cols))] for i in range(nrows)])

    inner, outer = _consequence_generators()
    conseq_rows = []
    for gen in inner + outer:
        row = [0] * nrows
        for key, c in gen.items():
            row[index[key]] += c
        conseq_rows.append(row)
    conseq = Matrix.from_rows(conseq_rows)
    conseq_rank, conseq_red = rref(conseq)

    # Normal form modulo the consequence span: eliminate pivot coordinates.
    pivots = []
    col = 0
    for r in range(conseq_rank):
        while conseq_red[r, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    pivot_set = set(pivots)
    free_coords = [j for j in range(nrows) if j not in pivot_set]

    def normal_form(vec):
        v = list(vec)
        for r, p in enumerate(pivots):
            if v[p] != 0:
                f = v[p]
                row = conseq_red.row(r)
                for j in range(nrows):
                    if row[j] != 0:
                        v[j] -= f * row[j]
        return [v[j] for j in free_coords]

    reduced_cols = [normal_form(col) for col in cols]
    reduced = Matrix.from_rows(
        [[reduced_cols[j][i] for j in range(len(cols))] for i in range(len(free_coords))]
    )
    kernel = kernel_basis(reduced)
    return Delta3System(
        matrix=raw,
        unknowns=unknowns,
        monomials=basis,
        consequence_dim=conseq_rank,
        reduced_matrix=reduced,
        kernel=kernel,
    )


def wa_delta3(ctx: CochainContext, phi3: MultiMap, coeffs) -> MultiMap:
    """Degree-3 operator for a chosen coefficient vector (indexed like
    `delta3_unknowns()`)."""
    if phi3.arity != 3:
        raise ValueError("needs arity 3")
    alg = ctx.alg
    n = alg.dim
    unknowns = delta3_unknowns()
    if len(coeffs) != len(unknowns):
        raise ValueError("coefficient vector must have 120 entries")

    def fn(*idx):
        out = [0] * n
        for q, (fam, pi) in zip(coeffs, unknowns):
            if q == 0:
                continue
            slots = tuple(idx[p - 1] for p in pi)
            if fam == "a":
                val = alg.lmul_basis(slots[0], phi3.values[slots[1:]])
            elif fam == "b":
                val = alg.rmul_basis(phi3.values[slots[:3]], slots[3])
            else:
                if fam == "c":
                    merged, rest = alg.product(slots[0], slots[1]), (slots[2], slots[3])
                    pos = 0
                elif fam == "d":
                    merged, rest = alg.product(slots[1], slots[2]), (slots[0], slots[3])
                    pos = 1
                else:
                    merged, rest = alg.product(slots[2], slots[3]), (slots[0], slots[1])
                    pos = 2
                acc = [0] * n
                for a in range(n):
                    if merged[a] != 0:
                        key = rest[:pos] + (a,) + rest[pos:]
                        val2 = phi3.values[key]
                        for t in range(n):
                            if val2[t] != 0:
                                acc[t] += merged[a] * val2[t]
                val = acc
            for t in range(n):
                if val[t] != 0:
                    out[t] += q * val[t]
        return tuple(out)

    return MultiMap.from_function(4, n, fn)


def delta3_relabel_coeffs(coeffs, s: Perm):
    """Action of precomposing the assembled operator with a slot permutation:
    (fam, pi) -> (fam, s . pi).  Solutions are stable under it."""
    unknowns = delta3_unknowns()
    pos = {u: i for i, u in enumerate(unknowns)}
    out = [0] * len(unknowns)
    for q, (fam, pi) in zip(coeffs, unknowns):
        target = (fam, tuple(s(p) for p in pi))
        out[pos[target]] += q
    return tuple(out)

"""Degree-graded chain complexes over the truncated free algebra.

Chains of length n are (n+1)-tuples of basis labels, graded by total degree;
the boundary maps are

  b_n(m, a1, .., an) = (m a1, a2, .., an)
                       + sum_{i=1}^{n-1} (-1)^i (m, a1, .., a_i a_{i+1}, .., an)
                       + (-1)^n (a_n m, a1, .., a_{n-1})

with the weakly associative variants
  b2^wa = b2 + b2 . cyclic - b2 . swap12  and  b3^wa = b3 + b3 . swap24.

Every product in a degree-k boundary stays in degree k, so homology in degree
k is exact as soon as the truncation bound is at least k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .freewa import FreeTruncation, as_truncated_algebra, build
from .linalg import Matrix, rank


@dataclass
class ChainComplex:
    trunc: FreeTruncation

    @staticmethod
    def up_to_degree(max_degree: int) -> "ChainComplex":
        return ChainComplex(as_truncated_algebra(build(max_degree)))

    def _check_degree(self, k: int):
        if k > self.trunc.max_degree:
            raise ValueError(
                f"degree {k} beyond the trusted bound {self.trunc.max_degree}"
            )

    def chain_basis(self, n: int, k: int) -> list[tuple[int, ...]]:
        """Index tuples (m, a1..an) with degrees summing to k, lex order."""
        self._check_degree(k)
        labels = self.trunc.labels
        by_degree: dict[int, list[int]] = {}
        for i, l in enumerate(labels):
            by_degree.setdefault(l.degree, []).append(i)
        out = []

        def rec(prefix, remaining, slots):
            if slots == 0:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            for d in range(remaining + 1):
                for i in by_degree.get(d, []):
                    rec(prefix + [i], remaining - d, slots - 1)

        rec([], k, n + 1)
        return out

    def chain_dim(self, n: int, k: int) -> int:
        return len(self.chain_basis(n, k))

    def _raw_boundary_terms(self, n: int, chain: tuple[int, ...]):
        """Image of one basis chain under b_n: list of (coeff, target chain).
        Products of basis labels are single basis labels here (or drop to the
        zero chain above the bound, which cannot happen within degree k)."""
        alg = self.trunc.algebra
        idx = self.trunc.index
        labels = self.trunc.labels

        def prod(i, j):
            vec = alg.product(i, j)
            hits = [t for t, q in enumerate(vec) if q != 0]
            if not hits:
                return None
            return hits[0]

        m, rest = chain[0], list(chain[1:])
        out = []
        p = prod(m, rest[0])
        if p is not None:
            out.append((1, tuple([p] + rest[1:])))
        sign = -1
        for i in range(len(rest) - 1):
            p = prod(rest[i], rest[i + 1])
            if p is not None:
                out.append((sign, tuple([m] + rest[:i] + [p] + rest[i + 2 :])))
            sign = -sign
        p = prod(rest[-1], m)
        if p is not None:
            out.append((sign, tuple([p] + rest[:-1])))
        return out

    def _boundary_on_chain(self, n: int, chain: tuple[int, ...], variant: str):
        if variant == "plain":
            return self._raw_boundary_terms(n, chain)
        if variant != "wa":
            raise ValueError(f"unknown variant {variant!r}")
        if n == 1:
            return self._raw_boundary_terms(1, chain)
        if n == 2:
            m, a2, a3 = chain
            out = []
            for coeff, src in ((1, (m, a2, a3)), (1, (a2, a3, m)), (-1, (a2, m, a3))):
                for c, t in self._raw_boundary_terms(2, src):
                    out.append((coeff * c, t))
            return out
        if n == 3:
            m, a2, a3, a4 = chain
            out = []
            for src in ((m, a2, a3, a4), (m, a4, a3, a2)):
                out.extend(self._raw_boundary_terms(3, src))
            return out
        raise ValueError("chain length must be 1, 2 or 3")

    def boundary(self, n: int, k: int, variant: str = "plain") -> Matrix:
        """Matrix of b_n (or its wa variant) from C_n^k to C_(n-1)^k."""
        if n not in (1, 2, 3):
            raise ValueError("chain length must be 1, 2 or 3")
        src = self.chain_basis(n, k)
        dst = self.chain_basis(n - 1, k)
        dst_index = {c: i for i, c in enumerate(dst)}
        cols = []
        for chain in src:
            col = [Fraction(0)] * len(dst)
            for coeff, target in self._boundary_on_chain(n, chain, variant):
                col[dst_index[target]] += coeff
            cols.append(col)
        return Matrix.from_rows(
            [[cols[j][i] for j in range(len(src))] for i in range(len(dst))]
        )

    def homology_dim(self, n: int, k: int) -> int:
        """H_0 = C_0 / im b_1;  H_1 = ker b_1 / im b_2;  H_2 = ker b_2 / im b_3^wa."""
        self._check_degree(k)
        if n == 0:
            return self.chain_dim(0, k) - rank(self.boundary(1, k, "plain"))
        if n == 1:
            ker = self.chain_dim(1, k) - rank(self.boundary(1, k, "plain"))
            return ker - rank(self.boundary(2, k, "plain"))
        if n == 2:
            b2 = self.boundary(2, k, "plain")
            ker = self.chain_dim(2, k) - rank(b2)
            return ker - rank(self.boundary(3, k, "wa"))
        raise ValueError("homology implemented for chain degrees 0, 1, 2")

    def table(self, max_degree: int | None = None) -> list[dict]:
        """Rows {n, k, dimC, rank, dimH} for n = 0..2, k = 0..bound."""
        bound = self.trunc.max_degree if max_degree is None else max_degree
        rows = []
        for n in range(0, 3):
            for k in range(0, bound + 1):
                bmat = self.boundary(n + 1, k, "wa" if n == 2 else "plain")
                rows.append(
                    {
                        "n": n,
                        "k": k,
                        "dimC": self.chain_dim(n, k),
                        "rank": rank(bmat),
                        "dimH": self.homology_dim(n, k),
                    }
                )
        return rows

    def composition_vanishing_report(self, max_degree: int | None = None) -> dict:
        """Matrix-level checks: b1 b2 = 0 and b2 b3^wa = 0 in every degree up
        to the bound, plus agreement of b2 with its wa variant (the algebra is
        commutative, so the two boundaries coincide)."""
        bound = self.trunc.max_degree if max_degree is None else max_degree
        b1b2 = []
        b2b3 = []
        b2_variants_equal = []
        for k in range(0, bound + 1):
            b1 = self.boundary(1, k, "plain")
            b2 = self.boundary(2, k, "plain")
            b2wa = self.boundary(2, k, "wa")
            b3wa = self.boundary(3, k, "wa")
            b1b2.append((b1 @ b2).is_zero())
            b2b3.append((b2 @ b3wa).is_zero())
            b2_variants_equal.append(b2 == b2wa)
        return {
            "b1b2_zero": all(b1b2),
            "b2b3wa_zero": all(b2b3),
            "b2_equals_b2wa": all(b2_variants_equal),
            "per_degree": {
                k: {
                    "b1b2": b1b2[k],
                    "b2b3wa": b2b3[k],
                    "b2_eq_b2wa": b2_variants_equal[k],
                }
                for k in range(bound + 1)
            },
        }


def b1b2_symbolic_identity() -> bool:
    """A(x,y,z) + A(y,z,x) + A(z,x,y) equals the weak-associativity
    expression symmetrized by Id + (12) + c2, as identity vectors."""
    from .identities import apply_group_vector, associator, wa_expression
    from .symgroup import C3, C3SQ, ID3, T12, ga

    cyclic = apply_group_vector(associator(), ga(3, (1, ID3), (1, C3), (1, C3SQ)))
    wa_sym = apply_group_vector(wa_expression(), ga(3, (1, ID3), (1, T12), (1, C3SQ)))
    return cyclic == wa_sym

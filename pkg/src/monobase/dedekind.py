"""Dedekind's index criterion at a prime p, in full generality.

For monic f and the order Z[x]/(f), p divides the index of that order in the
maximal order iff some repeated factor of f mod p divides the reduction of

    M = (f - prod lifts**multiplicity) / p

where the lifts take each monic irreducible factor with coefficients in
[0, p).  The division by p is exact by construction; its exactness is asserted
because a failure there means the mod-p factorization was wrong.

This route never looks at the shape of f, so it serves as the independent
oracle for the divisibility criteria in index_criteria.
"""

from __future__ import annotations

from dataclasses import dataclass

from .integer_core import DEFAULT_SEED
from .polynomials import FpPoly, FpPolyFactorization, ZPoly, factor_mod_p


def compute_M(f: ZPoly, p: int, factorization: FpPolyFactorization) -> FpPoly:
    """Reduction mod p of (f - prod lifts**e) / p.

    Raises ArithmeticError if the difference is not divisible by p, which can
    only happen when `factorization` does not actually factor f mod p.
    """
    if factorization.p != p:
        raise ValueError("factorization modulus does not match p")
    prod = ZPoly((factorization.unit,))
    for g, e in factorization.factors:
        prod = prod * ZPoly(g.coeffs) ** e
    diff = f - prod
    lifted = []
    for coef in diff.coeffs:
        q, r = divmod(coef, p)
        if r:
            raise ArithmeticError(
                "f - prod(lifts) is not divisible by p: broken factorization"
            )
        lifted.append(q)
    return FpPoly.from_int_coeffs(lifted, p)


@dataclass(frozen=True)
class DedekindWitness:
    """Everything needed to audit a divides/not-divides verdict."""

    factorization: FpPolyFactorization
    m_reduced: FpPoly
    offending_index: int | None  # index into factorization.factors, or None

    @property
    def offending_factor(self) -> FpPoly | None:
        if self.offending_index is None:
            return None
        return self.factorization.factors[self.offending_index][0]

    def to_dict(self) -> dict:
        out = {
            "factorization": self.factorization.to_dict(),
            "m_reduced": list(self.m_reduced.coeffs),
            "offending_index": self.offending_index,
        }
        if self.offending_index is not None:
            out["offending_factor"] = list(self.offending_factor.coeffs)
        return out


def dedekind_divides_index(
    f: ZPoly, p: int, *, seed: int = DEFAULT_SEED
) -> tuple[bool, DedekindWitness]:
    """Whether p divides [maximal order : Z[x]/(f)], with an audit witness.

    Requires monic f of degree >= 1 and prime p (checked by factor_mod_p).
    Deterministic for a fixed seed.
    """
    if f.is_zero or not f.is_monic:
        raise ValueError("Dedekind criterion requires a monic polynomial")
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    factorization = factor_mod_p(f, p, seed=seed)
    m_reduced = compute_M(f, p, factorization)
    offending = None
    for i, (g, e) in enumerate(factorization.factors):
        if e > 1 and g.divides(m_reduced):
            offending = i
            break
    return offending is not None, DedekindWitness(factorization, m_reduced, offending)

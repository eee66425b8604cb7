"""Per-prime index divisibility for x**n + a*x**2 + b*x + c with b**2 = 4ac.

For each prime p dividing disc(f) there is a pure divisibility test on
(n, a, b, c) deciding whether p divides the index [maximal order : Z[theta]].
The applicable test is selected by how p sits against a, b, c:

    p coprime to b                      -> case_coprime_to_b
    p | a and p | c                     -> case_divides_a_and_c
    p | a only                          -> case_divides_a_only
    p | c only                          -> case_divides_c_only
    otherwise (forces p = 2, 2 coprime to ac) -> case_two_coprime_to_ac

Each test returns passes=True when p does NOT divide the index.  The case
hypotheses imply side conditions (e.g. p | a forces p | n); those are
re-derived at runtime and, should one ever fail, the caller falls back to the
general Dedekind criterion and tags the verdict source accordingly.

case_divides_a_only works with exact derived integers

    r = v_p(n),   b1 = b/p,   c1 = (c + (-c)**(p**r)) / p

(the division exact by Fermat's little theorem; parity for p = 2), while
case_divides_c_only needs none: there the constraint b**2 = 4ac forces
p**2 | c, which already decides the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from .dedekind import dedekind_divides_index
from .discriminant import QuadrinomialSpec, quadrinomial_discriminant
from .integer_core import (
    DEFAULT_EFFORT,
    DEFAULT_SEED,
    EffortConfig,
    factor_integer,
    p_valuation,
    squarefree_status,
)


class CaseTag(Enum):
    P_DIVIDES_A_AND_C = "p_divides_a_and_c"
    P_DIVIDES_A_ONLY = "p_divides_a_only"
    P_DIVIDES_C_ONLY = "p_divides_c_only"
    P_IS_2_COPRIME_TO_AC = "p_is_2_coprime_to_ac"
    P_COPRIME_TO_B = "p_coprime_to_b"


class CaseMismatchError(ValueError):
    """The requested case test does not apply to (spec, p)."""


class CriterionScopeError(ArithmeticError):
    """A derived side condition of the selected case failed at runtime."""


@dataclass(frozen=True)
class CaseVerdict:
    """Outcome of one case test: passes=True means p does not divide the index."""

    tag: CaseTag
    passes: bool
    witnesses: dict[str, int] = field(default_factory=dict)
    source: str = "theorem"  # "theorem" | "oracle_fallback"

    def to_dict(self) -> dict:
        return {
            "case": self.tag.value,
            "passes": self.passes,
            "witnesses": dict(self.witnesses),
            "source": self.source,
        }


def classify_prime(
    spec: QuadrinomialSpec, p: int, discriminant: int | None = None
) -> CaseTag:
    """Which case test applies to p.  Requires p >= 2 dividing disc(f)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if discriminant is None:
        discriminant = quadrinomial_discriminant(spec)
    if discriminant % p != 0:
        raise ValueError(f"{p} does not divide the discriminant")
    a, b, c = spec.a, spec.b, spec.c
    if b % p != 0:
        return CaseTag.P_COPRIME_TO_B
    if a % p == 0 and c % p == 0:
        return CaseTag.P_DIVIDES_A_AND_C
    if a % p == 0:
        return CaseTag.P_DIVIDES_A_ONLY
    if c % p == 0:
        return CaseTag.P_DIVIDES_C_ONLY
    # p | b, p coprime to a and c: b**2 = 4ac rules out odd p, so p = 2.
    if p != 2 or (a * c) % 2 == 0:
        raise ArithmeticError("case split is not exhaustive: impossible residues")
    return CaseTag.P_IS_2_COPRIME_TO_AC


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CaseMismatchError(message)


def case_divides_a_and_c(spec: QuadrinomialSpec, p: int) -> CaseVerdict:
    """p | a, p | c: the index stays coprime to p iff p**2 does not divide c."""
    _require(spec.a % p == 0 and spec.c % p == 0, "case requires p | a and p | c")
    passes = spec.c % (p * p) != 0
    return CaseVerdict(CaseTag.P_DIVIDES_A_AND_C, passes)


def case_divides_a_only(spec: QuadrinomialSpec, p: int) -> CaseVerdict:
    """p | a, p coprime to c.  Derived: p | b and p | n."""
    n, b, c = spec.n, spec.b, spec.c
    _require(spec.a % p == 0 and c % p != 0, "case requires p | a and p coprime to c")
    if b % p != 0:
        raise CriterionScopeError("expected p | b when p | a")
    if n % p != 0:
        raise CriterionScopeError("expected p | n when p | a and p coprime to c")
    r, _ = p_valuation(n, p)
    b1 = b // p
    c1_num = c + (-c) ** (p**r)
    if c1_num % p != 0:
        raise CriterionScopeError("c1 is not integral")
    c1 = c1_num // p
    if b1 % p == 0 and c1 % p != 0:
        passes = True
    else:
        bracket = (pow(-c1 % p, n, p) + c % p * pow(b1 % p, n, p)) % p
        passes = b1 * bracket % p != 0
    return CaseVerdict(
        CaseTag.P_DIVIDES_A_ONLY, passes, {"r": r, "b1": b1, "c1": c1}
    )


def case_divides_c_only(spec: QuadrinomialSpec, p: int) -> CaseVerdict:
    """p | c, p coprime to a: p always divides the index.

    Derived: p | b and p**2 | c (odd p: v_p(c) = 2*v_p(b); p = 2: v_2(b) >= 2
    and v_2(c) = 2*v_2(b) - 2).  Then f = x**2 * (x**(n-2) + a) mod p with x
    of multiplicity exactly two, and (f - product of coefficient-reduced
    monic lifts)/p has constant term c/p = 0 mod p, so the repeated factor x
    divides it: p divides the index for every value of v_p(n - 2).
    """
    n, a, b, c = spec.n, spec.a, spec.b, spec.c
    _require(c % p == 0 and a % p != 0, "case requires p | c and p coprime to a")
    if b % p != 0:
        raise CriterionScopeError("expected p | b when p | c")
    if c % (p * p) != 0:
        raise CriterionScopeError("expected p**2 | c when p | c and p coprime to a")
    l, _ = p_valuation(n - 2, p)
    vc, _ = p_valuation(c, p)
    return CaseVerdict(CaseTag.P_DIVIDES_C_ONLY, False, {"l": l, "vp_c": vc})


def case_two_coprime_to_ac(spec: QuadrinomialSpec, p: int) -> CaseVerdict:
    """p = 2 with a, c odd.  Derived: 2 | n and v_2(b) = 1."""
    _require(p == 2, "case only applies to p = 2")
    a, b, c = spec.a, spec.b, spec.c
    _require((a * c) % 2 != 0, "case requires a and c odd")
    if spec.n % 2 != 0:
        raise CriterionScopeError("expected 2 | n when 2 is coprime to ac")
    if b % 2 != 0 or (b // 2) % 2 == 0:
        raise CriterionScopeError("expected v_2(b) = 1")
    passes = a % 4 == 1 or c % 4 == 1
    return CaseVerdict(CaseTag.P_IS_2_COPRIME_TO_AC, passes)


def case_coprime_to_b(
    spec: QuadrinomialSpec, p: int, discriminant: int | None = None
) -> CaseVerdict:
    """p coprime to b.  Derived: p odd, coprime to a, c and n(n-2).

    Here p divides the index iff p**2 divides disc(f); the witness records
    v_p(disc).
    """
    _require(spec.b % p != 0, "case requires p coprime to b")
    if p == 2:
        # b**2 = 4ac forces b even, so 2 never lands here for a valid spec.
        raise CriterionScopeError("2 divides every admissible b")
    if (spec.n * (spec.n - 2)) % p == 0:
        raise CriterionScopeError("expected p coprime to n(n-2)")
    if discriminant is None:
        discriminant = quadrinomial_discriminant(spec)
    v, _ = p_valuation(discriminant, p)
    return CaseVerdict(CaseTag.P_COPRIME_TO_B, v < 2, {"vp_disc": v})


_CASE_DISPATCH = {
    CaseTag.P_DIVIDES_A_AND_C: case_divides_a_and_c,
    CaseTag.P_DIVIDES_A_ONLY: case_divides_a_only,
    CaseTag.P_DIVIDES_C_ONLY: case_divides_c_only,
    CaseTag.P_IS_2_COPRIME_TO_AC: case_two_coprime_to_ac,
}


def prime_divides_index(
    spec: QuadrinomialSpec,
    p: int,
    discriminant: int | None = None,
    *,
    seed: int = DEFAULT_SEED,
) -> CaseVerdict:
    """Verdict for one prime p | disc(f), falling back to the Dedekind
    criterion if a derived side condition unexpectedly fails."""
    if discriminant is None:
        discriminant = quadrinomial_discriminant(spec)
    tag = classify_prime(spec, p, discriminant)
    try:
        if tag is CaseTag.P_COPRIME_TO_B:
            return case_coprime_to_b(spec, p, discriminant)
        return _CASE_DISPATCH[tag](spec, p)
    except CriterionScopeError:
        divides, _ = dedekind_divides_index(spec.polynomial(), p, seed=seed)
        return CaseVerdict(tag, not divides, {}, source="oracle_fallback")


@dataclass(frozen=True)
class MonogenicityVerdict:
    """Tri-state verdict; witness is a prime dividing the index when refuted."""

    status: str  # "monogenic" | "not_monogenic" | "unknown"
    witness: int | None = None

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def binomial_integral_basis(
    n: int, c: int, effort: EffortConfig = DEFAULT_EFFORT
) -> MonogenicityVerdict:
    """Monogenicity of x**n - c (irreducibility assumed, theta a root).

    Z[theta] is maximal iff c is squarefree and, for every prime p | n with
    p coprime to c and r = v_p(n), p**2 does not divide c**(p**r) - c.
    """
    if n < 2:
        raise ValueError("degree must be at least 2")
    if c == 0:
        raise ValueError("c must be nonzero")
    for p, _ in factor_integer(n, effort).factors:
        if c % p != 0:
            r, _ = p_valuation(n, p)
            p2 = p * p
            if (pow(c, p**r, p2) - c) % p2 == 0:
                return MonogenicityVerdict("not_monogenic", p)
    sf = squarefree_status(c, effort)
    if sf.status == "not_squarefree":
        return MonogenicityVerdict("not_monogenic", sf.witness)
    if sf.status == "unknown":
        return MonogenicityVerdict("unknown")
    return MonogenicityVerdict("monogenic")


def _support_subset(x: int, y: int) -> bool:
    """True iff every prime dividing x also divides y (x, y nonzero)."""
    x, y = abs(x), abs(y)
    while True:
        g = gcd(x, y)
        if g == 1:
            return x == 1
        while x % g == 0:
            x //= g


def _same_support(x: int, y: int) -> bool:
    return _support_subset(x, y) and _support_subset(y, x)


def shared_support_fastpath(
    spec: QuadrinomialSpec, effort: EffortConfig = DEFAULT_EFFORT
) -> MonogenicityVerdict | None:
    """Shortcut verdict when a and c share their prime support.

    Applies when c is squarefree, c != +-1, a and c have the same prime
    divisors, and either 2 | c or (n is odd and a = 1 or c = 1 mod 4).  Then
    primes dividing a pass automatically and the field is monogenic iff no
    other prime divides disc(f) twice.  Returns None when not applicable.

    The parity guard on n matters: for even n with a, c odd, 4 | disc(f)
    whenever 2 | disc(f), yet 2 can still pass by the mod 4 test, so the
    squarefreeness reading of disc(f) would be wrong there.
    """
    a, c, n = spec.a, spec.c, spec.n
    if c in (1, -1) or a == 0:
        return None
    if not squarefree_status(c, effort).is_squarefree:
        return None
    if not _same_support(a, c):
        return None
    if c % 2 != 0 and not (n % 2 != 0 and (a % 4 == 1 or c % 4 == 1)):
        return None
    disc = quadrinomial_discriminant(spec)
    fac = factor_integer(disc, effort)
    for p, e in fac.factors:
        if a % p != 0 and e >= 2:
            return MonogenicityVerdict("not_monogenic", p)
    if not fac.is_complete:
        return MonogenicityVerdict("unknown")
    return MonogenicityVerdict("monogenic")

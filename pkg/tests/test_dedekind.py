"""Dedekind index criterion: worked examples, witnesses, lift independence."""

import random

import pytest

from helpers import random_specs
from monobase import FpPoly, ZPoly, compute_M, dedekind_divides_index, factor_mod_p
from monobase.polynomials import FpPolyFactorization


def test_quadratic_worked_examples():
    # Z[sqrt(5)] has index 2 in the maximal order; Z[i] is maximal.
    divides, wit = dedekind_divides_index(ZPoly((-5, 0, 1)), 2)
    assert divides
    assert wit.m_reduced == FpPoly(2, (1, 1))
    assert wit.offending_factor == FpPoly(2, (1, 1))
    divides, wit = dedekind_divides_index(ZPoly((1, 0, 1)), 2)
    assert not divides
    assert wit.offending_index is None


def test_cubic_and_quintic_known_fields():
    # x^3 - 2: Z[cbrt(2)] is the maximal order, so no prime divides.
    for p in (2, 3):
        divides, _ = dedekind_divides_index(ZPoly((-2, 0, 0, 1)), p)
        assert not divides
    # x^3 - 10: 10 = 1 mod 9 makes 3 divide the index.
    divides, _ = dedekind_divides_index(ZPoly((-10, 0, 0, 1)), 3)
    assert divides
    # x^7 + 2x^2 + 4x + 2: 3 divides the index (and 2 does not: Eisenstein).
    f = ZPoly((2, 4, 2, 0, 0, 0, 0, 1))
    assert dedekind_divides_index(f, 3)[0]
    assert not dedekind_divides_index(f, 2)[0]


def test_eisenstein_polynomials_never_divide_at_their_prime():
    # Orders cut out by Eisenstein polynomials are maximal at that prime.
    rng = random.Random(911)
    for p in (2, 3, 5, 7, 11):
        for _ in range(20):
            n = rng.randint(2, 8)
            coeffs = [p * rng.randint(-6, 6) for _ in range(n)] + [1]
            coeffs[0] = p * rng.choice((1, -1, 3, -3, 5))
            if coeffs[0] % (p * p) == 0:
                coeffs[0] = p
            f = ZPoly(tuple(coeffs))
            divides, _ = dedekind_divides_index(f, p)
            assert not divides, (p, coeffs)


def test_case3_instances_always_divide():
    # p | c, p coprime to a: the repeated factor x always divides M mod p.
    for coeffs, p in (
        ((9, 6, 1, 0, 0, 1), 3),       # x^5 + x^2 + 6x + 9
        ((18, 12, 2, 0, 0, 1), 3),     # x^5 + 2x^2 + 12x + 18
        ((4, 4, 1, 0, 0, 0, 1), 2),    # x^6 + x^2 + 4x + 4
        ((18, 12, 2, 0, 0, 0, 0, 1), 3),  # x^7 + 2x^2 + 12x + 18
    ):
        divides, wit = dedekind_divides_index(ZPoly(coeffs), p)
        assert divides
        assert wit.m_reduced.coeffs[0:1] in ((), (0,))  # constant term vanishes


def test_witness_reconstructs_m():
    f = ZPoly((2, 4, 2, 0, 0, 0, 0, 1))
    divides, wit = dedekind_divides_index(f, 3)
    assert divides
    m = compute_M(f, 3, wit.factorization)
    assert m == wit.m_reduced
    doc = wit.to_dict()
    assert doc["offending_index"] is not None
    assert doc["offending_factor"] == list(wit.offending_factor.coeffs)


def test_compute_m_rejects_wrong_factorization():
    f = ZPoly((-5, 0, 1))
    wrong = FpPolyFactorization(2, 1, ((FpPoly(2, (0, 1)), 2),))  # claims x^2
    with pytest.raises(ArithmeticError):
        compute_M(f, 2, wrong)
    with pytest.raises(ValueError):
        compute_M(f, 3, factor_mod_p(f, 2))


def test_input_validation():
    with pytest.raises(ValueError):
        dedekind_divides_index(ZPoly((1, 2)), 2)  # not monic
    with pytest.raises(ValueError):
        dedekind_divides_index(ZPoly((1,)), 2)  # degree 0
    with pytest.raises(ValueError):
        dedekind_divides_index(ZPoly((1, 0, 1)), 4)  # composite p


def _dedekind_with_random_lifts(f: ZPoly, p: int, rng: random.Random) -> bool:
    """Independent criterion evaluation using randomized monic lifts."""
    fac = factor_mod_p(f, p, seed=rng.randrange(2**30))
    lifts = []
    for g, e in fac.factors:
        shift = tuple(
            c + p * rng.randint(-3, 3) for c in g.coeffs[:-1]
        ) + (1,)
        lifts.append((ZPoly(shift), e))
    prod = ZPoly((1,))
    for g, e in lifts:
        prod = prod * g**e
    diff = f - prod
    m_coeffs = []
    for coef in diff.coeffs:
        q, r = divmod(coef, p)
        assert r == 0  # the product reduces to f mod p by construction
        m_coeffs.append(q)
    mbar = FpPoly.from_int_coeffs(m_coeffs, p)
    return any(
        e > 1 and g.reduce_mod(p).divides(mbar) for g, e in lifts
    )


def test_lift_independence():
    # The criterion's verdict cannot depend on which monic lifts are chosen.
    rng = random.Random(88)
    specs = random_specs(88, 40, n_range=(3, 8), coeff_bound=8)
    checked = 0
    for spec in specs:
        f = spec.polynomial()
        for p in (2, 3, 5, 7):
            baseline, _ = dedekind_divides_index(f, p)
            for _ in range(3):
                assert _dedekind_with_random_lifts(f, p, rng) == baseline, (spec, p)
            checked += 1
    assert checked == 160

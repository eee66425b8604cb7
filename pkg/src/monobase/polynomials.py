"""Exact polynomial arithmetic over Z and F_p.

Polynomials are coefficient sequences in *ascending* degree order with no
trailing zeros, so coeffs[i] is the coefficient of x**i and the zero
polynomial is the empty tuple.

Resultants over Z use the subresultant polynomial remainder sequence, which
keeps every intermediate value an exact integer.  Factorization over F_p is
the classical squarefree / distinct-degree / equal-degree pipeline with
Cantor-Zassenhaus splitting; the only randomness is the splitting element,
drawn from a generator seeded by (seed, p, coefficients).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .integer_core import DEFAULT_SEED, is_prime


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num} / {den}")
    return q


@dataclass(frozen=True)
class ZPoly:
    """Integer polynomial, ascending coefficients, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        cs = tuple(self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_coeffs(cls, coeffs) -> "ZPoly":
        return cls(tuple(int(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls(())

    @classmethod
    def one(cls) -> "ZPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "ZPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def __add__(self, other: "ZPoly") -> "ZPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPoly(tuple(out))

    def __neg__(self) -> "ZPoly":
        return ZPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ZPoly(tuple(out))

    def __pow__(self, e: int) -> "ZPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = ZPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, k: int) -> "ZPoly":
        return ZPoly(tuple(k * c for c in self.coeffs))

    def derivative(self) -> "ZPoly":
        return ZPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def reduce_mod(self, p: int) -> "FpPoly":
        return FpPoly.from_int_coeffs(self.coeffs, p)

    def __str__(self) -> str:
        return _format_poly(self.coeffs)


def _format_poly(coeffs, var: str = "x") -> str:
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else f"{mag}*"
            body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Resultants over Z.


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a = q*b + r."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, cb in enumerate(b):
            r[shift + j] -= lr * cb
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        m = lb**e
        r = [m * c for c in r]
    return r


def _content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
    return g or 1


def _res_ascending(a: list[int], b: list[int]) -> int:
    """Res(a, b) = lc(a)**deg(b) * prod b(alpha) over roots alpha of a.

    Subresultant PRS with the classical g/h bookkeeping; every division is
    exact by the subresultant theorem.
    """
    s = 1
    if len(a) < len(b):
        if (len(a) - 1) & 1 and (len(b) - 1) & 1:
            s = -1
        a, b = b, a
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return 1
    ca, cb = _content(a), _content(b)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = s * ca**db * cb**da
    if db == 0:
        return t * b[0] ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if (da & 1) and (db & 1):
            t = -t
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h**delta
        b = [_exact_div(c, denom) for c in r]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exact_div(g**delta, h ** (delta - 1))
        if len(b) - 1 == 0:
            break
    da = len(a) - 1
    final = _exact_div(b[-1] ** da, h ** (da - 1)) if da >= 1 else 1
    return t * final


def resultant(f: ZPoly, g: ZPoly) -> int:
    """Resultant normalized so that res(f, g) = lc(g)**deg(f) * prod f(gamma)
    over the roots gamma of g (with multiplicity)."""
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    return _res_ascending(list(g.coeffs), list(f.coeffs))


def discriminant_via_resultant(f: ZPoly) -> int:
    """disc(f) for monic f of degree >= 2, via res(f', f)."""
    if not f.is_monic:
        raise ValueError("discriminant route requires a monic polynomial")
    n = f.degree
    if n < 2:
        raise ValueError("discriminant requires degree >= 2")
    sign = -1 if (n * (n - 1) // 2) & 1 else 1
    return sign * resultant(f.derivative(), f)


# ---------------------------------------------------------------------------
# Arithmetic in F_p[x] on raw ascending coefficient lists.


def _fp_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _fp_add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _fp_trim(out)


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _fp_trim(out)


def _fp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _fp_trim([c % p for c in out])


def _fp_scale(a: list[int], k: int, p: int) -> list[int]:
    k %= p
    return _fp_trim([c * k % p for c in a])


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _fp_trim(rem)
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] * inv % p
        if c:
            quo[k - db] = c
            for j, cb in enumerate(b):
                rem[k - db + j] = (rem[k - db + j] - c * cb) % p
    return _fp_trim(quo), _fp_trim(rem)


def _fp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    return _fp_divmod(a, b, p)[1]


def _fp_quo(a: list[int], b: list[int], p: int) -> list[int]:
    q, r = _fp_divmod(a, b, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _fp_monic(a: list[int], p: int) -> list[int]:
    if not a or a[-1] == 1:
        return list(a)
    return _fp_scale(a, pow(a[-1], -1, p), p)


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _fp_rem(a, b, p)
    return _fp_monic(a, p)


def _fp_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_rem(base, mod, p)
    while e:
        if e & 1:
            result = _fp_rem(_fp_mul(result, base, p), mod, p)
        base = _fp_rem(_fp_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _fp_deriv(a: list[int], p: int) -> list[int]:
    return _fp_trim([i * c % p for i, c in enumerate(a)][1:])


@dataclass(frozen=True)
class FpPoly:
    """Polynomial over F_p: modulus plus ascending residue coefficients."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError("modulus must be at least 2")
        cs = tuple(c % self.p for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_int_coeffs(cls, coeffs, p: int) -> "FpPoly":
        return cls(p, tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise ValueError("mixed moduli")

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, tuple(_fp_add(list(self.coeffs), list(other.coeffs), self.p)))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, tuple(_fp_sub(list(self.coeffs), list(other.coeffs), self.p)))

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, tuple(_fp_mul(list(self.coeffs), list(other.coeffs), self.p)))

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(self.p, tuple(_fp_rem(list(self.coeffs), list(other.coeffs), self.p)))

    def divides(self, other: "FpPoly") -> bool:
        """True iff self divides other in F_p[x]."""
        self._check(other)
        if self.is_zero:
            return other.is_zero
        return not _fp_rem(list(other.coeffs), list(self.coeffs), self.p)

    def monic(self) -> "FpPoly":
        return FpPoly(self.p, tuple(_fp_monic(list(self.coeffs), self.p)))

    def __str__(self) -> str:
        return _format_poly(self.coeffs)


def gcd_mod_p(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd in F_p[x]; gcd(0, g) = monic g.  Rejects gcd(0, 0)."""
    if f.p != g.p:
        raise ValueError("mixed moduli")
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    return FpPoly(f.p, tuple(_fp_gcd(list(f.coeffs), list(g.coeffs), f.p)))


# ---------------------------------------------------------------------------
# Factorization in F_p[x].


def _fp_sqf_list(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of monic f, characteristic-p aware."""
    factors: list[tuple[list[int], int]] = []
    mult = 1
    while True:
        d = _fp_deriv(f, p)
        if d:
            g = _fp_gcd(f, d, p)
            h = _fp_quo(f, g, p)
            i = 1
            while h != [1]:
                gh = _fp_gcd(g, h, p)
                part = _fp_quo(h, gh, p)
                if len(part) > 1:
                    factors.append((part, i * mult))
                g = _fp_quo(g, gh, p)
                h = gh
                i += 1
            if g == [1]:
                return factors
            f = g
        # Here f has zero derivative: f = w(x**p), and w is its p-th root
        # because Frobenius fixes the coefficients.
        f = f[::p]
        mult *= p


def _fp_ddf(f: list[int], p: int) -> list[tuple[list[int], int]]:
    """Distinct-degree factorization of monic squarefree f: (product, degree)."""
    out: list[tuple[list[int], int]] = []
    x = [0, 1]
    h = _fp_rem(x, f, p)
    i = 1
    while 2 * i <= len(f) - 1:
        h = _fp_pow_mod(h, p, f, p)
        g = _fp_gcd(_fp_sub(h, x, p), f, p)
        if g != [1]:
            out.append((g, i))
            f = _fp_quo(f, g, p)
            h = _fp_rem(h, f, p)
        i += 1
    if len(f) - 1 > 0:
        out.append((f, len(f) - 1))
    return out


def _fp_random_poly(max_deg: int, p: int, rng: random.Random) -> list[int]:
    while True:
        cs = _fp_trim([rng.randrange(p) for _ in range(max_deg + 1)])
        if len(cs) > 1:
            return cs


def _fp_edf(f: list[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Split monic squarefree f whose irreducible factors all have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        r = _fp_random_poly(n - 1, p, rng)
        if p == 2:
            # Trace map over F_{2**d}: r + r**2 + ... + r**(2**(d-1)).
            t = list(r)
            sq = list(r)
            for _ in range(d - 1):
                sq = _fp_rem(_fp_mul(sq, sq, p), f, p)
                t = _fp_add(t, sq, p)
            g = _fp_gcd(t, f, p) if t else [1]
        else:
            h = _fp_pow_mod(r, (p**d - 1) // 2, f, p)
            g = _fp_gcd(_fp_sub(h, [1], p), f, p)
        if g != [1] and g != f:
            return _fp_edf(g, d, p, rng) + _fp_edf(_fp_quo(f, g, p), d, p, rng)


@dataclass(frozen=True)
class FpPolyFactorization:
    """Monic irreducible factors with multiplicities, plus the unit lc."""

    p: int
    unit: int
    factors: tuple[tuple[FpPoly, int], ...]

    def product(self) -> FpPoly:
        """Re-multiplied factorization; equals the reduced input polynomial."""
        out = [self.unit % self.p]
        for g, e in self.factors:
            for _ in range(e):
                out = _fp_mul(out, list(g.coeffs), self.p)
        return FpPoly(self.p, tuple(out))

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "unit": self.unit,
            "factors": [
                {"coeffs": list(g.coeffs), "multiplicity": e} for g, e in self.factors
            ],
        }


def factor_mod_p(f: ZPoly, p: int, *, seed: int = DEFAULT_SEED) -> FpPolyFactorization:
    """Full factorization of f mod p into monic irreducibles.

    Requires p prime and p not dividing lc(f).  Deterministic for a fixed
    seed: the Cantor-Zassenhaus generator is keyed on (seed, p, coefficients).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.is_zero or f.leading % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    fbar = [c % p for c in f.coeffs]
    while fbar and fbar[-1] == 0:
        fbar.pop()
    unit = fbar[-1]
    fbar = _fp_monic(fbar, p)
    if len(fbar) == 1:
        return FpPolyFactorization(p, unit, ())
    rng = random.Random(f"edf:{seed}:{p}:{f.coeffs}")
    found: list[tuple[FpPoly, int]] = []
    for part, mult in _fp_sqf_list(fbar, p):
        for stratum, d in _fp_ddf(part, p):
            for irr in _fp_edf(stratum, d, p, rng):
                found.append((FpPoly(p, tuple(irr)), mult))
    found.sort(key=lambda ge: (ge[0].degree, ge[0].coeffs))
    return FpPolyFactorization(p, unit, tuple(found))

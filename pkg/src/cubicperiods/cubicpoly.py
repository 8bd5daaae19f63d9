"""Exact rational cubics: the one-parameter family f_n, period polynomials,
affine substitution, and the identity tying the two together.

f_n(X) = X^3 - n*X^2 - (n+3)*X - 1 is generic for cyclic cubic fields and
has square discriminant (n^2 + 3n + 9)^2.  For a conductor f with pair
(M, N) the period polynomial has the closed form

    X^3 - mu(f)*X^2 + (1-f)/3 * X - mu(f)*((M-3)*f + 1)/27      (tame)
    X^3 - f/3 * X - mu(f/9)*f*M/27                              (wild)

and agrees with f_n up to an explicit affine change of variable, checked
here with exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Conductor, Kind, factorize, moebius
from .errors import IdentityFailure, NonIntegralCoefficient
from .quadform import Representation, ShanksParams
from .verdicts import Verdict


def _frac(x: int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalCubic:
    """c3*X^3 + c2*X^2 + c1*X + c0 with exact rational coefficients."""

    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self) -> None:
        for name in ("c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Coefficients in descending degree order."""
        return (self.c3, self.c2, self.c1, self.c0)

    def evaluate(self, x):
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0

    def scale(self, k: int | Fraction) -> "RationalCubic":
        k = _frac(k)
        return RationalCubic(self.c3 * k, self.c2 * k, self.c1 * k, self.c0 * k)

    def integer_coefficients(self) -> tuple[int, int, int, int]:
        out = []
        for c in self.coefficients():
            if c.denominator != 1:
                raise NonIntegralCoefficient(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return tuple(out)


def shanks_poly(n: int | Fraction) -> RationalCubic:
    """X^3 - n*X^2 - (n+3)*X - 1."""
    n = _frac(n)
    return RationalCubic(Fraction(1), -n, -(n + 3), Fraction(-1))


def delta(n1: int, n2: int) -> int:
    return n1 * n1 + 3 * n1 * n2 + 9 * n2 * n2


def period_poly_formula(f: Conductor, r: Representation) -> RationalCubic:
    """Closed-form period polynomial for conductor f and its pair (M, N)."""
    if r.conductor.value != f.value:
        raise ValueError("representation does not belong to this conductor")
    v = f.value
    if f.kind is Kind.TAME:
        mu = moebius(v)
        poly = RationalCubic(
            Fraction(1),
            Fraction(-mu),
            Fraction(1 - v, 3),
            Fraction(-mu * ((r.M - 3) * v + 1), 27),
        )
    else:
        mu = moebius(v // 9)
        poly = RationalCubic(
            Fraction(1),
            Fraction(0),
            Fraction(-v, 3),
            Fraction(-mu * v * r.M, 27),
        )
    for c in poly.coefficients():
        if c.denominator != 1:
            raise NonIntegralCoefficient(
                f"period polynomial for f={v}, M={r.M} has non-integer coefficient {c}"
            )
    return poly


def substitute_affine(p: RationalCubic, a: int | Fraction, b: int | Fraction) -> RationalCubic:
    """Exact expansion of p(a*X + b)."""
    a, b = _frac(a), _frac(b)
    c3, c2, c1, c0 = p.coefficients()
    return RationalCubic(
        c3 * a**3,
        3 * c3 * a * a * b + c2 * a * a,
        3 * c3 * a * b * b + 2 * c2 * a * b + c1 * a,
        c3 * b**3 + c2 * b * b + c1 * b + c0,
    )


def verify_main_identity(f: Conductor, sp: ShanksParams) -> Verdict:
    """Check n2^3 * mu * f_n(X) = P(mu*(n2*X + shift)) with exact equality.

    The shift is (1 - n1)/3 in the tame case and -n1/3 in the wild case,
    with mu the Moebius value of f (tame) or f/9 (wild).  Both sides are
    integer polynomials; any coefficient difference raises IdentityFailure.
    """
    if f.kind is Kind.TAME:
        mu = moebius(f.value)
        shift = Fraction(1 - sp.n1, 3)
    else:
        mu = moebius(f.value // 9)
        shift = Fraction(-sp.n1, 3)
    n = Fraction(sp.n1, sp.n2)
    lhs = shanks_poly(n).scale(mu * sp.n2**3)
    m_val = 2 * sp.n1 + 3 * sp.n2
    rep = Representation(
        m_val,
        sp.n2,
        m_val // 3 if f.kind is Kind.WILD else None,
        f,
    )
    rhs = substitute_affine(period_poly_formula(f, rep), mu * sp.n2, mu * shift)
    if lhs != rhs:
        diffs = [
            (deg, lc, rc)
            for deg, (lc, rc) in zip(
                (3, 2, 1, 0), zip(lhs.coefficients(), rhs.coefficients())
            )
            if lc != rc
        ]
        raise IdentityFailure(
            f"f={f.value}, (n1,n2)=({sp.n1},{sp.n2}): coefficients differ at {diffs}"
        )
    return Verdict("main_identity", True, 0.0, data={"lhs": lhs, "rhs": rhs})


def _divisors(n: int) -> list[int]:
    fac = factorize(n)
    divs = [1]
    for p, e in fac.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_irreducible_cubic(p: RationalCubic) -> bool:
    """Rational-root test; for a cubic this decides irreducibility over Q."""
    if p.c3 == 0:
        raise ValueError("degree must be exactly 3")
    den = math.lcm(*(c.denominator for c in p.coefficients()))
    ints = [int(c * den) for c in p.coefficients()]
    g = math.gcd(*ints)
    a3, a2, a1, a0 = (c // g for c in ints)
    if a0 == 0:
        return False
    for num in _divisors(abs(a0)):
        for d in _divisors(abs(a3)):
            if math.gcd(num, d) != 1:
                continue
            for root in (Fraction(num, d), Fraction(-num, d)):
                if ((a3 * root + a2) * root + a1) * root + a0 == 0:
                    return False
    return True


def irreducibility_criterion(n1: int, n2: int) -> bool:
    """True when 3 | n1, the form value has 3-adic valuation exactly 2, and
    its ninth is squarefree; these conditions force f_n irreducible for
    n = n1/n2 (Eisenstein's criterion applies after clearing denominators)."""
    if math.gcd(n1, n2) != 1:
        raise ValueError("n1 and n2 must be coprime")
    if n1 % 3 != 0:
        return False
    d = delta(n1, n2)
    if d % 9 != 0 or (d // 9) % 3 == 0:
        return False
    return moebius(d // 9) != 0


def cubic_discriminant(p: RationalCubic) -> Fraction:
    a, b, c, d = p.coefficients()
    return (
        18 * a * b * c * d
        - 4 * b**3 * d
        + b * b * c * c
        - 4 * a * c**3
        - 27 * a * a * d * d
    )


def discriminant_check(n: int | Fraction) -> Verdict:
    """disc(f_n) = (n^2 + 3n + 9)^2, exactly."""
    n = _frac(n)
    disc = cubic_discriminant(shanks_poly(n))
    expected = (n * n + 3 * n + 9) ** 2
    if disc != expected:
        raise IdentityFailure(f"disc(f_{n}) = {disc} but (n^2+3n+9)^2 = {expected}")
    return Verdict("discriminant", True, 0.0, data={"value": disc})

"""Arithmetic in Z[zeta3] and the cubic Dirichlet characters built from it.

Elements are stored on the basis (1, zeta3) with zeta3 = exp(2*pi*i/3), so
zeta3^2 = -1 - zeta3 and sqrt(-3) = 1 + 2*zeta3.  The ring is norm-Euclidean
for the norm a^2 - a*b + b^2 and its six units are +-1, +-zeta3, +-zeta3^2.

Two normal forms for associates are used below.  The *canonical* associate
(first coordinate positive, second smallest nonnegative) makes gcd output
deterministic.  The *primary* associate, congruent to 1 mod 3, is the one
pinned down by the Gaussian-sum normalization -tau(chi_p)^3 = p * pi: for a
prime element pi of norm p = 1 mod 3, the cubic residue character
chi(a) = a^((p-1)/3) mod pi has a Gaussian sum whose negated cube is p times
the primary associate of pi.  That normalization is what ties each pair
(M, N) with 4f = M^2 + 27 N^2 to a specific character of conductor f via

    (M + 3N*sqrt(-3))/2 = 3 * zeta3^(+-1) * pi_1 * ... * pi_nu.

The identification is never assumed: every step is re-checked, exactly for
the algebra and to 1e-6 for the Gaussian sums.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Kind
from .errors import (
    FactorizationMismatch,
    NormalizationFailure,
    NotPrimitiveRoot,
    ToleranceExceeded,
)
from .quadform import Representation

_SQRT3_2 = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*zeta3 with integer a, b."""

    a: int
    b: int

    def __add__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinInt") -> "EisensteinInt":
        return EisensteinInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EisensteinInt":
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinInt(self.a * other, self.b * other)
        # zeta3^2 = -1 - zeta3
        return EisensteinInt(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a - self.b * other.b,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "EisensteinInt":
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_complex(self) -> complex:
        return complex(self.a - self.b / 2.0, self.b * _SQRT3_2)


ONE = EisensteinInt(1, 0)
ZETA = EisensteinInt(0, 1)
ZETA_SQ = EisensteinInt(-1, -1)
SQRT_MINUS_3 = EisensteinInt(1, 2)
UNITS = (ONE, ZETA, ZETA_SQ, -ONE, -ZETA, -ZETA_SQ)


def exact_div(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """x / y when y divides x exactly; ValueError otherwise."""
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta3]")
    num = x * y.conjugate()
    n = y.norm()
    if num.a % n or num.b % n:
        raise ValueError(f"{y} does not divide {x}")
    return EisensteinInt(num.a // n, num.b // n)


def _round_div(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    num = x * y.conjugate()
    n = y.norm()
    return EisensteinInt(round(Fraction(num.a, n)), round(Fraction(num.b, n)))


def canonical_associate(x: EisensteinInt) -> EisensteinInt:
    """The associate with a > 0 and smallest b >= 0 (zero maps to zero)."""
    if x.is_zero():
        return x
    candidates = [y for y in (u * x for u in UNITS) if y.a > 0 and y.b >= 0]
    return min(candidates, key=lambda c: (c.b, c.a))


def primary_associate(x: EisensteinInt) -> EisensteinInt:
    """The unique associate congruent to 1 mod 3 (requires norm coprime to 3)."""
    for u in UNITS:
        y = u * x
        if y.a % 3 == 1 and y.b % 3 == 0:
            return y
    raise ValueError(f"{x} has no associate congruent to 1 mod 3")


def eis_gcd(x: EisensteinInt, y: EisensteinInt) -> EisensteinInt:
    """Euclidean gcd, returned as the canonical associate."""
    if x.is_zero() and y.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not y.is_zero():
        x, y = y, x - _round_div(x, y) * y
    return canonical_associate(x)


def round_to_eisenstein(z: complex) -> tuple[EisensteinInt, float]:
    """Nearest lattice point and the distance to it."""
    b = z.imag / _SQRT3_2
    a = z.real + b / 2.0
    cand = EisensteinInt(round(a), round(b))
    return cand, abs(z - cand.to_complex())


@dataclass(frozen=True)
class CubicCharacter:
    """Order-3 character: residues coprime to the modulus map to exponents
    of zeta3 in {0, 1, 2}; everything else is implicitly zero."""

    modulus: int
    conductor: int
    exponents: dict[int, int]

    def exponent(self, a: int) -> int | None:
        return self.exponents.get(a % self.modulus)

    def value(self, a: int) -> complex:
        e = self.exponent(a)
        if e is None:
            return 0j
        return cmath.exp(2j * cmath.pi * e / 3)

    def kernel(self) -> frozenset[int]:
        return frozenset(a for a, e in self.exponents.items() if e == 0)


def chi9(sign: int) -> CubicCharacter:
    """The character mod 9 with exponent sign*(a^2 - 1)/3 mod 3."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    exps = {a: sign * ((a * a - 1) // 3) % 3 for a in (1, 2, 4, 5, 7, 8)}
    return CubicCharacter(9, 9, exps)


def cubic_residue_character(p: int, pi: EisensteinInt) -> CubicCharacter:
    """chi(a) = exponent e with a^((p-1)/3) = zeta3^e mod pi, for a mod p.

    The quotient Z[zeta3]/(pi) is the field with p elements; zeta3 reduces
    to an integer omega with omega^2 + omega + 1 = 0 mod p, which turns
    character evaluation into modular exponentiation.
    """
    if pi.norm() != p:
        raise ValueError("pi must have norm p")
    if pi.b % p == 0:
        raise NotPrimitiveRoot(f"{pi} does not embed zeta3 into Z/{p}")
    omega = -pi.a * pow(pi.b, -1, p) % p
    if (omega * omega + omega + 1) % p != 0:
        raise NotPrimitiveRoot(f"residue {omega} of zeta3 mod {pi} is not a cube root of 1")
    omega_sq = omega * omega % p
    k = (p - 1) // 3
    exps: dict[int, int] = {}
    for a in range(1, p):
        t = pow(a, k, p)
        if t == 1:
            exps[a] = 0
        elif t == omega:
            exps[a] = 1
        elif t == omega_sq:
            exps[a] = 2
        else:
            raise NotPrimitiveRoot(f"{a}^{k} mod {p} is not a cube root of unity")
    return CubicCharacter(p, p, exps)


def gaussian_sum(chi: CubicCharacter) -> complex:
    """tau(chi) = sum over a of chi(a) * exp(2*pi*i*a/m) for a primitive chi."""
    if chi.modulus != chi.conductor:
        raise ValueError("gaussian_sum requires a primitive character")
    m = chi.modulus
    total = 0j
    for a, e in chi.exponents.items():
        total += cmath.exp(2j * cmath.pi * (a / m + e / 3))
    if abs(abs(total) ** 2 - m) > 1e-6:
        raise ToleranceExceeded(
            f"|tau|^2 = {abs(total)**2} differs from the conductor {m}"
        )
    return total


def chi9_gauss_sum_report(sign: int) -> dict:
    """Record whether tau or tau^3 for the mod-9 character equals 27*zeta3^sign.

    A primitive character mod 9 has |tau| = 3, so only the cube can reach
    modulus 27; both comparisons are computed and reported rather than
    assumed.
    """
    tau = gaussian_sum(chi9(sign))
    reference = 27 * cmath.exp(sign * 2j * cmath.pi / 3)
    return {
        "tau": tau,
        "tau_cubed": tau**3,
        "reference": reference,
        "tau_matches": abs(tau - reference) < 1e-6,
        "tau_cubed_matches": abs(tau**3 - reference) < 1e-6,
    }


def factor_rhs(r: Representation) -> tuple[int, list[EisensteinInt]]:
    """Factor (M + 3N*sqrt(-3))/2 as 3 * zeta3^(+-1) * pi_1 * ... * pi_nu.

    The pi_i are the primary prime elements above the odd primes of the
    conductor, each of which divides the left side exactly once because its
    norm is squarefree.  The decomposition is re-multiplied and compared to
    the source, so a wrong unit or associate cannot slip through.
    """
    if r.conductor.kind is not Kind.WILD:
        raise ValueError("factor_rhs applies to wild representations")
    x = EisensteinInt((r.M + 3 * r.N) // 2, 3 * r.N)
    try:
        rem = exact_div(x, EisensteinInt(3, 0))
    except ValueError as exc:
        raise FactorizationMismatch(str(exc)) from exc
    pis: list[EisensteinInt] = []
    for p in r.conductor.odd_primes:
        pi = primary_associate(eis_gcd(EisensteinInt(p, 0), rem))
        if pi.norm() != p:
            raise FactorizationMismatch(
                f"gcd with {p} has norm {pi.norm()}, expected {p}"
            )
        try:
            rem = exact_div(rem, pi)
        except ValueError as exc:
            raise FactorizationMismatch(str(exc)) from exc
        pis.append(pi)
    if rem == ZETA:
        sign = 1
    elif rem == ZETA_SQ:
        sign = -1
    else:
        raise FactorizationMismatch(f"leftover unit {rem} is not zeta3^(+-1)")
    product = EisensteinInt(3, 0) * (ZETA if sign == 1 else ZETA_SQ)
    for pi in pis:
        product = product * pi
    if product != x:
        raise FactorizationMismatch(f"product {product} does not reproduce {x}")
    return sign, pis


def character_for_representation(r: Representation) -> CubicCharacter:
    """The primitive cubic character mod f attached to a wild pair (M, N).

    The mod-9 component sign and the prime components come from factor_rhs;
    each prime component is validated against -tau(chi_p)^3 = p * pi_p
    numerically before the components are glued along the residues mod f.
    """
    sign, pis = factor_rhs(r)
    f = r.conductor.value
    components = [chi9(sign)]
    for p, pi in zip(r.conductor.odd_primes, pis):
        chi_p = cubic_residue_character(p, pi)
        tau = gaussian_sum(chi_p)
        rounded, residual = round_to_eisenstein(-(tau**3) / p)
        if residual > 1e-6 or rounded != pi:
            raise NormalizationFailure(
                f"-tau^3/{p} = {-(tau**3)/p} is not the prime element {pi}"
            )
        components.append(chi_p)
    exponents: dict[int, int] = {}
    for a in range(1, f):
        if math.gcd(a, f) != 1:
            continue
        exponents[a] = sum(c.exponents[a % c.modulus] for c in components) % 3
    return CubicCharacter(f, f, exponents)

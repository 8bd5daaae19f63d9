"""Rational group-ring arithmetic for a cyclic group of order three.

Elements c0 + c1*s + c2*s^2 multiply by cyclic convolution (s^3 = 1).  The
averaging idempotent e1 = (1 + s + s^2)/3 and its complement (2 - s - s^2)/3
split the algebra; 1 - 2*e1 is an involution.  The unit group relevant to
ring-of-integers generators is {+-s^i} in the tame case and gains the
factor 1 - 2*e1 in the wild case, for twelve units total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .arith import Kind, moebius
from .cubicpoly import shanks_poly, substitute_affine
from .errors import GeneratorFailure, NonIntegralCoefficient
from .periods import DEFAULT_TOLERANCE, real_roots_cubic
from .verdicts import Verdict

if TYPE_CHECKING:
    from .periods import FieldRecord


def _frac(x: int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class GroupRingElement:
    c0: Fraction
    c1: Fraction
    c2: Fraction

    def __post_init__(self) -> None:
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return GroupRingElement(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(-self.c0, -self.c1, -self.c2)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = _frac(other)
            return GroupRingElement(self.c0 * k, self.c1 * k, self.c2 * k)
        return gr_mul(self, other)

    __rmul__ = __mul__


ONE = GroupRingElement(1, 0, 0)
SIGMA = GroupRingElement(0, 1, 0)
SIGMA_SQ = GroupRingElement(0, 0, 1)


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Cyclic convolution of coefficients."""
    return GroupRingElement(
        x.c0 * y.c0 + x.c1 * y.c2 + x.c2 * y.c1,
        x.c0 * y.c1 + x.c1 * y.c0 + x.c2 * y.c2,
        x.c0 * y.c2 + x.c1 * y.c1 + x.c2 * y.c0,
    )


def idempotents() -> tuple[GroupRingElement, GroupRingElement]:
    """(e1, ef) with e1 the averaging idempotent; they are orthogonal and sum to 1."""
    e1 = GroupRingElement(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    ef = GroupRingElement(Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))
    return e1, ef


def unit_list_p3(wild: bool) -> list[GroupRingElement]:
    """Units of the relevant order: 6 elements, or 12 when wild.

    Closure under multiplication and the presence of every inverse are
    checked before returning.
    """
    e1, _ = idempotents()
    flip = ONE - 2 * e1
    powers = [ONE, SIGMA, SIGMA_SQ]
    units = [sign * p for sign in (1, -1) for p in powers]
    if wild:
        units += [sign * (flip * p) for sign in (1, -1) for p in powers]
    for x in units:
        if not any(gr_mul(x, y) == ONE for y in units):
            raise GeneratorFailure(f"{x} has no inverse in the unit list")
        for y in units:
            if gr_mul(x, y) not in units:
                raise GeneratorFailure(f"{x} * {y} leaves the unit list")
    return units


@dataclass(frozen=True)
class ConjugateVector:
    """(x, s(x), s^2(x)) for an algebraic number x of a matched field."""

    x0: float
    x1: float
    x2: float

    def values(self) -> tuple[float, float, float]:
        return (self.x0, self.x1, self.x2)


def apply(x: GroupRingElement, v: ConjugateVector) -> ConjugateVector:
    """Linear action: s shifts coordinates cyclically."""
    c0, c1, c2 = float(x.c0), float(x.c1), float(x.c2)
    return ConjugateVector(
        c0 * v.x0 + c1 * v.x1 + c2 * v.x2,
        c0 * v.x1 + c1 * v.x2 + c2 * v.x0,
        c0 * v.x2 + c1 * v.x0 + c2 * v.x1,
    )


def verify_generators(rec: "FieldRecord", tolerance: float = DEFAULT_TOLERANCE) -> Verdict:
    """Checks on the twelve ring-of-integers generators of a wild field.

    (a) alpha = n2*rho - n1/3 has trace zero;
    (b) each period plus one coincides with one of +-alpha^(i) +- 1;
    (c) the minimal polynomial h of alpha satisfies h(X) = mu*P(mu*X)
        exactly, and the minimal polynomials of +-alpha +- 1 all have
        integer coefficients (so the candidates are algebraic integers).
    """
    f = rec.conductor
    if f.kind is not Kind.WILD:
        raise ValueError("generator checks apply to wild records")
    sp = rec.shanks_params
    fn = shanks_poly(Fraction(sp.n1, sp.n2))
    roots = real_roots_cubic(fn, tolerance)
    alphas = [sp.n2 * rho - sp.n1 / 3 for rho in roots]

    trace = abs(sum(alphas))
    if trace > tolerance:
        raise GeneratorFailure(f"(a) trace of alpha is {trace}, not 0")

    twelve = [s * a + t for a in alphas for s in (1, -1) for t in (1, -1)]
    worst = 0.0
    for eta in rec.periods.values():
        worst = max(worst, min(abs(eta + 1 - g) for g in twelve))
    if worst > tolerance:
        raise GeneratorFailure(
            f"(b) a period plus one misses the twelve candidates by {worst}"
        )

    h = substitute_affine(fn, Fraction(1, sp.n2), Fraction(sp.n1, 3 * sp.n2)).scale(
        sp.n2**3
    )
    try:
        h.integer_coefficients()
    except NonIntegralCoefficient as exc:
        raise GeneratorFailure(f"(c) h has a non-integer coefficient: {exc}") from exc
    mu = moebius(f.value // 9)
    expected = substitute_affine(rec.predicted_poly, mu, 0).scale(mu)
    if h != expected:
        raise GeneratorFailure(
            f"(c) h(X) = {h.coefficients()} differs from mu*P(mu*X) = "
            f"{expected.coefficients()}"
        )
    for s in (1, -1):
        for t in (1, -1):
            shifted = substitute_affine(h, Fraction(1, s), Fraction(-t, s)).scale(s)
            try:
                shifted.integer_coefficients()
            except NonIntegralCoefficient as exc:
                raise GeneratorFailure(
                    f"(c) minimal polynomial of {s}*alpha{t:+d} is not integral: {exc}"
                ) from exc
    return Verdict("generators", True, max(trace, worst))

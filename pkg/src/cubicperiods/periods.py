"""Numeric Gaussian periods and the matching of kernels to representations.

For a conductor f, each index-3 subgroup H of the units mod f whose cubic
character is primitive yields three periods: the sums of exp(2*pi*i*a/f)
over H and its two cosets.  Because -1 always lies in H (the quotient has
odd order), every such sum is real; the imaginary parts are still summed
and asserted to vanish rather than silently discarded.

The periods are the roots of a monic integer cubic.  Rounding its numeric
coefficients and comparing with the closed-form period polynomial for each
pair (M, N) produces a perfect matching between representations and
kernels; that matching is the central two-route consistency check of the
package, with the cosine sums on one side and exact rational arithmetic on
the other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Conductor, Kind, euler_phi, factorize, moebius
from .cubicpoly import (
    RationalCubic,
    cubic_discriminant,
    period_poly_formula,
    shanks_poly,
    verify_main_identity,
)
from .eisenstein import character_for_representation
from .errors import (
    ComplexRoots,
    CongruenceFailure,
    CountMismatch,
    MatchingFailure,
    RelationFailure,
    RoundingFailure,
    ToleranceExceeded,
)
from .quadform import Representation, ShanksParams, representations, shanks_params
from .verdicts import Verdict

DEFAULT_TOLERANCE = 1e-6


@dataclass(frozen=True)
class UnitGroup:
    """(Z/fZ)^x as a product of cyclic groups, one per prime-power factor."""

    modulus: int
    generators: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PeriodTriple:
    """The three periods for one kernel, sorted in descending order."""

    eta0: float
    eta1: float
    eta2: float
    kernel: frozenset[int]
    conductor: Conductor

    def values(self) -> tuple[float, float, float]:
        return (self.eta0, self.eta1, self.eta2)


@dataclass(frozen=True)
class FieldRecord:
    """One cyclic cubic field: pair, parameters, polynomial, kernel, periods,
    and the verdicts of every check run against it."""

    conductor: Conductor
    representation: Representation
    shanks_params: ShanksParams
    predicted_poly: RationalCubic
    matched_kernel: frozenset[int]
    periods: PeriodTriple
    verdicts: dict[str, Verdict]

    def max_residual(self) -> float:
        return max((v.residual for v in self.verdicts.values()), default=0.0)

    def all_passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())


def _component_moduli(f: Conductor) -> list[int]:
    comps = list(f.odd_primes)
    if f.kind is Kind.WILD:
        comps.append(9)
    return sorted(comps)


def _generator(q: int) -> int:
    """Smallest generator of the cyclic group (Z/qZ)^x for q prime or q = 9."""
    order = 6 if q == 9 else q - 1
    prime_divisors = [p for p, _ in factorize(order).factors]
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, order // p, q) != 1 for p in prime_divisors):
            return g
    raise ValueError(f"no generator mod {q}")


def unit_group(f: Conductor) -> UnitGroup:
    gens = []
    for q in _component_moduli(f):
        g = _generator(q)
        order = 6 if q == 9 else q - 1
        rest = f.value // q
        # lift to a residue that is g mod q and 1 mod f/q
        lift = (1 + rest * ((g - 1) * pow(rest, -1, q) % q)) % f.value
        gens.append((lift, order))
    group = UnitGroup(f.value, tuple(gens))
    assert math.prod(o for _, o in gens) == euler_phi(factorize(f.value))
    return group


def primitive_cubic_kernels(f: Conductor) -> list[frozenset[int]]:
    """One kernel per conjugate pair of primitive cubic characters mod f.

    Each prime-power component contributes an index-mod-3 map; a character
    is primitive exactly when every component coefficient is nonzero, and
    conjugate characters share a kernel, so fixing the first coefficient
    to 1 enumerates kernels without repetition.
    """
    fv = f.value
    comps = _component_moduli(f)
    index_mod3: list[list[int]] = []
    for q in comps:
        g = _generator(q)
        order = 6 if q == 9 else q - 1
        table = [-1] * q
        x = 1
        for j in range(order):
            table[x] = j % 3
            x = x * g % q
        index_mod3.append(table)
    units = [a for a in range(1, fv) if math.gcd(a, fv) == 1]
    tuples = [
        tuple(table[a % q] for q, table in zip(comps, index_mod3)) for a in units
    ]
    kernels = []
    for tail in itertools.product((1, 2), repeat=len(comps) - 1):
        coeffs = (1, *tail)
        kernels.append(
            frozenset(
                a
                for a, t in zip(units, tuples)
                if sum(c * e for c, e in zip(coeffs, t)) % 3 == 0
            )
        )
    expected = 2 ** (f.nu - 1) if f.kind is Kind.TAME else 2**f.nu
    if len(kernels) != expected:
        raise CountMismatch(
            f"conductor {fv}: {len(kernels)} kernels, expected {expected}"
        )
    return kernels


def gaussian_periods(f: Conductor, kernel: frozenset[int]) -> PeriodTriple:
    """Cosine sums over the kernel and its two cosets, sorted descending."""
    fv = f.value
    tol = max(1e-9 * fv, 1e-12)
    c = next(
        a for a in range(2, fv) if math.gcd(a, fv) == 1 and a not in kernel
    )
    cosets = (
        kernel,
        frozenset(c * h % fv for h in kernel),
        frozenset(c * c % fv * h % fv for h in kernel),
    )
    if len(cosets[0] | cosets[1] | cosets[2]) != 3 * len(kernel):
        raise CountMismatch(f"cosets of the kernel do not partition the units mod {fv}")
    two_pi_over_f = 2 * math.pi / fv
    etas = []
    for coset in cosets:
        real = sum(math.cos(two_pi_over_f * a) for a in coset)
        imag = sum(math.sin(two_pi_over_f * a) for a in coset)
        if abs(imag) > tol:
            raise ToleranceExceeded(
                f"period over a coset mod {fv} has imaginary part {imag}"
            )
        etas.append(real)
    expected_sum = moebius(fv) if f.kind is Kind.TAME else 0
    if abs(sum(etas) - expected_sum) > tol:
        raise ToleranceExceeded(
            f"period sum {sum(etas)} differs from {expected_sum} for f={fv}"
        )
    etas.sort(reverse=True)
    return PeriodTriple(etas[0], etas[1], etas[2], kernel, f)


def _symmetric_coefficients(pt: PeriodTriple) -> tuple[float, float, float]:
    """Float coefficients (c2, c1, c0) of the monic cubic with the periods as roots."""
    x, y, z = pt.values()
    return (-(x + y + z), x * y + x * z + y * z, -(x * y * z))


def numeric_period_poly(
    pt: PeriodTriple, tolerance: float = DEFAULT_TOLERANCE
) -> RationalCubic:
    """Expand (X - eta0)(X - eta1)(X - eta2) and round to integers."""
    coeffs = _symmetric_coefficients(pt)
    rounded = [round(c) for c in coeffs]
    worst = max(abs(c - r) for c, r in zip(coeffs, rounded))
    if worst > tolerance:
        offender = max(coeffs, key=lambda c: abs(c - round(c)))
        raise RoundingFailure(
            f"coefficient {offender} is {abs(offender - round(offender))} "
            f"from an integer (tolerance {tolerance})"
        )
    return RationalCubic(Fraction(1), *(Fraction(r) for r in rounded))


def rounding_residual(pt: PeriodTriple) -> float:
    coeffs = _symmetric_coefficients(pt)
    return max(abs(c - round(c)) for c in coeffs)


def real_roots_cubic(
    p: RationalCubic, tolerance: float = DEFAULT_TOLERANCE
) -> tuple[float, float, float]:
    """Three real roots of a totally real cubic, sorted descending.

    The discriminant is computed exactly to decide realness; the roots come
    from the trigonometric form of the depressed cubic with two Newton
    polishing steps, and each residual |p(root)| must stay below tolerance.
    """
    if p.c3 == 0:
        raise ValueError("degree must be exactly 3")
    disc = cubic_discriminant(p)
    if disc <= 0:
        raise ComplexRoots(f"discriminant {disc} is not positive")
    b = float(p.c2 / p.c3)
    c = float(p.c1 / p.c3)
    d = float(p.c0 / p.c3)
    dep_p = c - b * b / 3
    dep_q = 2 * b**3 / 27 - b * c / 3 + d
    m = 2 * math.sqrt(-dep_p / 3)
    arg = min(1.0, max(-1.0, 3 * dep_q / (dep_p * m)))
    theta = math.acos(arg) / 3
    roots = []
    fc3, fc2, fc1, fc0 = (float(x) for x in p.coefficients())
    for k in range(3):
        x = m * math.cos(theta - 2 * math.pi * k / 3) - b / 3
        for _ in range(2):
            fx = ((fc3 * x + fc2) * x + fc1) * x + fc0
            dfx = (3 * fc3 * x + 2 * fc2) * x + fc1
            if dfx != 0:
                x -= fx / dfx
        roots.append(x)
    roots.sort(reverse=True)
    for x in roots:
        residual = abs(((fc3 * x + fc2) * x + fc1) * x + fc0)
        if residual > tolerance:
            raise ToleranceExceeded(f"|p({x})| = {residual} exceeds {tolerance}")
    return (roots[0], roots[1], roots[2])


def verify_period_relation(
    rec: FieldRecord, tolerance: float = DEFAULT_TOLERANCE
) -> Verdict:
    """The periods equal mu*(n2*rho + shift) over the roots rho of f_n,
    compared as multisets (no ordering of the conjugates is implied)."""
    f = rec.conductor
    sp = rec.shanks_params
    if f.kind is Kind.TAME:
        mu = moebius(f.value)
        shift = Fraction(1 - sp.n1, 3)
    else:
        mu = moebius(f.value // 9)
        shift = Fraction(-sp.n1, 3)
    roots = real_roots_cubic(shanks_poly(Fraction(sp.n1, sp.n2)), tolerance)
    mapped = sorted((mu * (sp.n2 * rho + float(shift)) for rho in roots), reverse=True)
    residual = max(abs(m - e) for m, e in zip(mapped, rec.periods.values()))
    if residual > tolerance:
        raise RelationFailure(
            f"f={f.value}, (n1,n2)=({sp.n1},{sp.n2}): multiset distance {residual}"
        )
    return Verdict("period_relation", True, residual)


def verify_sign_congruences(rec: FieldRecord) -> Verdict:
    """Exact integer congruences pinning the sign of the constant term:
    the product of the periods is (-1)^(nu+1) mod 3 and f*M/27 is -1 mod 3."""
    f = rec.conductor
    if f.kind is not Kind.WILD:
        raise ValueError("sign congruences apply to wild records")
    const = rec.predicted_poly.integer_coefficients()[3]
    eta_product = -const
    if (eta_product - (-1) ** (f.nu + 1)) % 3 != 0:
        raise CongruenceFailure(
            f"f={f.value}: period product {eta_product} is not (-1)^(nu+1) mod 3"
        )
    m_val = rec.representation.M
    if (f.value * m_val) % 27 != 0:
        raise CongruenceFailure(f"27 does not divide f*M for f={f.value}, M={m_val}")
    fm27 = f.value * m_val // 27
    assert fm27 == f.odd_part * rec.representation.M0
    if (fm27 + 1) % 3 != 0:
        raise CongruenceFailure(f"f*M/27 = {fm27} is not -1 mod 3")
    return Verdict("sign_congruences", True, 0.0)


def verify_kernel_character(rec: FieldRecord) -> Verdict:
    """The character built from (M, N) must cut out the kernel matched to it
    by the period-polynomial comparison."""
    chi = character_for_representation(rec.representation)
    if chi.kernel() != rec.matched_kernel:
        raise MatchingFailure(
            f"f={rec.conductor.value}, M={rec.representation.M}: character kernel "
            "differs from the period-matched kernel"
        )
    return Verdict("kernel_character", True, 0.0)


def match_fields(
    f: Conductor, tolerance: float = DEFAULT_TOLERANCE
) -> list[FieldRecord]:
    """Bijectively match representations to kernels and verify each field.

    Matching is by exact equality of the rounded numeric period polynomial
    with the closed form.  Every record is then checked against the affine
    identity and the period relation; a record only exists if all of its
    checks pass.
    """
    reps = representations(f)
    kernels = primitive_cubic_kernels(f)
    if len(kernels) != len(reps):
        raise CountMismatch(
            f"conductor {f.value}: {len(reps)} pairs but {len(kernels)} kernels"
        )
    predicted: dict[tuple[int, int, int, int], Representation] = {}
    polys: dict[tuple[int, int, int, int], RationalCubic] = {}
    for r in reps:
        poly = period_poly_formula(f, r)
        key = poly.integer_coefficients()
        if key in predicted:
            raise MatchingFailure(f"duplicate predicted polynomial for f={f.value}")
        predicted[key] = r
        polys[key] = poly
    assigned: dict[Representation, tuple[frozenset[int], PeriodTriple, float]] = {}
    for kernel in kernels:
        pt = gaussian_periods(f, kernel)
        numeric = numeric_period_poly(pt, tolerance)
        key = numeric.integer_coefficients()
        if key not in predicted:
            raise MatchingFailure(
                f"conductor {f.value}: no pair predicts the numeric polynomial {key}"
            )
        r = predicted[key]
        if r in assigned:
            raise MatchingFailure(
                f"conductor {f.value}: two kernels match the pair M={r.M}"
            )
        assigned[r] = (kernel, pt, rounding_residual(pt))
    if len(assigned) != len(reps):
        raise MatchingFailure(f"conductor {f.value}: matching is not a bijection")
    records = []
    for r in reps:
        sp = shanks_params(r)
        kernel, pt, residual = assigned[r]
        poly = period_poly_formula(f, r)
        verdicts = {
            "oracle_equivalence": Verdict(
                "oracle_equivalence",
                True,
                residual,
                detail="numeric period polynomial equals the closed form",
            ),
            "main_identity": verify_main_identity(f, sp),
        }
        rec = FieldRecord(f, r, sp, poly, kernel, pt, verdicts)
        verdicts["period_relation"] = verify_period_relation(rec, tolerance)
        records.append(rec)
    return records

"""Integer groundwork: factorization, the Moebius function, conductor checks.

A positive integer is the conductor of a cyclic cubic field exactly when it
is either a squarefree product p1*...*pk of primes congruent to 1 mod 3
(tame ramification at 3) or 9 times such a product, possibly empty (wild
ramification).  Everything downstream keys off this classification, so the
validator here is the single entry point that turns a bare integer into a
trusted Conductor value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidConductor

_SIEVE_BOUND = 1_000_000
_PRIMES: list[int] = []

# Witnesses making Miller-Rabin deterministic below 3.3e24; desk-scale
# conductors stay far under that.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes() -> list[int]:
    if not _PRIMES:
        sieve = bytearray(b"\x01") * (_SIEVE_BOUND + 1)
        sieve[0] = sieve[1] = 0
        for i in range(2, math.isqrt(_SIEVE_BOUND) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _PRIMES.extend(i for i in range(_SIEVE_BOUND + 1) if sieve[i])
    return _PRIMES


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Return a nontrivial factor of an odd composite n (deterministic restarts)."""
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


@dataclass(frozen=True)
class Factorization:
    """Prime factorization with factors sorted by prime."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last = 0
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be sorted with positive exponents")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError("factor product does not equal value")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def factorize(m: int) -> Factorization:
    """Exact prime factorization by trial division, Pollard rho beyond the sieve."""
    if m < 1:
        raise ValueError("factorize requires a positive integer")
    value = m
    found: dict[int, int] = {}
    for p in _small_primes():
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    if m > 1:
        stack = [m]
        while stack:
            q = stack.pop()
            if is_probable_prime(q):
                found[q] = found.get(q, 0) + 1
                continue
            d = _pollard_rho(q)
            stack.append(d)
            stack.append(q // d)
    return Factorization(value, tuple(sorted(found.items())))


def moebius(m: int) -> int:
    """Moebius function: 0 unless m is squarefree, else (-1)^(number of primes)."""
    if m < 1:
        raise ValueError("moebius requires a positive integer")
    count = 0
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            count += 1
    if m > 1:
        if is_probable_prime(m):
            count += 1
        else:
            # Cofactor beyond the sieve: fall back to full factorization.
            fac = factorize(m)
            if not fac.is_squarefree():
                return 0
            count += len(fac.factors)
    return -1 if count % 2 else 1


class Kind(str, Enum):
    """Ramification of 3 in the field: wild means 9 divides the conductor."""

    TAME = "tame"
    WILD = "wild"


@dataclass(frozen=True)
class Conductor:
    value: int
    kind: Kind
    odd_primes: tuple[int, ...]
    nu: int

    def __post_init__(self) -> None:
        prod = math.prod(self.odd_primes)
        expected = prod if self.kind is Kind.TAME else 9 * prod
        if self.nu != len(self.odd_primes) or expected != self.value:
            raise ValueError("inconsistent Conductor fields")

    @property
    def is_wild(self) -> bool:
        return self.kind is Kind.WILD

    @property
    def odd_part(self) -> int:
        """Product of the odd prime factors other than 3 (value/9 when wild)."""
        return math.prod(self.odd_primes)


def validate_conductor(f: int) -> Conductor:
    """Classify f as a tame or wild conductor, or raise InvalidConductor.

    The only accepted shapes are p1*...*pk (k >= 1) and 9*p1*...*pk
    (k >= 0) with distinct primes pi = 1 mod 3.  In particular f = 9 is
    accepted (the wild case with no odd primes) while f = 1 is not.
    """
    if f < 1:
        raise InvalidConductor(f"{f} is not a positive integer")
    if f % 2 == 0:
        raise InvalidConductor(f"{f} is even")
    fac = factorize(f)
    three_part = fac.exponent_of(3)
    if three_part not in (0, 2):
        raise InvalidConductor(
            f"the 3-part of {f} is 3^{three_part}; it must be 1 or 9"
        )
    odd_primes = []
    for p, e in fac.factors:
        if p == 3:
            continue
        if e > 1:
            raise InvalidConductor(f"{f} is not squarefree away from 9 ({p}^{e} divides it)")
        if p % 3 != 1:
            raise InvalidConductor(f"prime factor {p} of {f} is congruent to 2 mod 3")
        odd_primes.append(p)
    if three_part == 0:
        if not odd_primes:
            raise InvalidConductor("1 is not a conductor")
        return Conductor(f, Kind.TAME, tuple(odd_primes), len(odd_primes))
    return Conductor(f, Kind.WILD, tuple(odd_primes), len(odd_primes))


def conductors_up_to(bound: int, kind: Kind | str | None = None) -> list[Conductor]:
    """All valid conductors <= bound in ascending order, optionally filtered."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if isinstance(kind, str):
        kind = Kind(kind)
    out = []
    for f in range(1, bound + 1):
        try:
            cond = validate_conductor(f)
        except InvalidConductor:
            continue
        if kind is None or cond.kind is kind:
            out.append(cond)
    return out


def euler_phi(fac: Factorization) -> int:
    phi = 1
    for p, e in fac.factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi

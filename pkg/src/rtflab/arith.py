"""Exact rational and p-adic bookkeeping.

Everything downstream (characters, character sums, orbital integrals)
consumes these primitives.  All arithmetic here is exact: rationals are
`fractions.Fraction`, valuations are plain ints.  Floats only appear in
the local zeta factor and the archimedean part of analytic conductors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

Rational = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, order=True)
class PrimePlace:
    """A nonarchimedean place of Q, i.e. a prime p with residue size q = p."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"PrimePlace({self.p})"


def _as_place(p) -> int:
    return p.p if isinstance(p, PrimePlace) else int(p)


def val_p(x: Rational | int, p) -> int:
    """p-adic valuation e_p(x) of a nonzero rational, e_p(p) = 1."""
    q = _as_place(p)
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("valuation of zero undefined")
    v = 0
    n = x.numerator
    while n % q == 0:
        n //= q
        v += 1
    d = x.denominator
    while d % q == 0:
        d //= q
        v -= 1
    return v


def unit_part(x: Rational | int, p) -> Fraction:
    """x / p^{e_p(x)}, a p-adic unit (a rational with p-free num and den)."""
    q = _as_place(p)
    return Fraction(x) / Fraction(q) ** val_p(x, q)


def unit_residue(x: Rational | int, p, k: int) -> int:
    """The p-adic unit part of x reduced mod p^k (k >= 1).  x must be a p-unit
    up to powers of p, i.e. this reduces unit_part(x) mod p^k."""
    q = _as_place(p)
    u = unit_part(x, q)
    mod = q**k
    return u.numerator * pow(u.denominator, -1, mod) % mod


def residue(x: Rational | int, p, k: int) -> int:
    """x mod p^k for x with e_p(x) >= 0 (denominator prime to p)."""
    q = _as_place(p)
    x = Fraction(x)
    mod = q**k
    if x.denominator % q == 0:
        raise ValueError(f"{x} is not {q}-integral")
    return x.numerator * pow(x.denominator, -1, mod) % mod


@dataclass(frozen=True)
class ConductorTriple:
    """(M, M', Q): conductors of pi, its central character, and chi."""

    M: int
    Mprime: int
    Q: int

    def __post_init__(self):
        if self.M < 1 or self.Mprime < 1 or self.Q < 1:
            raise ValueError("conductors must be >= 1")
        if self.M % self.Mprime != 0:
            raise ValueError("M' must divide M")


def conductor_lcm(c: ConductorTriple) -> int:
    """[M, M'Q], the level of the congruence data."""
    return lcm(c.M, c.Mprime * c.Q)


def local_exponents(r_pi: int, r_chi: int, r_omega: int) -> tuple[int, int]:
    """(m, n) with m = r_chi and n = max(r_pi, r_chi + r_omega).

    n >= m always holds for nonnegative inputs; asserted.
    """
    if min(r_pi, r_chi, r_omega) < 0:
        raise ValueError("exponents must be nonnegative")
    m = r_chi
    n = max(r_pi, r_chi + r_omega)
    assert n >= m
    return m, n


def vol_k0(p, n: int) -> Fraction:
    """Vol(K_p[n]) with Vol(K_p) = 1: the inverse index of the Hecke
    congruence subgroup, 1/(p^{n-1}(p+1)) for n >= 1."""
    q = _as_place(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    return Fraction(1, q ** (n - 1) * (q + 1))


def local_zeta(p, s: float) -> float:
    """Local zeta factor (1 - p^{-s})^{-1}."""
    q = _as_place(p)
    d = 1.0 - float(q) ** (-s)
    if d == 0.0:
        raise ZeroDivisionError("local zeta pole at s = 0")
    return 1.0 / d


def local_zeta_exact(p, s: int) -> Fraction:
    """Exact (1 - p^{-s})^{-1} at integer s != 0."""
    q = _as_place(p)
    if s == 0:
        raise ZeroDivisionError("local zeta pole at s = 0")
    return 1 / (1 - Fraction(q) ** (-s))


def analytic_conductor_chi(parity: int, kappa: float, q_fin: int) -> float:
    """Analytic conductor of a Hecke character over Q.

    The archimedean factor is 1 + |(parity + i*kappa)/2| for the real
    place, times the arithmetic conductor q_fin.
    """
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    c_inf = 1.0 + abs(complex(parity, kappa)) / 2.0
    return c_inf * q_fin


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division (desk scale)."""
    if n < 1:
        raise ValueError("factorize wants n >= 1")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in factorize(n):
        out *= p ** (e - 1) * (p - 1)
    return out


def squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def gcd_int(a: int, b: int) -> int:
    return gcd(a, b)

"""Exact arithmetic with roots of unity.

Elements of Z[zeta_N] (with rational coefficients) are stored against the
tensor decomposition  Q(zeta_N) = prod_i Q(zeta_{p_i^{e_i}})  over the prime
power factors of N.  A term c * zeta_N^k is keyed by the tuple of local
exponents (k mod p_i^{e_i}).  Canonical reduction uses, in each factor, the
sparse relation

    zeta^{f} = -(zeta^{f - g} + zeta^{f - 2g} + ... + zeta^{f - (p-1)g}),

where g = p^{e-1} and f >= phi(p^e) = (p-1)g, i.e. division by the p-power
cyclotomic polynomial.  Zero testing and equality are exact; no dense
polynomial division ever happens, so mixed orders in the tens of thousands
stay cheap as long as elements are sparse.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import lcm

from .arith import factorize


class Cyc:
    """A rational linear combination of N-th roots of unity, exact."""

    __slots__ = ("order", "_pp", "coeffs")

    def __init__(self, order: int, coeffs=None, *, _pp=None):
        self.order = order
        self._pp = _pp if _pp is not None else tuple(p**e for p, e in factorize(order)) or (1,)
        self.coeffs: dict[tuple[int, ...], Fraction] = coeffs if coeffs is not None else {}

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, order: int = 1) -> "Cyc":
        return cls(order)

    @classmethod
    def from_rational(cls, c, order: int = 1) -> "Cyc":
        z = cls(order)
        if c:
            z.coeffs[(0,) * len(z._pp)] = Fraction(c)
        return z

    @classmethod
    def root_of_unity(cls, order: int, k: int, coeff=1) -> "Cyc":
        """coeff * zeta_order^k."""
        z = cls(order)
        if coeff:
            z.coeffs[z._key(k)] = Fraction(coeff)
        return z

    def _key(self, k: int) -> tuple[int, ...]:
        return tuple(k % q for q in self._pp)

    # -- ring structure ------------------------------------------------

    def _promote(self, other: "Cyc") -> tuple["Cyc", "Cyc"]:
        if self.order == other.order:
            return self, other
        n = lcm(self.order, other.order)
        return self.to_order(n), other.to_order(n)

    def to_order(self, n: int) -> "Cyc":
        if n == self.order:
            return self
        if n % self.order != 0:
            raise ValueError("target order must be a multiple")
        out = Cyc(n)
        r = n // self.order
        for key, c in self.coeffs.items():
            k = self._exponent(key)
            out._add_term(out._key(k * r), c)
        return out

    def _exponent(self, key: tuple[int, ...]) -> int:
        # CRT: recover k mod order from local exponents
        k, mod = 0, 1
        for r, q in zip(key, self._pp):
            if q == 1:
                continue
            # solve k' == k (mod), k' == r (q)
            t = (r - k) * pow(mod, -1, q) % q
            k, mod = k + mod * t, mod * q
        return k % self.order if self.order > 1 else 0

    def _add_term(self, key, c):
        if not c:
            return
        cur = self.coeffs.get(key)
        s = c if cur is None else cur + c
        if s:
            self.coeffs[key] = s
        else:
            self.coeffs.pop(key, None)

    def __add__(self, other):
        if not isinstance(other, Cyc):
            other = Cyc.from_rational(other)
        a, b = self._promote(other)
        out = Cyc(a.order, dict(a.coeffs), _pp=a._pp)
        for k, c in b.coeffs.items():
            out._add_term(k, c)
        return out

    def __neg__(self):
        return Cyc(self.order, {k: -c for k, c in self.coeffs.items()}, _pp=self._pp)

    def __sub__(self, other):
        if not isinstance(other, Cyc):
            other = Cyc.from_rational(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Cyc):
            c = Fraction(other)
            return Cyc(self.order, {k: v * c for k, v in self.coeffs.items()} if c else {}, _pp=self._pp)
        a, b = self._promote(other)
        out = Cyc(a.order, _pp=a._pp)
        for k1, c1 in a.coeffs.items():
            for k2, c2 in b.coeffs.items():
                key = tuple((x + y) % q for x, y, q in zip(k1, k2, a._pp))
                out._add_term(key, c1 * c2)
        return out

    __rmul__ = __mul__
    __radd__ = __add__

    def conjugate(self) -> "Cyc":
        out = Cyc(self.order, _pp=self._pp)
        for k, c in self.coeffs.items():
            out._add_term(tuple((-x) % q for x, q in zip(k, self._pp)), c)
        return out

    # -- canonical form -------------------------------------------------

    def reduced(self) -> "Cyc":
        """Canonical representative: local exponent in factor p^e kept below
        phi(p^e) by repeated sparse division by the cyclotomic polynomial."""
        out = Cyc(self.order, dict(self.coeffs), _pp=self._pp)
        for i, q in enumerate(self._pp):
            if q == 1:
                continue
            p = factorize(q)[0][0]
            g = q // p
            bound = (p - 1) * g
            changed = True
            while changed:
                changed = False
                for key in [k for k in out.coeffs if k[i] >= bound]:
                    c = out.coeffs.pop(key)
                    f = key[i]
                    for j in range(1, p):
                        nk = key[:i] + ((f - j * g) % q,) + key[i + 1:]
                        out._add_term(nk, -c)
                    changed = True
        return out

    def is_zero(self) -> bool:
        return not self.reduced().coeffs

    def is_rational(self):
        """Return the Fraction value if the element is rational, else None."""
        r = self.reduced()
        if not r.coeffs:
            return Fraction(0)
        zero = (0,) * len(r._pp)
        if len(r.coeffs) == 1 and zero in r.coeffs:
            return r.coeffs[zero]
        return None

    def __eq__(self, other):
        if not isinstance(other, Cyc):
            other = Cyc.from_rational(other)
        return (self - other).is_zero()

    def __hash__(self):  # pragma: no cover - not used as dict key
        return hash(self.order)

    # -- numeric -------------------------------------------------------

    def to_complex(self) -> complex:
        total = 0j
        n = self.order
        for key, c in self.coeffs.items():
            total += float(c) * cmath.exp(2j * cmath.pi * self._exponent(key) / n)
        return total

    def __repr__(self):
        r = self.reduced()
        if not r.coeffs:
            return "Cyc(0)"
        parts = [f"{c}*z{self.order}^{self._exponent(k)}" for k, c in sorted(r.coeffs.items())]
        return "Cyc(" + " + ".join(parts) + ")"

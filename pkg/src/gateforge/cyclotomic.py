"""Exact arithmetic in Z[zeta_m], zeta_m = exp(2*pi*i/m).

Elements are integer coefficient vectors of length phi(m) taken modulo the
m-th cyclotomic polynomial.  Coefficients are Python ints throughout, so
there is no overflow to guard against.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """num / den for integer polys (low degree first) when den is monic and divides num."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for k in range(dn + 1):
                num[i - dn + k] -= c * den[k]
    if any(num[:dn]):
        raise ArithmeticError("division left a remainder")
    return q


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
    """
    if m < 1:
        raise ValueError("m must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    return tuple(_poly_divexact(num, den))


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """x^e mod Phi_m for e = 0 .. m-1, each as a length-phi(m) vector."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce with x^deg = -sum phi_k x^k
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for k in range(deg):
                cur[k] -= top * phi[k]
    return tuple(rows)


class CyclotomicElement:
    """An element of Z[zeta_m] in the power basis reduced modulo Phi_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        deg = len(cyclotomic_polynomial(m)) - 1
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for m={m}, got {len(coeffs)}")
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def from_exponents(cls, m: int, counts: dict[int, int]) -> CyclotomicElement:
        """sum_e counts[e] * zeta^e, reducing the exponents mod m then mod Phi_m."""
        table = _power_table(m)
        acc = [0] * len(table[0])
        for e, c in counts.items():
            if c:
                row = table[e % m]
                for k, r in enumerate(row):
                    if r:
                        acc[k] += c * r
        return cls(m, acc)

    @classmethod
    def root_power(cls, m: int, e: int) -> CyclotomicElement:
        return cls.from_exponents(m, {e: 1})

    @classmethod
    def integer(cls, m: int, value: int) -> CyclotomicElement:
        return cls.from_exponents(m, {0: value})

    @classmethod
    def zero(cls, m: int) -> CyclotomicElement:
        return cls.integer(m, 0)

    @classmethod
    def one(cls, m: int) -> CyclotomicElement:
        return cls.integer(m, 1)

    def _coerce(self, other) -> CyclotomicElement:
        if isinstance(other, CyclotomicElement):
            if other.m != self.m:
                raise ValueError(f"ring mismatch: m={self.m} vs m={other.m}")
            return other
        if isinstance(other, int):
            return CyclotomicElement.integer(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.m, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.m, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElement(self.m, [x * other for x in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        counts: dict[int, int] = {}
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        counts[i + j] = counts.get(i + j, 0) + x * y
        return CyclotomicElement.from_exponents(self.m, counts)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for roots of unity")
        out = CyclotomicElement.one(self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> CyclotomicElement:
        """Complex conjugation, the automorphism zeta -> zeta^-1."""
        return CyclotomicElement.from_exponents(
            self.m, {(-i) % self.m: x for i, x in enumerate(self.coeffs) if x})

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (CyclotomicElement, int)):
            other = self._coerce(other)
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.m)
        return complex(sum(c * z ** k for k, c in enumerate(self.coeffs)))

    def __complex__(self):
        return self.to_complex()

    def max_coeff(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __repr__(self):
        return f"CyclotomicElement(m={self.m}, coeffs={list(self.coeffs)})"

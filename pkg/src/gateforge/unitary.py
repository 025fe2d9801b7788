"""2x2 unitaries in (a, b, phi) form and the exact diagonal gates D_j.

A unitary is stored as

    U = exp(i*phi/2) * [[a, -conj(b)],
                        [b,  conj(a)]],     |a|^2 + |b|^2 = 1,

so that det U = exp(i*phi).  Roots of unity are carried exactly as
:class:`UnitAngle` values and only turned into floats when a matrix is
evaluated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

TAU_UNIT = 1e-12


@dataclass(frozen=True)
class UnitAngle:
    """The unit complex number exp(i*pi*numerator/modulus), held exactly.

    Instances are kept in canonical form: the fraction numerator/modulus is
    in lowest terms and the numerator lies in [0, 2*modulus).
    """

    numerator: int
    modulus: int = 1

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        g = math.gcd(self.numerator, self.modulus)
        mod = self.modulus // g
        num = (self.numerator // g) % (2 * mod)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "modulus", mod)

    @classmethod
    def one(cls) -> UnitAngle:
        return cls(0, 1)

    @classmethod
    def minus_one(cls) -> UnitAngle:
        return cls(1, 1)

    @classmethod
    def from_fraction(cls, turns_of_pi: Fraction) -> UnitAngle:
        return cls(turns_of_pi.numerator, turns_of_pi.denominator)

    @property
    def fraction(self) -> Fraction:
        """The angle as a rational multiple of pi."""
        return Fraction(self.numerator, self.modulus)

    @property
    def radians(self) -> float:
        return math.pi * self.numerator / self.modulus

    def __mul__(self, other: UnitAngle) -> UnitAngle:
        if not isinstance(other, UnitAngle):
            return NotImplemented
        m = self.modulus * other.modulus // math.gcd(self.modulus, other.modulus)
        return UnitAngle(self.numerator * (m // self.modulus)
                         + other.numerator * (m // other.modulus), m)

    def __pow__(self, k: int) -> UnitAngle:
        return UnitAngle(self.numerator * k, self.modulus)

    def inverse(self) -> UnitAngle:
        return UnitAngle(-self.numerator, self.modulus)

    conjugate = inverse

    def sqrt(self) -> UnitAngle:
        """The principal square root, exp(i*pi*numerator/(2*modulus))."""
        return UnitAngle(self.numerator, 2 * self.modulus)

    def to_complex(self) -> complex:
        # exact values on the axes keep identities like lambda0*lambda1 = -1 clean
        frac = self.fraction
        if frac == 0:
            return 1 + 0j
        if frac == 1:
            return -1 + 0j
        if frac == Fraction(1, 2):
            return 1j
        if frac == Fraction(3, 2):
            return -1j
        return cmath.exp(1j * self.radians)

    def __complex__(self) -> complex:
        return self.to_complex()

    def __str__(self) -> str:
        return f"exp(i*pi*{self.numerator}/{self.modulus})"


@dataclass(frozen=True)
class Unitary2:
    """A U(2) element exp(i*phi/2) * [[a, -conj(b)], [b, conj(a)]]."""

    a: complex
    b: complex
    phi: float = 0.0

    @classmethod
    def identity(cls) -> Unitary2:
        return cls(1 + 0j, 0j, 0.0)

    @classmethod
    def from_matrix(cls, m, tol: float = TAU_UNIT) -> Unitary2:
        """Recover (a, b, phi) from a 2x2 unitary matrix.

        phi is taken in [0, 2*pi); the pair (-a, -b, phi + 2*pi) describes the
        same matrix.
        """
        m = np.asarray(m, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        if np.max(np.abs(m @ m.conj().T - np.eye(2))) > tol:
            raise ValueError("matrix is not unitary within tolerance")
        phi = cmath.phase(np.linalg.det(m)) % (2 * math.pi)
        half = cmath.exp(-0.5j * phi)
        return cls(complex(m[0, 0] * half), complex(m[1, 0] * half), phi)

    @property
    def global_factor(self) -> complex:
        return cmath.exp(0.5j * self.phi)

    def matrix(self) -> np.ndarray:
        a, b = self.a, self.b
        return self.global_factor * np.array(
            [[a, -b.conjugate()], [b, a.conjugate()]], dtype=complex)

    def det(self) -> complex:
        return cmath.exp(1j * self.phi)

    def norm_defect(self) -> float:
        return abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0)

    def is_valid(self, tol: float = TAU_UNIT) -> bool:
        return self.norm_defect() <= tol

    def __matmul__(self, other: Unitary2) -> Unitary2:
        return mul(self, other)


def mul(u: Unitary2, v: Unitary2) -> Unitary2:
    """Matrix product u @ v; phases add."""
    return Unitary2(u.a * v.a - u.b.conjugate() * v.b,
                    u.b * v.a + u.a.conjugate() * v.b,
                    u.phi + v.phi)


def dagger(u: Unitary2) -> Unitary2:
    return Unitary2(u.a.conjugate(), -u.b, -u.phi)


def max_abs_diff(u: Unitary2, v: Unitary2) -> float:
    """Entrywise max-norm distance between the realized matrices."""
    return float(np.max(np.abs(u.matrix() - v.matrix())))


def diagonal(lam0: UnitAngle, lam1: UnitAngle) -> Unitary2:
    """diag(lam0, lam1) as a Unitary2 with the phase read off exactly."""
    det = lam0 * lam1
    a = lam0 * det.sqrt().inverse()
    return Unitary2(a.to_complex(), 0j, det.radians)


def _check_order(j: int, p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd integer >= 3, got {p}")
    if not 1 <= j <= (p - 1) // 2:
        raise ValueError(f"j must lie in 1..{(p - 1) // 2} for p={p}, got {j}")


def lambda_angle(k: int, l: int, p: int) -> UnitAngle:
    """lambda_{k,l} for theta_p = pi/p with no range check on k.

    k = 0 is the sentinel lambda_{00} = lambda_{01} = 1.  Used by the
    coefficient engine, whose shifted tables run k up to (p-1)/2.
    """
    if k == 0:
        return UnitAngle.one()
    sign = 1 if k % 2 == 0 else -1
    if l == 0:
        return UnitAngle(sign * k, 2 * p)
    # (-1)^(k+1) * omega^((-1)^(k+1) k), omega = exp(i*pi/(2p))
    return UnitAngle(2 * p * (k + 1) - sign * k, 2 * p)


def make_lambda(j: int, p: int) -> tuple[UnitAngle, UnitAngle]:
    """The diagonal entries (lambda_j0, lambda_j1) of D_j(pi/p)."""
    _check_order(j, p)
    return lambda_angle(j, 0, p), lambda_angle(j, 1, p)


@dataclass(frozen=True)
class DiagonalGate:
    j: int
    p: int
    lam0: UnitAngle
    lam1: UnitAngle

    def __post_init__(self):
        _check_order(self.j, self.p)
        if self.lam0 * self.lam1 != UnitAngle(self.j + 1, 1):
            raise ValueError("lambda_j0 * lambda_j1 must equal (-1)^(j+1)")
        if (self.lam0 ** 2).conjugate() != self.lam1 ** 2:
            raise ValueError("conj(lambda_j0^2) must equal lambda_j1^2")

    @classmethod
    def make(cls, j: int, p: int) -> DiagonalGate:
        return cls(j, p, *make_lambda(j, p))


def diag_gate_matrix(g: DiagonalGate) -> Unitary2:
    return diagonal(g.lam0, g.lam1)


def random_su2(rng: np.random.Generator) -> Unitary2:
    """Haar-random SU(2) element from four standard normals."""
    x = rng.standard_normal(4)
    x /= np.linalg.norm(x)
    return Unitary2(complex(x[0], x[1]), complex(x[2], x[3]), 0.0)


def su2_with_offdiag(rng: np.random.Generator, b_abs: float) -> Unitary2:
    """Random SU(2) element whose off-diagonal magnitude is exactly b_abs."""
    if not 0.0 <= b_abs <= 1.0:
        raise ValueError("b_abs must lie in [0, 1]")
    ta, tb = rng.uniform(0.0, 2 * math.pi, size=2)
    a_abs = math.sqrt(1.0 - b_abs * b_abs)
    return Unitary2(cmath.rect(a_abs, ta), cmath.rect(b_abs, tb), 0.0)

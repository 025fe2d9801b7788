"""Trigonometric product/sum identities and the alternating binomial identity.

The products are compared in sign + log-magnitude form: the sine product is
2^-n, which leaves the normal double range at n = 1022 and flushes to zero
shortly after.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .linear_system import binom

TOL_A1 = 1e-10
TOL_A2 = 1e-8
TOL_A3 = 1e-8
ZERO_FACTOR = 1e-14


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    lhs: float
    rhs: float
    abs_error: float
    tol: float
    passed: bool


def _report(name, n, lhs, rhs, err, tol):
    return IdentityReport(name, n, float(lhs), float(rhs), float(err), tol, bool(err <= tol))


def _theta(n: int) -> float:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.pi / (2 * n + 1)


def lemma_a1(n: int, tol: float = TOL_A1) -> IdentityReport:
    """sum_{k=0}^n (-1)^k cos(k theta) = 1/2 with theta = pi/(2n+1)."""
    th = _theta(n)
    k = np.arange(n + 1)
    terms = np.where(k % 2 == 0, 1.0, -1.0) * np.cos(k * th)
    lhs = math.fsum(terms.tolist())
    return _report("A1", n, lhs, 0.5, abs(lhs - 0.5), tol)


def lemma_a2(n: int, tol: float = TOL_A2, theta: float | None = None) -> IdentityReport:
    """prod_{k=1}^n (2cos(k theta) + 2(-1)^k) = (-1)^(n(n+1)/2).

    lhs/rhs in the report are the signs; abs_error is |log|prod||, or inf when
    the sign is wrong.  A factor within 1e-14 of zero raises, since that can
    only come from a bad angle.
    """
    th = _theta(n) if theta is None else theta
    k = np.arange(1, n + 1)
    factors = 2.0 * np.cos(k * th) + 2.0 * np.where(k % 2 == 0, 1.0, -1.0)
    small = np.abs(factors) < ZERO_FACTOR
    if small.any():
        bad = int(k[small][0])
        raise ValueError(f"factor k={bad} is numerically zero; angle theta={th!r} is wrong")
    sign = -1 if int(np.sum(factors < 0)) % 2 else 1
    logmag = math.fsum(np.log(np.abs(factors)).tolist())
    want = -1 if (n * (n + 1) // 2) % 2 else 1
    err = abs(logmag) if sign == want else math.inf
    return _report("A2", n, sign, want, err, tol)


def lemma_a3(n: int, tol: float = TOL_A3) -> IdentityReport:
    """prod_{k=1}^n sin((2k-1) pi/(4n+2)) = 2^-n, checked as sum log sin = -n log 2.

    abs_error is relative to n log 2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = np.arange(1, n + 1)
    lhs = math.fsum(np.log(np.sin((2 * k - 1) * math.pi / (4 * n + 2))).tolist())
    rhs = -n * math.log(2.0)
    return _report("A3", n, lhs, rhs, abs(lhs - rhs) / abs(rhs), tol)


# -- alternating binomial sums of polynomials ---------------------------------

def _degree(coeffs: Sequence) -> int:
    d = len(coeffs) - 1
    while d >= 0 and coeffs[d] == 0:
        d -= 1
    return d


def poly_eval(coeffs: Sequence, x):
    """Horner, lowest degree first; exact for int/Fraction input."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def alternating_sum(coeffs: Sequence, d: int):
    """sum_{j=0}^d (-1)^j C(d, j) P(j)."""
    return sum((-1) ** j * binom(d, j) * poly_eval(coeffs, j) for j in range(d + 1))


def forward_difference(coeffs: Sequence, d: int):
    """Delta^d P at 0 by repeated differencing of P(0), ..., P(d).

    Equals (-1)^d times the alternating sum, without using any binomials.
    """
    vals = [poly_eval(coeffs, j) for j in range(d + 1)]
    for _ in range(d):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals[0]


def ruiz_identity(coeffs: Sequence, d: int) -> IdentityReport:
    """Check sum_{j=0}^d (-1)^j C(d,j) P(j) = 0 exactly, for deg P < d.

    Both the binomial sum and the finite-difference route must vanish.
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    coeffs = [Fraction(c) for c in coeffs]
    deg = _degree(coeffs)
    if deg >= d:
        lead = coeffs[deg] if deg >= 0 else 0
        raise ValueError(
            f"deg P = {deg} is not below d = {d}; the sum does not vanish in general "
            f"(for deg P = d it is (-1)^d * d! * lead = {(-1) ** d * math.factorial(d) * lead})")
    s = alternating_sum(coeffs, d)
    fd = forward_difference(coeffs, d)
    err = abs(s) + abs(fd)
    return IdentityReport("ruiz", d, float(s), 0.0, float(err), 0.0, err == 0)


def rising_binomial_poly(mu0: int, mu_slope: int, nu: int) -> list[Fraction]:
    """Coefficients in j of C(mu + nu - 1, nu) = mu (mu+1) ... (mu+nu-1) / nu!,
    where mu = mu0 + mu_slope * j."""
    poly = [Fraction(1)]
    for t in range(nu):
        # multiply by (mu0 + t) + mu_slope * j
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * (mu0 + t)
            nxt[i + 1] += c * mu_slope
        poly = nxt
    fact = math.factorial(nu)
    return [c / fact for c in poly]


def inverse_proof_poly(m: int, i: int, R: int) -> list[Fraction]:
    """P(j) = C(2m-i-j+R-2, 2m-2i-j+R-1) as a polynomial in j of degree i-1."""
    if i < 1:
        raise ValueError("i must be >= 1")
    return rising_binomial_poly(2 * m - 2 * i + R, -1, i - 1)


def reports_to_csv(reports: Sequence[IdentityReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity", "n", "error", "pass"])
    for r in reports:
        w.writerow([r.identity, r.n, repr(r.abs_error), str(r.passed).lower()])
    return buf.getvalue()


def random_ruiz_cases(count: int, seed: int = 0, max_d: int = 30, coeff_bound: int = 10 ** 6):
    """(coeffs, d) pairs with 1 <= d <= max_d and deg P < d."""
    rng = np.random.default_rng(seed)
    cases = []
    for _ in range(count):
        d = int(rng.integers(1, max_d + 1))
        deg = int(rng.integers(0, d))
        coeffs = [int(c) for c in rng.integers(-coeff_bound, coeff_bound + 1, size=deg + 1)]
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        cases.append((coeffs, d))
    return cases


def identity_sweep(a1_max: int, a2_max: int, a3_max: int, ruiz_trials: int = 0,
                   seed: int = 0) -> list[IdentityReport]:
    out = [lemma_a1(n) for n in range(1, a1_max + 1)]
    out += [lemma_a2(n) for n in range(1, a2_max + 1)]
    out += [lemma_a3(n) for n in range(1, a3_max + 1)]
    out += [ruiz_identity(c, d) for c, d in random_ruiz_cases(ruiz_trials, seed)]
    return out

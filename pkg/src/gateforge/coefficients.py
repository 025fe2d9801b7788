"""The alpha/beta coefficients of the nested forms

    b_{k+1}/b_k = beta_0 + |a|^2 (beta_1 - |b|^2 (beta_2 + |a|^2 (beta_3 - ...)))
    a_{k+1}/a_k = alpha_0 - |b|^2 (alpha_1 + |a|^2 (alpha_2 - |b|^2 (alpha_3 + ...)))

computed by the coupled shift recursion, by the specialised closed forms for
j = 0, 1, 2, n and by the general nested-sum formula.  Every route can run
over complex floats or exactly over Z[omega], omega = exp(i*pi/(2p)) a
primitive 4p-th root of unity.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import mpmath

from .cyclotomic import CyclotomicElement
from .linear_system import binom
from .unitary import UnitAngle, lambda_angle

TAU_COEFF = 1e-9

# The shift recursion cancels heavily: in complex128 it loses roughly 0.4
# digits per order (imag(beta) ~ 1e-8 at n = 20, ~ 1e3 at n = 50).  Above this
# order recurse_coeffs switches to mpmath at a precision that grows with n.
FLOAT_MAX_ORDER = 12


def default_dps(n: int) -> int | None:
    return None if n <= FLOAT_MAX_ORDER else 30 + n


def chi(j: int) -> int:
    return j % 2


def _angle_exact(angle: UnitAngle, p: int) -> CyclotomicElement:
    # exp(i*pi*num/mod) = zeta_{4p}^(num * 2p / mod)
    m = 4 * p
    if (2 * p) % angle.modulus:
        raise ValueError(f"{angle} is not a power of exp(i*pi/(2p)) for p={p}")
    return CyclotomicElement.root_power(m, angle.numerator * (2 * p // angle.modulus))


def lambda_values(n: int, exact: bool = False, dps: int | None = None) -> list[tuple]:
    """[(lambda_k0, lambda_k1) for k = 0..n] at p = 2n+1, with the k=0 sentinel (1, 1).

    Values are CyclotomicElements when ``exact``, mpmath mpc numbers at ``dps``
    digits when dps is given, complex floats otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = 2 * n + 1
    ctx = None
    if dps is not None and not exact:
        # a private context keeps the precision setting local to this call
        ctx = mpmath.MPContext()
        ctx.dps = dps
    out = []
    for k in range(n + 1):
        pair = (lambda_angle(k, 0, p), lambda_angle(k, 1, p))
        if exact:
            out.append(tuple(_angle_exact(x, p) for x in pair))
        elif ctx is not None:
            out.append(tuple(ctx.expjpi(ctx.mpf(x.numerator) / x.modulus) for x in pair))
        else:
            out.append(tuple(x.to_complex() for x in pair))
    return out


def _prod(values, one):
    out = one
    for v in values:
        out = out * v
    return out


def _sq(x):
    return x * x


# -- recursion ----------------------------------------------------------------

def _recursion(n: int, lam: list[tuple]):
    """Bottom-up table over (order, shift); returns (alpha, beta) at order n, shift 0.

    The entry at (order m, shift s) is the order-m coefficient with every
    lambda index raised by s, so T applied to order m at shift s is the
    order-m entry at shift s+1.
    """
    one = lam[0][0]
    zero = one - one
    table: dict[tuple[int, int], tuple[list, list]] = {}
    for s in range(n):
        l0, l1 = lam[1 + s]
        d = _sq(l0 - l1)
        table[(1, s)] = ([l0 * l0, d], [l0 * l1, d])

    def get(coeffs, j):
        return coeffs[j] if 0 <= j < len(coeffs) else zero

    for m in range(1, n):
        for s in range(n - m):
            l0, l1 = lam[1 + s]
            l00, l11, l01 = l0 * l0, l1 * l1, l0 * l1
            ta, tb = table[(m, s + 1)]
            alpha, beta = [], []
            for j in range(m + 2):
                a_j, a_jm = get(ta, j), get(ta, j - 1)
                b_j, b_jm = get(tb, j), get(tb, j - 1)
                c = chi(j)
                alpha.append(l00 * a_j + l00 * (a_jm - a_j * c)
                             + l11 * (a_jm.conjugate() - a_j.conjugate() * c)
                             - 2 * l01 * b_jm)
                beta.append(l01 * b_j + l00 * a_jm + l11 * a_jm.conjugate()
                            - 2 * l01 * (b_jm + b_j * c))
            table[(m + 1, s)] = (alpha, beta)
    return table[(n, 0)]


@dataclass(frozen=True)
class CoeffTable:
    """alpha_j, beta_j for j = 0..n and v_j = beta_j / beta_0 (so v[0] == 1)."""

    n: int
    alpha: tuple[complex, ...]
    beta: tuple[complex, ...]
    v: tuple[float, ...]

    @classmethod
    def from_values(cls, n: int, alpha: Sequence[complex], beta: Sequence[complex]) -> CoeffTable:
        alpha = tuple(complex(x) for x in alpha)
        beta = tuple(complex(x) for x in beta)
        b0 = beta[0].real
        return cls(n, alpha, beta, tuple(b.real / b0 for b in beta))

    def max_imag_beta(self) -> float:
        return max(abs(b.imag) for b in self.beta)

    def coefficient(self, which: str, j: int) -> complex:
        """alpha_j or beta_j, zero beyond j = n."""
        seq = self.alpha if which == "alpha" else self.beta
        return seq[j] if 0 <= j <= self.n else 0j


def recurse_coeffs(n: int, dps: int | None = -1) -> CoeffTable:
    """The table from the shift recursion.

    dps = -1 picks the precision from ``default_dps``; None forces complex128.
    """
    if dps == -1:
        dps = default_dps(n)
    alpha, beta = _recursion(n, lambda_values(n, dps=dps))
    return CoeffTable.from_values(n, alpha[: n + 1], beta[: n + 1])


def recurse_coeffs_exact(n: int) -> tuple[list[CyclotomicElement], list[CyclotomicElement]]:
    alpha, beta = _recursion(n, lambda_values(n, exact=True))
    return alpha[: n + 1], beta[: n + 1]


# -- closed forms -------------------------------------------------------------

def closed_form_j0_angle(n: int) -> UnitAngle:
    """alpha_0^{(n)} = omega^((2(-1)^n n + (-1)^n - 1)/2) with omega = exp(i*pi/(2p))."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = 1 if n % 2 == 0 else -1
    return UnitAngle((2 * s * n + s - 1) // 2, 2 * (2 * n + 1))


alpha0_angle = closed_form_j0_angle


def beta0_sign(n: int) -> int:
    return -1 if (n * (n + 3) // 2) % 2 else 1


def closed_form_j0(n: int) -> tuple[complex, float]:
    return closed_form_j0_angle(n).to_complex(), float(beta0_sign(n))


def closed_form_jn(n: int, exact: bool = False):
    """alpha_n = beta_n = prod_{k=1}^n (lambda_k0 - lambda_k1)^2."""
    lam = lambda_values(n, exact)
    return _prod((_sq(lam[k][0] - lam[k][1]) for k in range(1, n + 1)), lam[0][0])


def closed_form_j1(n: int, exact: bool = False):
    """(alpha_1, beta_1): the leading square plus the alternating sum over l = 1..n-1."""
    lam = lambda_values(n, exact)
    one = lam[0][0]

    def tail(start):
        return _sq(_prod((lam[k][0] for k in range(start, n + 1)), one)
                   - _prod((lam[k][1] for k in range(start, n + 1)), one))

    alpha = beta = tail(1)
    for l in range(1, n):
        sign = -1 if l % 2 else 1
        t = tail(l + 1) * sign
        alpha = alpha + t * _prod((_sq(lam[k][chi(k)]) for k in range(1, l + 1)), one)
        beta = beta + t * _prod((lam[k][0] * lam[k][1] for k in range(1, l + 1)), one)
    return alpha, beta


def closed_form_j2(n: int, exact: bool = False):
    """(alpha_2, beta_2) from the explicit double sum over (l2, l1)."""
    if n < 2:
        raise ValueError(f"the j=2 formula needs n >= 2, got {n}")
    lam = lambda_values(n, exact)
    one = lam[0][0]
    zero = one - one
    alpha = beta = zero
    for l2 in range(n - 1):
        lead_a = _prod((_sq(lam[k][0]) for k in range(l2 + 1)), one)
        lead_b = _prod((lam[k][0] * lam[k][1] for k in range(l2 + 1)), one)
        inner = zero
        for l1 in range(n - 1 - l2):
            ks = range(l2 + 1, l1 + l2 + 2)
            first = _sq(_prod((lam[k][chi(k)] for k in ks), one)
                        - _prod((lam[k][chi(k + 1)] for k in ks), one))
            rest = range(l1 + l2 + 2, n + 1)
            last = _sq(_prod((lam[k][0] for k in rest), one)
                       - _prod((lam[k][1] for k in rest), one))
            term = first * last
            inner = inner - term if l1 % 2 else inner + term
        alpha = alpha + lead_a * inner
        beta = beta + lead_b * inner
    return alpha, beta


def compositions(j: int, budget: int):
    """All (l_1, ..., l_j) of nonnegative ints with sum <= budget."""
    # stars and bars: choose j cut points among budget + j slots
    for cuts in itertools.combinations(range(budget + j), j):
        parts, prev = [], -1
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        yield tuple(parts)


def nested_term_count(n: int) -> int:
    """Number of index tuples summed over by general_nested for all j = 1..n."""
    return sum(math.comb(n, j) for j in range(1, n + 1))


def general_nested(n: int, j: int, exact: bool = False):
    """(alpha_j, beta_j) from the general nested-sum formula, 1 <= j <= n.

    With L(a) = l_a + ... + l_j the summand is

        lead(l_j) * (prod_{k=L(1)+j}^n lambda_k0 - prod lambda_k1)^2
                  * prod_mu (-1)^(chi_mu l_mu)
                  * prod_{mu<j} (prod_{k} lambda_{k, chi_mu chi_k}
                                 - prod_{k} lambda_{k, 1 - chi_mu chi_k})^2,

    the inner k running over L(mu+1)+j-mu .. L(mu)+j-mu.
    """
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}, got {j}")
    lam = lambda_values(n, exact)
    one = lam[0][0]
    zero = one - one
    alpha = beta = zero
    cj = chi(j)
    for parts in compositions(j, n - j):
        ell = (None,) + parts     # ell[mu] = l_mu
        # suffix sums L[mu] = l_mu + ... + l_j, L[j+1] = 0
        L = [0] * (j + 2)
        for mu in range(j, 0, -1):
            L[mu] = L[mu + 1] + ell[mu]
        top = L[1] + j
        common = _sq(_prod((lam[k][0] for k in range(top, n + 1)), one)
                     - _prod((lam[k][1] for k in range(top, n + 1)), one))
        for mu in range(1, j):
            ks = range(L[mu + 1] + j - mu, L[mu] + j - mu + 1)
            cm = chi(mu)
            common = common * _sq(_prod((lam[k][cm * chi(k)] for k in ks), one)
                                  - _prod((lam[k][1 - cm * chi(k)] for k in ks), one))
        if sum(chi(mu) * ell[mu] for mu in range(1, j + 1)) % 2:
            common = -common
        lead_a = _prod((_sq(lam[k][cj * chi(k)]) for k in range(ell[j] + 1)), one)
        lead_b = _prod((lam[k][0] * lam[k][1] for k in range(ell[j] + 1)), one)
        alpha = alpha + lead_a * common
        beta = beta + lead_b * common
    return alpha, beta


def nested_coeffs(n: int) -> CoeffTable:
    """The full table from general_nested plus the j = 0 closed form."""
    a0, b0 = closed_form_j0(n)
    pairs = [general_nested(n, j) for j in range(1, n + 1)]
    return CoeffTable.from_values(n, [a0] + [a for a, _ in pairs], [b0] + [b for _, b in pairs])


# -- conjectured values and the nested polynomial -----------------------------

def conjectured_v(n: int) -> list[int]:
    """[v_1, ..., v_n]: v_1 = -1, v_2i = C(n-i, n-2i), v_2i+1 = -C(n-i-1, n-2i-1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = []
    for j in range(1, n + 1):
        i = j // 2
        if j == 1:
            out.append(-1)
        elif j % 2 == 0:
            out.append(binom(n - i, n - 2 * i))
        else:
            out.append(-binom(n - i - 1, n - 2 * i - 1))
    return out


def conjectured_table(n: int) -> CoeffTable:
    """A table whose beta column is beta_0 * (1, v_1, ..., v_n); alpha is left zero."""
    b0 = beta0_sign(n)
    beta = [b0] + [b0 * v for v in conjectured_v(n)]
    return CoeffTable.from_values(n, [0j] * (n + 1), beta)


def _coeffs(table, which):
    if isinstance(table, CoeffTable):
        return table.beta if which == "beta" else table.alpha
    return tuple(table)


def eval_B(table, x: float) -> complex | float:
    """Nested polynomial for b_{k+1}/b_k at |b|^2 = x, |a|^2 = 1 - x."""
    beta = _coeffs(table, "beta")
    acc = beta[-1]
    for j in range(len(beta) - 2, -1, -1):
        acc = beta[j] + ((1.0 - x) if j % 2 == 0 else -x) * acc
    if isinstance(table, CoeffTable):
        return acc.real
    return acc


def eval_A(table, x: float) -> complex:
    """Nested polynomial for a_{k+1}/a_k at |b|^2 = x."""
    alpha = _coeffs(table, "alpha")
    acc = alpha[-1]
    for j in range(len(alpha) - 2, -1, -1):
        acc = alpha[j] + (-x if j % 2 == 0 else (1.0 - x)) * acc
    return acc


# -- exact certificates -------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    n: int
    j: int
    passed: bool
    residual: CyclotomicElement


def exact_verify(n: int, j: int) -> Certificate:
    """beta_j - beta_0 * v_j reduced in Z[zeta_{4p}]; passes iff it is zero."""
    if not 1 <= j <= n:
        raise ValueError(f"j must lie in 1..{n}, got {j}")
    _, beta_j = general_nested(n, j, exact=True)
    target = beta0_sign(n) * conjectured_v(n)[j - 1]
    residual = beta_j - target
    return Certificate(n, j, residual.is_zero(), residual)


@dataclass(frozen=True)
class CoeffRow:
    n: int
    j: int
    beta_re: float
    beta_im: float
    v: float
    v_conj: int
    delta: float
    exact_pass: bool | None
    passed: bool


def coefficient_rows(n: int, exact: bool = False, tol: float = TAU_COEFF) -> list[CoeffRow]:
    table = recurse_coeffs(n)
    conj = conjectured_v(n)
    rows = []
    for j in range(1, n + 1):
        b = table.beta[j]
        delta = abs(table.v[j] - conj[j - 1])
        ex = exact_verify(n, j).passed if exact else None
        ok = delta <= tol and abs(b.imag) <= tol and ex is not False
        rows.append(CoeffRow(n, j, b.real, b.imag, table.v[j], conj[j - 1], delta, ex, ok))
    return rows

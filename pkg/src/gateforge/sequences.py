"""Gate words A_p(U; pi/p) and their evaluation.

A word is a token program over the letters U, U^-1 and diagonal gates.
``build_word(n)`` unrolls the recursion

    P_{j+1} = D_{j+1} U^{(-1)^j} P_j,    Q_{j+1} = Q_j U^{(-1)^j} D_{j+1},
    A_p(U)  = Q_n U^{(-1)^n} P_n,        p = 2n + 1,

into DiagJ tokens; ``normalize_word`` rewrites each D_j as a power of
D(theta) = diag(1, exp(i*theta)) and records the scalar that was pulled out.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .coefficients import alpha0_angle
from .unitary import (
    UnitAngle,
    Unitary2,
    dagger,
    diagonal,
    lambda_angle,
    make_lambda,
    mul,
)

STANDARD = "standard"   # D(theta)^m = diag(1, exp(i m theta))
OMEGA = "omega"         # D(theta)^m = diag(omega^m, omega^-m), omega = exp(i theta/2)
CONVENTIONS = (STANDARD, OMEGA)


class TokenKind(enum.Enum):
    BASE = "U"
    BASE_INV = "U'"
    DIAG_J = "D_"
    DIAG_POW = "D^"


@dataclass(frozen=True)
class GateToken:
    kind: TokenKind
    index: int = 0

    def __post_init__(self):
        if self.kind is TokenKind.DIAG_J and self.index < 1:
            raise ValueError(f"DiagJ index must be >= 1, got {self.index}")
        if self.kind is TokenKind.DIAG_POW and self.index == 0:
            raise ValueError("DiagPow exponent must be nonzero")

    @property
    def is_base(self) -> bool:
        return self.kind in (TokenKind.BASE, TokenKind.BASE_INV)

    def __str__(self) -> str:
        if self.is_base:
            return self.kind.value
        return f"{self.kind.value}{self.index}"


U_TOK = GateToken(TokenKind.BASE)
UINV_TOK = GateToken(TokenKind.BASE_INV)


def _base(sign_exponent: int) -> GateToken:
    """U^{(-1)^sign_exponent}."""
    return U_TOK if sign_exponent % 2 == 0 else UINV_TOK


@dataclass(frozen=True)
class GateWord:
    """An ordered word at angle theta = pi/N.

    ``global_phase`` is the scalar g with  realized(DiagJ form) = g * realized(self)
    in the standard convention.  For words built directly in DiagJ form it is 1.
    Matrix products are read left to right, the leftmost token being the
    leftmost factor.
    """

    tokens: tuple[GateToken, ...]
    theta: UnitAngle
    global_phase: UnitAngle = field(default_factory=UnitAngle.one)
    order_n: int = 0
    convention: str = STANDARD

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.theta.numerator != 1:
            raise ValueError("theta must be pi/N for an integer N")
        n_base = sum(t.is_base for t in self.tokens)
        expected = 2 * self.order_n + 1
        if self.order_n < 1 or self.N != expected or n_base != expected:
            raise ValueError(
                f"an order-{self.order_n} word needs N = {expected} and {expected} "
                f"base tokens; got N = {self.N}, {n_base} base tokens")
        if len(self.tokens) != 2 * expected - 1:
            raise ValueError("base and diagonal tokens must alternate")
        for i, tok in enumerate(self.tokens):
            if tok.is_base != (i % 2 == 0):
                raise ValueError("word must alternate base/diagonal tokens, "
                                 "starting and ending with a base token")
            if tok.kind is TokenKind.DIAG_J and tok.index > self.order_n:
                raise ValueError(f"DiagJ index {tok.index} exceeds order {self.order_n}")

    @property
    def N(self) -> int:
        return self.theta.modulus

    @property
    def is_normalized(self) -> bool:
        return all(t.kind is not TokenKind.DIAG_J for t in self.tokens)

    def diagonal_indices(self) -> list[int]:
        return [t.index for t in self.tokens if not t.is_base]

    def token_line(self) -> str:
        return " ".join(str(t) for t in self.tokens)

    def __str__(self) -> str:
        return self.token_line()


def _check_odd(N: int, what: str = "N") -> None:
    if not isinstance(N, int) or N < 3 or N % 2 == 0:
        raise ValueError(f"{what} must be an odd integer >= 3, got {N!r}")


def build_word(n: int) -> GateWord:
    """The order-n word Q_n U^{(-1)^n} P_n in DiagJ form (p = 2n+1)."""
    if n < 1:
        raise ValueError(f"order n must be >= 1, got {n}")
    p_tokens: list[GateToken] = []   # P_j, leftmost factor first
    q_tokens: list[GateToken] = []
    for j in range(n):
        d = GateToken(TokenKind.DIAG_J, j + 1)
        p_tokens = [d, _base(j)] + p_tokens
        q_tokens = q_tokens + [_base(j), d]
    tokens = tuple(q_tokens + [_base(n)] + p_tokens)
    return GateWord(tokens, UnitAngle(1, 2 * n + 1), order_n=n)


def diag_power(j: int, p: int) -> int:
    """m_j with D_j(pi/p) = lambda_j0 * D(pi/p)^m_j."""
    return j if j % 2 == 1 else p - j


def normalize_word(w: GateWord, convention: str = STANDARD) -> GateWord:
    """Replace each D_j by D(theta)^{m_j}, pulling lambda_j0 into the global phase.

    Under ``convention="omega"`` the same power list is kept but realized with
    diag(omega^m, omega^-m); the recorded phase then only describes the
    standard realization.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    p = w.N
    phase = w.global_phase
    out = []
    for tok in w.tokens:
        if tok.kind is TokenKind.DIAG_J:
            phase = phase * make_lambda(tok.index, p)[0]
            out.append(GateToken(TokenKind.DIAG_POW, diag_power(tok.index, p)))
        else:
            out.append(tok)
    return replace(w, tokens=tuple(out), global_phase=phase, convention=convention)


@lru_cache(maxsize=4096)
def _diag_unitary(kind: TokenKind, index: int, N: int, convention: str) -> Unitary2:
    if kind is TokenKind.DIAG_J:
        return diagonal(lambda_angle(index, 0, N), lambda_angle(index, 1, N))
    if convention == STANDARD:
        return diagonal(UnitAngle.one(), UnitAngle(index, N))
    return diagonal(UnitAngle(index, 2 * N), UnitAngle(-index, 2 * N))


def token_unitary(tok: GateToken, w: GateWord) -> Unitary2:
    if tok.is_base:
        raise ValueError("base tokens have no fixed matrix")
    return _diag_unitary(tok.kind, tok.index, w.N, w.convention)


def apply(w: GateWord, u0: Unitary2) -> Unitary2:
    """Evaluate the word with U bound to u0 and U' to dagger(u0)."""
    u_inv = dagger(u0)
    acc = Unitary2.identity()
    for tok in w.tokens:
        if tok.kind is TokenKind.BASE:
            g = u0
        elif tok.kind is TokenKind.BASE_INV:
            g = u_inv
        else:
            g = _diag_unitary(tok.kind, tok.index, w.N, w.convention)
        acc = mul(acc, g)
    return acc


def invert_word(w: GateWord) -> GateWord:
    """Syntactic inverse: reverse, swap U/U', negate powers."""
    if not w.is_normalized:
        w = normalize_word(w, w.convention)
    out = []
    for tok in reversed(w.tokens):
        if tok.kind is TokenKind.BASE:
            out.append(UINV_TOK)
        elif tok.kind is TokenKind.BASE_INV:
            out.append(U_TOK)
        else:
            out.append(GateToken(TokenKind.DIAG_POW, -tok.index))
    return replace(w, tokens=tuple(out), global_phase=w.global_phase.inverse())


def _rescale(w: GateWord, factor: int) -> list[GateToken]:
    return [t if t.is_base else GateToken(TokenKind.DIAG_POW, t.index * factor)
            for t in w.tokens]


def compose_words(w1: GateWord, w2: GateWord) -> GateWord:
    """The word for A_{N2}(A_{N1}(U; pi/N1); pi/N2) at theta = pi/(N1*N2).

    Both inputs are normalized first; every base token of w2 is replaced by
    the (inverted where needed) rescaled w1.
    """
    _check_odd(w1.N, "N1")
    _check_odd(w2.N, "N2")
    if not w1.is_normalized:
        w1 = normalize_word(w1, w1.convention)
    if not w2.is_normalized:
        w2 = normalize_word(w2, w2.convention)
    if w1.convention != w2.convention:
        raise ValueError("cannot compose words in different diagonal conventions")
    N1, N2 = w1.N, w2.N
    N = N1 * N2
    inner = _rescale(w1, N2)
    inner_inv = _rescale(invert_word(w1), N2)
    tokens: list[GateToken] = []
    for tok in _rescale(w2, N1):
        if tok.kind is TokenKind.BASE:
            tokens.extend(inner)
        elif tok.kind is TokenKind.BASE_INV:
            tokens.extend(inner_inv)
        else:
            tokens.append(tok)
    # inner word appears once more than its inverse, so its phase survives once
    return GateWord(tuple(tokens), UnitAngle(1, N),
                    global_phase=w1.global_phase * w2.global_phase,
                    order_n=(N - 1) // 2, convention=w1.convention)


def word_for_factors(factors: Sequence[int], convention: str = STANDARD) -> GateWord:
    """Compose the normalized order-(p-1)/2 words for each factor, innermost first."""
    if not factors:
        raise ValueError("need at least one factor")
    words = []
    for p in factors:
        _check_odd(p, "factor")
        words.append(normalize_word(build_word((p - 1) // 2), convention))
    out = words[0]
    for w in words[1:]:
        out = compose_words(out, w)
    return out


def correction_gate(n: int) -> Unitary2:
    """F = diag(alpha_0^-1, alpha_0)."""
    a0 = alpha0_angle(n)
    return diagonal(a0.inverse(), a0)


def iterate(u0: Unitary2, n: int, K: int, correct: bool = False,
            word: GateWord | None = None) -> list[Unitary2]:
    """U_1..U_K with U_{k+1} = A(U_k), post-multiplied by F when ``correct``."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    w = build_word(n) if word is None else word
    f = correction_gate(n) if correct else None
    out = []
    u = u0
    for _ in range(K):
        u = apply(w, u)
        if f is not None:
            u = mul(u, f)
        out.append(u)
    return out


@dataclass(frozen=True)
class ReportRow:
    k: int
    b_abs: float
    residual: float


def convergence_report(u0: Unitary2, n: int, K: int,
                       word: GateWord | None = None) -> list[ReportRow]:
    """Rows (k, |b_k|, | |b_{k+1}| - |b_k|^p |) for k = 0..K-1."""
    w = build_word(n) if word is None else word
    p = w.N
    seq = [u0] + iterate(u0, n, K, word=w)
    rows = []
    for k in range(K):
        bk = abs(seq[k].b)
        rows.append(ReportRow(k, bk, abs(abs(seq[k + 1].b) - bk ** p)))
    return rows


def max_residual(rows: Sequence[ReportRow]) -> float:
    return max(r.residual for r in rows)


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, split from a 64-bit master seed."""
    ss = np.random.SeedSequence(entropy=seed & (2 ** 64 - 1), spawn_key=(trial,))
    return np.random.default_rng(ss)


# -- text serialization -------------------------------------------------------

_HEADER_RE = re.compile(
    r"^#gateword\s+theta=pi\*(?P<theta>-?\d+/\d+)\s+phase=pi\*(?P<phase>-?\d+/\d+)"
    r"\s+order=(?P<order>\d+)\s+convention=(?P<conv>\w+)\s*$")
_TOKEN_RE = re.compile(r"^(U'?|D\^(-?\d+)|D_(\d+))$")


def dumps_word(w: GateWord) -> str:
    """Two-line text form: header, then the token line."""
    header = (f"#gateword theta=pi*{w.theta.numerator}/{w.theta.modulus} "
              f"phase=pi*{w.global_phase.numerator}/{w.global_phase.modulus} "
              f"order={w.order_n} convention={w.convention}")
    return header + "\n" + w.token_line() + "\n"


def parse_tokens(line: str) -> tuple[GateToken, ...]:
    out = []
    for s in line.split():
        m = _TOKEN_RE.match(s)
        if m is None:
            raise ValueError(f"bad token {s!r}")
        if s == "U":
            out.append(U_TOK)
        elif s == "U'":
            out.append(UINV_TOK)
        elif m.group(2) is not None:
            out.append(GateToken(TokenKind.DIAG_POW, int(m.group(2))))
        else:
            out.append(GateToken(TokenKind.DIAG_J, int(m.group(3))))
    return tuple(out)


def loads_word(text: str) -> GateWord:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("expected a header line and a token line")
    m = _HEADER_RE.match(lines[0].strip())
    if m is None:
        raise ValueError(f"bad header {lines[0]!r}")
    theta = UnitAngle.from_fraction(Fraction(m.group("theta")))
    phase = UnitAngle.from_fraction(Fraction(m.group("phase")))
    return GateWord(parse_tokens(lines[1]), theta, phase,
                    int(m.group("order")), m.group("conv"))

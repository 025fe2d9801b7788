"""The integer system M_n v = -e and its closed-form inverse.

Everything here is exact integer arithmetic.  Indices in the public API are
1-based, matching the usual way the entries are written down; storage is a
plain 0-based tuple of rows.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, 0) = 1 for every a and C(a, b) = 0 when b < 0 or b > a."""
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class NestedTriangularMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError(f"entries must be {self.n}x{self.n}")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside 1..{self.n}")
        return self.entries[i - 1][j - 1]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def leading_block(self, k: int) -> NestedTriangularMatrix:
        return NestedTriangularMatrix(k, tuple(r[:k] for r in self.entries[:k]))

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.n) for j in range(i))

    def det(self) -> int:
        if not self.is_upper_triangular():
            raise ValueError("determinant is only implemented for triangular matrices")
        out = 1
        for i in range(self.n):
            out *= self.entries[i][i]
        return out

    def __matmul__(self, other: NestedTriangularMatrix) -> NestedTriangularMatrix:
        return matmul(self, other)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"Mn n={self.n}\n")
        for r in self.entries:
            buf.write(",".join(str(x) for x in r) + "\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> NestedTriangularMatrix:
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("Mn n="):
            raise ValueError("missing 'Mn n=<n>' header")
        n = int(lines[0][len("Mn n="):])
        rows = tuple(tuple(int(x) for x in ln.split(",")) for ln in lines[1:])
        return cls(n, rows)


def _from_dict(n: int, vals: dict[tuple[int, int], int]) -> NestedTriangularMatrix:
    return NestedTriangularMatrix(
        n, tuple(tuple(vals.get((i, j), 0) for j in range(1, n + 1)) for i in range(1, n + 1)))


def build_Mn(n: int) -> NestedTriangularMatrix:
    """M_n column by column.

    Column 2m+1 holds (-1)^t C(m, t) in row 2m+1-t, column 2m holds
    (-1)^(t+1) C(m-1, t) in row 2m-t, for t = 0, 1, ...
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    vals = {}
    for col in range(1, n + 1):
        m, odd = divmod(col, 2)
        top = m if odd else m - 1
        for t in range(top + 1):
            row = col - t
            if row < 1:
                break
            c = binom(top, t)
            vals[(row, col)] = c if (t + (0 if odd else 1)) % 2 == 0 else -c
    return _from_dict(n, vals)


def inverse_formula(n: int) -> NestedTriangularMatrix:
    """M_n^{-1}: row 2i carries -C(t+i-1, t), row 2i+1 carries C(t+i-1, t) at column row+t."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    vals = {}
    for row in range(1, n + 1):
        i, odd = divmod(row, 2)
        sign = 1 if odd else -1
        for col in range(row, n + 1):
            t = col - row
            vals[(row, col)] = sign * binom(t + i - 1, t)
    return _from_dict(n, vals)


def matmul(x: NestedTriangularMatrix, y: NestedTriangularMatrix) -> NestedTriangularMatrix:
    if x.n != y.n:
        raise ValueError("size mismatch")
    n = x.n
    if x.is_upper_triangular() and y.is_upper_triangular():
        # only k in i..j contributes to entry (i, j)
        X, Y = x.entries, y.entries
        return NestedTriangularMatrix(n, tuple(
            tuple(sum(X[i][k] * Y[k][j] for k in range(i, j + 1)) if j >= i else 0
                  for j in range(n))
            for i in range(n)))
    cols = list(zip(*y.entries))
    return NestedTriangularMatrix(
        n, tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in x.entries))


def identity(n: int) -> NestedTriangularMatrix:
    return _from_dict(n, {(i, i): 1 for i in range(1, n + 1)})


def matvec(x: NestedTriangularMatrix, v) -> list[int]:
    return [sum(a * b for a, b in zip(r, v)) for r in x.entries]


def solve_system(n: int) -> list[int]:
    """v with M_n v = -e, by back substitution (diagonal entries are +-1)."""
    m = build_Mn(n)
    v = [0] * n
    for i in range(n - 1, -1, -1):
        rhs = -1 - sum(m.entries[i][k] * v[k] for k in range(i + 1, n))
        d = m.entries[i][i]
        q, r = divmod(rhs, d)
        if r:
            raise ArithmeticError(f"non-integral step at row {i + 1}")
        v[i] = q
    return v


def verify_inverse(n: int) -> bool:
    return matmul(build_Mn(n), inverse_formula(n)) == identity(n)


def hockey_stick_check(i: int, n: int) -> bool:
    """sum_{t=0}^{n-2i} C(t+i-1, t) == C(n-i, n-2i)."""
    if i < 0 or n < 2 * i:
        raise ValueError(f"need 0 <= 2i <= n, got i={i}, n={n}")
    return sum(binom(t + i - 1, t) for t in range(n - 2 * i + 1)) == binom(n - i, n - 2 * i)

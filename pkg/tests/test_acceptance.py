"""Acceptance suite: one test per criterion, each timed against its budget.

Run alone with ``pytest tests/test_acceptance.py -v``; a summary line per
criterion is printed at the end of the session (and inline with ``-s``).
"""

import time

import numpy as np

from acceptance_log import record
from gateforge import coefficients as co
from gateforge import linear_system as ls
from gateforge import sequences as sq
from gateforge.identities import (
    lemma_a1,
    lemma_a2,
    lemma_a3,
    random_ruiz_cases,
    ruiz_identity,
)
from gateforge.unitary import random_su2, su2_with_offdiag

SEED = 20240917
TRIALS = 100

M10 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, -2, -1, -1, 0, 0, 0],
    [0, 0, 0, 0, 1, 2, 3, 1, 1, 0],
    [0, 0, 0, 0, 0, -1, -3, -3, -4, -1],
    [0, 0, 0, 0, 0, 0, 1, 3, 6, 4],
    [0, 0, 0, 0, 0, 0, 0, -1, -4, -6],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
]
M10_INV = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -1, -1, -1, -1, -1, -1, -1, -1, -1],
    [0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, -1, -2, -3, -4, -5, -6, -7],
    [0, 0, 0, 0, 1, 2, 3, 4, 5, 6],
    [0, 0, 0, 0, 0, -1, -3, -6, -10, -15],
    [0, 0, 0, 0, 0, 0, 1, 3, 6, 10],
    [0, 0, 0, 0, 0, 0, 0, -1, -4, -10],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 4],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
]


def _worst_residual(p, K):
    n = (p - 1) // 2
    word = sq.build_word(n)
    worst = 0.0
    for t in range(TRIALS):
        u0 = random_su2(sq.trial_rng(SEED, t))
        worst = max(worst, sq.max_residual(sq.convergence_report(u0, n, K, word=word)))
    return worst


def test_c1_proven_laws():
    t0 = time.perf_counter()
    worst = {p: _worst_residual(p, 3) for p in (3, 5, 7)}
    dt = time.perf_counter() - t0
    ok = all(w <= 1e-12 for w in worst.values())
    detail = "max residual " + ", ".join(f"p={p}: {w:.1e}" for p, w in worst.items())
    assert record(1, ok, detail, dt, 1.0)


def test_c2_conjectured_regime():
    t0 = time.perf_counter()
    worst = {p: _worst_residual(p, 1) for p in range(9, 26, 2)}
    dt = time.perf_counter() - t0
    ok = all(w <= 1e-9 for w in worst.values())
    detail = f"p=9..25 max residual {max(worst.values()):.1e}"
    assert record(2, ok, detail, dt, 5.0)


def test_c3_coefficient_values():
    t0 = time.perf_counter()
    delta = 0.0
    for n in range(1, 13):
        t = co.recurse_coeffs(n)
        delta = max(delta, float(np.max(np.abs(np.array(t.v[1:]) - co.conjectured_v(n)))))
    certs = [co.exact_verify(n, j) for n in range(1, 7) for j in range(1, n + 1)]
    dt = time.perf_counter() - t0
    ok = delta <= 1e-9 and all(c.passed and c.residual.is_zero() for c in certs)
    detail = f"n<=12 max |v - v_conj| {delta:.1e}; {sum(c.passed for c in certs)}/{len(certs)} certificates zero"
    assert record(3, ok, detail, dt, 120.0)


def test_c4_route_equivalence():
    t0 = time.perf_counter()
    worst = 0.0
    for n in range(1, 9):
        t = co.recurse_coeffs(n)
        a0, b0 = co.closed_form_j0(n)
        worst = max(worst, abs(a0 - t.alpha[0]), abs(b0 - t.beta[0]))
        special = {1: co.closed_form_j1(n), n: (co.closed_form_jn(n),) * 2}
        if n >= 2:
            special[2] = co.closed_form_j2(n)
        for j in range(1, n + 1):
            a, b = co.general_nested(n, j)
            worst = max(worst, abs(a - t.alpha[j]), abs(b - t.beta[j]))
            if j in special:
                sa, sb = special[j]
                worst = max(worst, abs(sa - t.alpha[j]), abs(sb - t.beta[j]),
                            abs(sa - a), abs(sb - b))
    dt = time.perf_counter() - t0
    assert record(4, worst <= 1e-9, f"n<=8 max route disagreement {worst:.1e}", dt, 60.0)


def test_c5_mn_theorems():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 65):
        inv = ls.inverse_formula(n)
        ok &= ls.matmul(ls.build_Mn(n), inv) == ls.identity(n)
        v = ls.solve_system(n)
        ok &= v == co.conjectured_v(n) == [-x for x in ls.matvec(inv, [1] * n)]
    displayed = ls.build_Mn(10).rows() == M10 and ls.inverse_formula(10).rows() == M10_INV
    dt = time.perf_counter() - t0
    detail = f"n<=64 exact inverse and solution {'ok' if ok else 'MISMATCH'}; " \
             f"displayed M_10 / inverse {'reproduced' if displayed else 'DIFFER'}"
    assert record(5, ok and displayed, detail, dt, 1.0)


def test_c6_n3_application():
    t0 = time.perf_counter()
    t = co.recurse_coeffs(3)
    beta_err = max(abs(b - w) for b, w in zip(t.beta, (-1, 1, -2, 1)))
    grid = np.linspace(0.0, 1.0, 100)
    collapse = max(abs(co.eval_B(t, x) + x ** 3) for x in grid)
    dt = time.perf_counter() - t0
    ok = beta_err <= 1e-12 and collapse <= 1e-12
    detail = f"beta error {beta_err:.1e}; max |eval_B + x^3| {collapse:.1e}"
    assert record(6, ok, detail, dt, 1.0)


def _composition_residual(word, N):
    worst = 0.0
    for t in range(TRIALS):
        u0 = random_su2(sq.trial_rng(SEED + N, t))
        worst = max(worst, abs(abs(sq.apply(word, u0).b) - abs(u0.b) ** N))
    return worst


def test_c7_composition():
    t0 = time.perf_counter()
    w15 = sq.word_for_factors([3, 5], sq.OMEGA)
    powers_ok = w15.diagonal_indices() == [5, 5, 3, -5, -5, 9, 5, 5, 9, -5, -5, 3, 5, 5]
    res = {15: _composition_residual(w15, 15)}
    for p in (3, 5):
        w = sq.word_for_factors([p, p], sq.OMEGA)
        res[p * p] = _composition_residual(w, p * p)
    dt = time.perf_counter() - t0
    ok = powers_ok and all(r <= 1e-12 for r in res.values())
    detail = f"N=15 powers {'match' if powers_ok else 'DIFFER'}; max residual " + \
             ", ".join(f"N={N}: {r:.1e}" for N, r in sorted(res.items()))
    assert record(7, ok, detail, dt, 2.0)


def test_c8_f_correction():
    # Implemented as stated. The corrected iterates settle on a fixed diagonal
    # diag(a, conj(a)) that is not the identity, so this is expected to fail.
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for b0 in np.linspace(0.0, 0.5, TRIALS):
        u0 = su2_with_offdiag(rng, float(b0))
        u3 = sq.iterate(u0, 1, 3, correct=True)[-1]
        worst = max(worst, float(np.max(np.abs(u3.matrix() - np.eye(2)))))
    dt = time.perf_counter() - t0
    assert record(8, worst <= 1e-7, f"max ||U_3 - I||_max {worst:.3g} (need 1e-7)", dt, 1.0)


def test_c9_identities():
    t0 = time.perf_counter()
    a1 = max(lemma_a1(n).abs_error for n in range(1, 10_001))
    a2 = [lemma_a2(n) for n in range(1, 501)]
    a3 = max(lemma_a3(n).abs_error for n in range(1, 1001))
    ruiz = [ruiz_identity(c, d) for c, d in random_ruiz_cases(1000, seed=SEED)]
    dt = time.perf_counter() - t0
    a2_sign = all(r.lhs == r.rhs for r in a2)
    a2_log = max(r.abs_error for r in a2)
    ruiz_ok = all(r.passed and r.lhs == 0 for r in ruiz)
    ok = a1 <= 1e-10 and a2_sign and a2_log <= 1e-8 and a3 <= 1e-8 and ruiz_ok
    detail = (f"A1 {a1:.1e}; A2 sign {'exact' if a2_sign else 'WRONG'} log {a2_log:.1e}; "
              f"A3 {a3:.1e}; ruiz {sum(r.passed for r in ruiz)}/1000 zero")
    assert record(9, ok, detail, dt, 10.0)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                pass

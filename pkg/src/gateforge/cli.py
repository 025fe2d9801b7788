"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import coefficients as co
from . import identities as ids
from . import linear_system as ls
from . import sequences as sq
from .unitary import random_su2

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_EXACT_TERMS = 64       # 2^n - 1 nested terms, so n <= 6 fits


class UsageError(Exception):
    pass


class BudgetError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("GATEFORGE_THREADS")
    if raw is None:
        return min(8, os.cpu_count() or 1)
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"GATEFORGE_THREADS must be an integer, got {raw!r}")
    if n < 1:
        raise UsageError("GATEFORGE_THREADS must be >= 1")
    return n


def _odd_p(p: int) -> int:
    if p < 3 or p % 2 == 0:
        raise UsageError(f"p must be an odd integer >= 3, got {p}")
    return p


def _positive(name: str, x):
    if x is None or x <= 0:
        raise UsageError(f"--{name} must be positive, got {x}")
    return x


# -- commands: each returns (config, rows, passed) ----------------------------

def cmd_build(args):
    p = _odd_p(args.p)
    w = sq.normalize_word(sq.build_word((p - 1) // 2), args.convention)
    config = {"p": p, "convention": args.convention}
    row = {"word": w.token_line(), "powers": w.diagonal_indices(),
           "phase": f"pi*{w.global_phase.numerator}/{w.global_phase.modulus}"}
    return config, [row], True, w


def _verify_trial(word, n, K, seed, trial):
    u0 = random_su2(sq.trial_rng(seed, trial))
    return [r.residual for r in sq.convergence_report(u0, n, K, word=word)]


def cmd_verify(args):
    p = _odd_p(args.p)
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    if args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    tol = args.tol if args.tol is not None else (1e-12 if p <= 7 else 1e-9)
    _positive("tol", tol)
    n = (p - 1) // 2
    word = sq.build_word(n)
    with ThreadPoolExecutor(max_workers=min(_threads(), args.trials)) as ex:
        per_trial = list(ex.map(lambda t: _verify_trial(word, n, args.k, args.seed, t),
                                range(args.trials)))
    rows = []
    for k in range(args.k):
        worst = max(res[k] for res in per_trial)
        rows.append({"k": k, "max_residual": worst, "pass": worst <= tol})
    config = {"p": p, "trials": args.trials, "k": args.k, "seed": args.seed, "tol": tol}
    return config, rows, all(r["pass"] for r in rows), None


def cmd_coeffs(args):
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    tol = _positive("tol", args.tol)
    config = {"n": args.n, "exact": args.exact, "tol": tol}
    if args.exact:
        terms = co.nested_term_count(args.n)
        config["max_terms"] = args.max_terms
        if terms > args.max_terms:
            raise BudgetError(f"exact mode needs {terms} nested terms for n={args.n}, "
                              f"budget is {args.max_terms} (raise --max-terms)")
    rows = []
    for r in co.coefficient_rows(args.n, exact=args.exact, tol=tol):
        rows.append({"n": r.n, "j": r.j, "beta_re": r.beta_re, "beta_im": r.beta_im,
                     "v": r.v, "v_conj": r.v_conj, "delta": r.delta,
                     "exact_pass": r.exact_pass, "pass": r.passed})
    return config, rows, all(r["pass"] for r in rows), None


def cmd_solve_mn(args):
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    n = args.n
    v = ls.solve_system(n)
    inv = ls.inverse_formula(n)
    via_inverse = [-x for x in ls.matvec(inv, [1] * n)]
    m = ls.build_Mn(n)
    checks = {
        "inverse_exact": ls.verify_inverse(n),
        "matches_inverse": v == via_inverse,
        "matches_conjectured": v == co.conjectured_v(n),
        "unimodular": abs(m.det()) == 1,
    }
    row = {"n": n, "v": v, **checks}
    return {"n": n}, [row], all(checks.values()), m if args.matrix else None


def _compose_trial(word, N, seed, trial):
    u0 = random_su2(sq.trial_rng(seed, trial))
    u1 = sq.apply(word, u0)
    return abs(abs(u1.b) - abs(u0.b) ** N)


def cmd_compose(args):
    try:
        factors = [int(x) for x in args.factors.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--factors must be comma-separated integers, got {args.factors!r}")
    if not factors:
        raise UsageError("--factors is empty")
    for f in factors:
        _odd_p(f)
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    tol = _positive("tol", args.tol)
    w = sq.word_for_factors(factors, args.convention)
    with ThreadPoolExecutor(max_workers=min(_threads(), args.trials)) as ex:
        res = list(ex.map(lambda t: _compose_trial(w, w.N, args.seed, t), range(args.trials)))
    worst = max(res)
    config = {"factors": factors, "convention": args.convention, "trials": args.trials,
              "seed": args.seed, "tol": tol}
    row = {"N": w.N, "word": w.token_line(), "powers": w.diagonal_indices(),
           "max_residual": worst, "pass": worst <= tol}
    return config, [row], row["pass"], None


def cmd_identities(args):
    if args.max_n < 1:
        raise UsageError(f"--max-n must be >= 1, got {args.max_n}")
    if args.ruiz_trials < 0:
        raise UsageError("--ruiz-trials must be >= 0")
    reps = ids.identity_sweep(args.max_n, args.max_n, args.max_n, args.ruiz_trials, args.seed)
    rows = [{"identity": r.identity, "n": r.n, "error": r.abs_error, "pass": r.passed}
            for r in reps]
    config = {"max_n": args.max_n, "ruiz_trials": args.ruiz_trials, "seed": args.seed}
    return config, rows, all(r["pass"] for r in rows), None


# -- output -------------------------------------------------------------------

def _cell(x):
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, list):
        return " ".join(str(i) for i in x)
    if x is None:
        return ""
    return str(x)


def render(command, config, rows, passed, fmt, extra=None, header=False) -> str:
    if fmt == "json":
        doc = {"command": command, "config": config, "results": rows, "pass": passed}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = list(rows[0]) if rows else []
        w.writerow(keys)
        for r in rows:
            w.writerow([_cell(r[k]) for k in keys])
        return buf.getvalue()
    # text
    if command == "build":
        return sq.dumps_word(extra) if header else rows[0]["word"] + "\n"
    lines = []
    if command == "compose":
        lines.append(rows[0]["word"])
        lines.append("powers: " + _cell(rows[0]["powers"]))
        lines.append(f"max | |b1| - |b0|^{rows[0]['N']} | = {rows[0]['max_residual']:.3e}")
    elif command == "solve-mn":
        r = rows[0]
        lines.append("v = " + _cell(r["v"]))
        for k in ("inverse_exact", "matches_inverse", "matches_conjectured", "unimodular"):
            lines.append(f"{k}: {_cell(r[k])}")
        if extra is not None:
            lines.append(extra.to_csv().rstrip("\n"))
    else:
        keys = list(rows[0]) if rows else []
        lines.append("\t".join(keys))
        for r in rows:
            lines.append("\t".join(
                f"{r[k]:.3e}" if isinstance(r[k], float) and not isinstance(r[k], bool)
                else _cell(r[k]) for k in keys))
    lines.append("PASS" if passed else "FAIL")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gateforge", description="Diagonalizing gate sequences and their checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return sp

    p = common(sub.add_parser("build", help="print the normalized word for odd p"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--convention", choices=sq.CONVENTIONS, default=sq.STANDARD)
    p.add_argument("--header", action="store_true", help="emit the serialized two-line form")

    p = common(sub.add_parser("verify", help="check |b_{k+1}| = |b_k|^p on random inputs"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None)

    p = common(sub.add_parser("coeffs", help="coefficient table against the binomial values"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="add cyclotomic certificates")
    p.add_argument("--max-terms", type=int, default=DEFAULT_EXACT_TERMS)
    p.add_argument("--tol", type=float, default=co.TAU_COEFF)

    p = common(sub.add_parser("solve-mn", help="solve M_n v = -e and check the inverse"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", action="store_true", help="also dump M_n as CSV (text format)")

    p = common(sub.add_parser("compose", help="compose words for a factorization"))
    p.add_argument("--factors", required=True, help="comma-separated odd factors, e.g. 3,5")
    p.add_argument("--convention", choices=sq.CONVENTIONS, default=sq.STANDARD)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12)

    p = common(sub.add_parser("identities", help="trigonometric and binomial identities"))
    p.add_argument("--max-n", type=int, default=100)
    p.add_argument("--ruiz-trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "coeffs": cmd_coeffs,
    "solve-mn": cmd_solve_mn,
    "compose": cmd_compose,
    "identities": cmd_identities,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config, rows, passed, extra = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"gateforge {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as e:
        print(f"gateforge {args.command}: {e}", file=sys.stderr)
        return EXIT_BUDGET
    sys.stdout.write(render(args.command, config, rows, passed, args.format,
                            extra=extra, header=getattr(args, "header", False)))
    return EXIT_OK if passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

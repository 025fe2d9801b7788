"""Recursive diagonalizing sequences of single-qubit gates at critical angles pi/p."""

from .unitary import (
    DiagonalGate,
    UnitAngle,
    Unitary2,
    dagger,
    diag_gate_matrix,
    make_lambda,
    mul,
    random_su2,
)
from .sequences import (
    GateToken,
    GateWord,
    TokenKind,
    apply,
    build_word,
    compose_words,
    convergence_report,
    dumps_word,
    invert_word,
    iterate,
    loads_word,
    normalize_word,
    word_for_factors,
)
from .cyclotomic import CyclotomicElement, cyclotomic_polynomial
from .coefficients import (
    CoeffTable,
    closed_form_j0,
    closed_form_j1,
    closed_form_j2,
    closed_form_jn,
    conjectured_v,
    eval_A,
    eval_B,
    exact_verify,
    general_nested,
    recurse_coeffs,
)
from .linear_system import (
    NestedTriangularMatrix,
    build_Mn,
    hockey_stick_check,
    inverse_formula,
    solve_system,
)
from .identities import IdentityReport, lemma_a1, lemma_a2, lemma_a3, ruiz_identity

__version__ = "0.1.0"

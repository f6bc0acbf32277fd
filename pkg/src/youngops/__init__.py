"""Exact-arithmetic Young projection operators.

Young diagrams and standard tableaux, the group algebra of S_n over the
rationals, conventional Young operators Y_T and their Hermitian
counterparts P_T, trace and partial-trace calculus in the tensor
dimension N, and an exact matrix realization on (C^N)^(x n) for
independent cross-validation.  Everything is computed in exact rational
arithmetic; every identity either holds on the nose or fails loudly.
"""
from .config import DEFAULT_MAX_N, DEFAULT_SIZE_CAP, MAX_N_ENV, SizeLimitError
from .polynomial import Polynomial
from .permutations import (
    Perm,
    all_permutations,
    compose,
    cycle_count,
    cycle_type,
    cycles,
    identity,
    inverse,
    sign,
    transposition,
)
from .tableaux import YoungDiagram, YoungTableau, enumerate_syt, partitions
from .sn_algebra import (
    AlgebraElement,
    TracePolynomial,
    antisymmetrizer,
    embed_element,
    hermitian_young,
    inequivalence_check,
    primitivity_check,
    symmetrizer,
    symmetrizer_recursion_check,
    young_operator,
)
from .tensor_rep import (
    TensorOperator,
    decode,
    encode,
    matrix_partial_trace,
    orthogonality_report,
    permutation_matrix,
    realize,
)
from .verify import (
    CheckResult,
    SuiteReport,
    VerificationReport,
    run_verification,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_N",
    "DEFAULT_SIZE_CAP",
    "MAX_N_ENV",
    "SizeLimitError",
    "Polynomial",
    "Perm",
    "all_permutations",
    "compose",
    "cycle_count",
    "cycle_type",
    "cycles",
    "identity",
    "inverse",
    "sign",
    "transposition",
    "YoungDiagram",
    "YoungTableau",
    "enumerate_syt",
    "partitions",
    "AlgebraElement",
    "TracePolynomial",
    "antisymmetrizer",
    "embed_element",
    "hermitian_young",
    "inequivalence_check",
    "primitivity_check",
    "symmetrizer",
    "symmetrizer_recursion_check",
    "young_operator",
    "TensorOperator",
    "decode",
    "encode",
    "matrix_partial_trace",
    "orthogonality_report",
    "permutation_matrix",
    "realize",
    "CheckResult",
    "SuiteReport",
    "VerificationReport",
    "run_verification",
    "__version__",
]

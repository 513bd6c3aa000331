"""Numerics for two-base deformed oscillator algebras.

The library evaluates the five-parameter structure function and its
classical special cases, builds truncated Fock-space matrix
representations of the ladder algebra, realizes the same algebra by
difference operators on exponent series, computes the deformed
Hamiltonian spectrum in closed form, and solves and verifies the
coproduct coefficient system.  Every algebraic identity involved is
checked numerically to floating-point tolerance and reported as a
named-residual CheckReport.
"""

from .params import (
    DeformationParams,
    DegenerateDenominatorError,
    NonPositiveBaseError,
    ParameterError,
    ZeroAlphaError,
    dual,
    validate,
)
from .structure import (
    ArikCoon,
    ArikCoonGeneralized,
    BMSymmetricGeneralized,
    BiedenharnMacfarlane,
    ExponentOverflowError,
    GeneralPQ,
    Scheme,
    StandardQM,
    TwoParameter,
    TwoParameterSymmetricGeneralized,
    bracket,
    f_general,
    f_scheme,
    pq_sum_oracle,
)
from .report import CheckEntry, CheckReport
from .fock import (
    FockRep,
    NegativeWeightError,
    NotLowestWeightError,
    apply_word,
    check_relations,
)
from .calculus import ExpSeries, check_realization, d_op, dilation_op, euler_op, mult_op
from .spectrum import (
    SpectrumTable,
    check_pq_inversion,
    hamiltonian_eigs,
    lambda_forms,
    lambda_n,
    spectrum_table,
)
from .hopf import (
    ADegenerateError,
    Beta1Beta2MismatchError,
    GammaUndefinedError,
    HopfCoefficients,
    HopfParams,
    check_antipode,
    check_coassociativity,
    check_constraints,
    check_counit,
    check_homomorphism,
    coproduct_matrix,
    solve_coefficients,
    validate_hopf,
)

__version__ = "0.1.0"

__all__ = [
    "DeformationParams",
    "ParameterError",
    "NonPositiveBaseError",
    "DegenerateDenominatorError",
    "ZeroAlphaError",
    "validate",
    "dual",
    "bracket",
    "f_general",
    "f_scheme",
    "pq_sum_oracle",
    "Scheme",
    "StandardQM",
    "ArikCoon",
    "ArikCoonGeneralized",
    "BiedenharnMacfarlane",
    "BMSymmetricGeneralized",
    "TwoParameter",
    "TwoParameterSymmetricGeneralized",
    "GeneralPQ",
    "ExponentOverflowError",
    "CheckEntry",
    "CheckReport",
    "FockRep",
    "NegativeWeightError",
    "NotLowestWeightError",
    "check_relations",
    "apply_word",
    "ExpSeries",
    "d_op",
    "mult_op",
    "euler_op",
    "dilation_op",
    "check_realization",
    "SpectrumTable",
    "spectrum_table",
    "lambda_n",
    "lambda_forms",
    "hamiltonian_eigs",
    "check_pq_inversion",
    "HopfParams",
    "HopfCoefficients",
    "validate_hopf",
    "solve_coefficients",
    "check_constraints",
    "coproduct_matrix",
    "check_coassociativity",
    "check_counit",
    "check_antipode",
    "check_homomorphism",
    "GammaUndefinedError",
    "ADegenerateError",
    "Beta1Beta2MismatchError",
    "__version__",
]

"""Zeros of generalized Laguerre polynomials and their spacing bounds.

The package computes all zeros of L_n^(alpha) for alpha > -1 via an in-repo
symmetric tridiagonal eigensolver plus Newton certification, checks the
pairwise inverse-square identity satisfied at every zero, evaluates the
closed-form spacing and extreme-zero bounds, and reproduces the
spacing-versus-bound sweep data through a small CLI.
"""

from .bessel import (
    BesselZeroTable,
    GapFactsReport,
    LimitProbe,
    bessel_residual,
    bessel_zero,
    bessel_zero_table,
    gap_facts,
    limit_probe,
)
from .bethe import (
    BetheReport,
    ODECoefficients,
    bethe_lhs,
    bethe_rhs,
    inequality_chain,
    max_rel_residual,
    ode_coefficients,
    remark1_cap,
    verify_identity,
)
from .bounds import (
    BoundSet,
    EdgeParams,
    bound_set,
    delta,
    delta_extremum,
    delta_rational,
    edge_params,
    krasikov_window,
    proof_range_spacing_lower,
    range_spacing_lower,
    telescoped_bracket,
    uniform_spacing_lower,
)
from .errors import (
    CheckFailure,
    ConvergenceError,
    DomainError,
    ParameterError,
    RefinementError,
)
from .laguerre import (
    LaguerreParams,
    ScaledValue,
    evaluate,
    evaluate_derivative,
    laguerre_polynomial,
    ode_residual,
    ode_residual_relative,
)
from .report import (
    SpacingRow,
    SweepConfig,
    bulk_stats,
    figure1,
    parse_sweep_config,
    run_sweep,
    spacing_rows,
)
from .solver import (
    JacobiMatrix,
    ZeroSet,
    build_jacobi,
    eigen_zeros,
    refine,
    zeros,
)

__version__ = "0.1.0"

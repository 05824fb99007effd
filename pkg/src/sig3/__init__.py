"""Signature-three elliptic numerics and transfer-identity verification."""

from .errors import (
    ConfigError,
    DegenerateLattice,
    DomainError,
    NonConvergence,
    PoleError,
    QuadratureFailure,
    Sig3Error,
)
from .hypergeom import (
    DEFAULT_CONFIG,
    EvalConfig,
    HyperTriple,
    agm,
    agm3,
    f2,
    f3,
    f_half,
    f_half_deriv,
    gauss_2f1_series,
)
from .weierstrass import (
    HalfPeriodPair,
    JacobiModulus,
    MidpointTriple,
    WeierstrassInvariants,
    half_periods_from_midpoints,
    jacobi_quarter_periods,
    midpoints_from_invariants,
    sn,
    wp,
    wp_and_derivative,
    wp_via_sn,
)
from .moduli import (
    ModulusSet,
    TransferParams,
    TrimidiationData,
    invariants,
    midpoints,
    modulus_from_kappa,
    p_from_s_c,
    params_from_p,
    trimidiation,
)
from .delta import (
    DeltaContext,
    delta,
    delta_integral,
    delta_phase,
    dn3,
    half_periods_jacobi_route,
    half_periods_sig3,
)
from .transfer import (
    DEFAULT_TOL,
    IdentityCheck,
    VerificationReport,
    VerificationRow,
    grid_report,
    period_route_gap,
    verify_identity56,
    verify_identity57,
    verify_identity58,
    verify_ode_delta,
    verify_trimidiation,
)

__version__ = "0.1.0"

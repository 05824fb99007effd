"""Numerical certification of the three transfer identities.

With alpha(p) = p^3(2+p)/(1+2p) and beta(p) = (27/4) p^2(1+p)^2/(1+p+p^2)^3,
the identities under test are, for 0 < p < 1,

    (56)  (1+p+p^2) F2(alpha)   = sqrt(1+2p) F3(beta)
    (57)  (1+p+p^2) F2(1-alpha) = sqrt(3+6p) F3(1-beta)
    (58)  F2(1-alpha)/F2(alpha) = sqrt3 F3(1-beta)/F3(beta)

with F2 = F(1/2,1/2;1;.) and F3 = F(1/3,2/3;1;.).  The numeric labels are
the row/column identifiers used throughout the CSV report format.

The identities are exact, so every observed relative error is pure
implementation noise; the default tolerance 1e-10 leaves about five
decades of headroom over the compounded AGM error budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .delta import DeltaContext, delta_phase, half_periods_jacobi_route, half_periods_sig3
from .errors import ConfigError
from .hypergeom import DEFAULT_CONFIG, EvalConfig, f2, f3, f_half, f_half_deriv
from .moduli import modulus_from_kappa, params_from_p, trimidiation, invariants
from .weierstrass import WeierstrassInvariants, wp

__all__ = [
    "DEFAULT_TOL",
    "IdentityCheck",
    "VerificationRow",
    "VerificationReport",
    "verify_identity56",
    "verify_identity57",
    "verify_identity58",
    "verify_ode_delta",
    "verify_trimidiation",
    "period_route_gap",
    "grid_points",
    "grid_report",
]

DEFAULT_TOL = 1e-10
RELERR_FLOOR = 1e-300  # division guard; every in-range rhs is >= 1
ENDPOINT_MARGIN = 1e-3  # grids this close to {0, 1} need an explicit opt-in


class IdentityCheck(NamedTuple):
    lhs: float
    rhs: float
    relerr: float
    passed: bool


def _check(lhs: float, rhs: float, tol: float) -> IdentityCheck:
    relerr = abs(lhs - rhs) / max(abs(rhs), RELERR_FLOOR)
    return IdentityCheck(lhs=lhs, rhs=rhs, relerr=relerr, passed=relerr <= tol)


@dataclass(frozen=True)
class VerificationRow:
    """One grid point: both sides, residual and verdict for each identity."""

    p: float
    alpha: float
    beta: float
    lhs56: float
    rhs56: float
    relerr56: float
    lhs57: float
    rhs57: float
    relerr57: float
    lhs58: float
    rhs58: float
    relerr58: float
    pass56: bool
    pass57: bool
    pass58: bool


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[VerificationRow, ...]
    tol: float
    all_pass: bool
    max_relerr: dict[str, float]


def verify_identity56(
    p: float, tol: float = DEFAULT_TOL, config: EvalConfig = DEFAULT_CONFIG
) -> IdentityCheck:
    """(1+p+p^2) F2(alpha) against sqrt(1+2p) F3(beta)."""
    params = params_from_p(p)
    lhs = (1.0 + p + p * p) * f2(params.alpha, config)
    rhs = math.sqrt(1.0 + 2.0 * p) * f3(params.beta, config)
    return _check(lhs, rhs, tol)


def verify_identity57(
    p: float, tol: float = DEFAULT_TOL, config: EvalConfig = DEFAULT_CONFIG
) -> IdentityCheck:
    """(1+p+p^2) F2(1-alpha) against sqrt(3+6p) F3(1-beta)."""
    params = params_from_p(p)
    lhs = (1.0 + p + p * p) * f2(1.0 - params.alpha, config)
    rhs = math.sqrt(3.0 + 6.0 * p) * f3(1.0 - params.beta, config)
    return _check(lhs, rhs, tol)


def verify_identity58(
    p: float, tol: float = DEFAULT_TOL, config: EvalConfig = DEFAULT_CONFIG
) -> IdentityCheck:
    """F2(1-alpha)/F2(alpha) against sqrt3 F3(1-beta)/F3(beta)."""
    params = params_from_p(p)
    lhs = f2(1.0 - params.alpha, config) / f2(params.alpha, config)
    rhs = math.sqrt(3.0) * f3(1.0 - params.beta, config) / f3(params.beta, config)
    return _check(lhs, rhs, tol)


def verify_ode_delta(
    kappa: float,
    u_grid: Sequence[float],
    ctx: DeltaContext | None = None,
    config: EvalConfig = DEFAULT_CONFIG,
) -> float:
    """Maximum scaled residual of 9 (delta')^2 = 4(1-delta)(delta^3+3delta^2-4lambda^2).

    delta' is evaluated analytically through the chain rule
    delta' = -delta * f_half' * kappa^2 sin(2T) / f_half^2 (finite
    differences would dominate the residual budget).  Residuals are scaled
    by 1 + delta^4.
    """
    if ctx is None:
        ctx = DeltaContext(modulus_from_kappa(kappa))
    elif ctx.modulus.kappa != kappa:
        raise ConfigError(f"context modulus {ctx.modulus.kappa} does not match kappa={kappa}")
    k2 = kappa * kappa
    lam2 = ctx.modulus.lam ** 2
    worst = 0.0
    for u in u_grid:
        T = delta_phase(u, ctx, config)
        x = k2 * math.sin(T) ** 2
        f = f_half(x, config)
        d = 1.0 / f
        d_prime = -d * f_half_deriv(x, config) * k2 * math.sin(2.0 * T) / (f * f)
        lhs = 9.0 * d_prime * d_prime
        rhs = 4.0 * (1.0 - d) * (d * d * (d + 3.0) - 4.0 * lam2)
        worst = max(worst, abs(lhs - rhs) / (1.0 + d ** 4))
    return worst


def verify_trimidiation(
    kappa: float, z_samples: Sequence[complex], config: EvalConfig = DEFAULT_CONFIG
) -> float:
    """Maximum relative residual of wp(z; h2, h3) = -3 wp(sqrt3 i z; g2(lam), g3(lam)).

    The left side lives on the lattice with imaginary period divided by
    three, the right on the complementary-modulus lattice turned a quarter
    turn; samples must avoid both lattices (PoleError otherwise).
    """
    mod = modulus_from_kappa(kappa)
    tri = trimidiation(mod)
    inv_h = WeierstrassInvariants(g2=tri.h2, g3=tri.h3)
    inv_lam = invariants(mod.complement)
    rot = math.sqrt(3.0) * 1j
    worst = 0.0
    for z in z_samples:
        lhs = wp(z, inv_h, config)
        rhs = -3.0 * wp(rot * z, inv_lam, config)
        worst = max(worst, abs(lhs - rhs) / abs(lhs))
    return worst


def period_route_gap(p: float, config: EvalConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Relative disagreement of the two half-period routes at parameter p.

    Returns the gaps for omega and for -i omega'.  This is the geometric
    restatement of identities 56 and 57 and should track their residuals
    to within a decade.
    """
    params = params_from_p(p)
    sig = half_periods_sig3(modulus_from_kappa(math.sqrt(params.beta)), config)
    jac = half_periods_jacobi_route(p, config)
    gap_re = abs(sig.omega - jac.omega) / sig.omega
    gap_im = abs(sig.omega_prime.imag - jac.omega_prime.imag) / sig.omega_prime.imag
    return gap_re, gap_im


def grid_points(start: float, stop: float, step: float) -> list[float]:
    """Arithmetic grid, endpoints inclusive within half a step."""
    if step <= 0.0:
        raise ConfigError(f"grid step must be positive, got {step}")
    count = math.floor((stop - start + 0.5 * step) / step) + 1
    if count < 1:
        raise ConfigError(f"empty grid: start={start} stop={stop} step={step}")
    return [start + i * step for i in range(count)]


def grid_report(
    p_start: float,
    p_stop: float,
    p_step: float,
    tol: float = DEFAULT_TOL,
    config: EvalConfig = DEFAULT_CONFIG,
    allow_endpoints: bool = False,
) -> VerificationReport:
    """Run all three identities on the grid and assemble the report.

    Grid values must stay in [ENDPOINT_MARGIN, 1 - ENDPOINT_MARGIN] unless
    ``allow_endpoints`` opts in: F2(1-alpha) turns singular as p -> 1.
    Rows are evaluated independently and assembled in ascending p, so the
    report is identical under any evaluation order.
    """
    points = grid_points(p_start, p_stop, p_step)
    lo = ENDPOINT_MARGIN if not allow_endpoints else 0.0
    hi = 1.0 - ENDPOINT_MARGIN if not allow_endpoints else 1.0
    for p in points:
        if not 0.0 < p < 1.0:
            raise ConfigError(f"grid point {p} outside (0, 1)")
        if not lo <= p <= hi:
            raise ConfigError(
                f"grid point {p} within {ENDPOINT_MARGIN} of an endpoint; "
                f"pass allow_endpoints to evaluate anyway"
            )
    rows = []
    for p in points:
        params = params_from_p(p)
        c56 = verify_identity56(p, tol, config)
        c57 = verify_identity57(p, tol, config)
        c58 = verify_identity58(p, tol, config)
        rows.append(
            VerificationRow(
                p=p,
                alpha=params.alpha,
                beta=params.beta,
                lhs56=c56.lhs, rhs56=c56.rhs, relerr56=c56.relerr,
                lhs57=c57.lhs, rhs57=c57.rhs, relerr57=c57.relerr,
                lhs58=c58.lhs, rhs58=c58.rhs, relerr58=c58.relerr,
                pass56=c56.passed, pass57=c57.passed, pass58=c58.passed,
            )
        )
    rows.sort(key=lambda row: row.p)
    return VerificationReport(
        rows=tuple(rows),
        tol=tol,
        all_pass=all(r.pass56 and r.pass57 and r.pass58 for r in rows),
        max_relerr={
            "56": max(r.relerr56 for r in rows),
            "57": max(r.relerr57 for r in rows),
            "58": max(r.relerr58 for r in rows),
        },
    )

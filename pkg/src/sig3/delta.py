"""The signature-three delta function and the periods of its lattice.

For modulus kappa, let G(T) be the strictly increasing primitive

    G(T) = integral_0^T F(1/3, 2/3; 1/2; kappa^2 sin^2 t) dt.

delta is the derivative of the inverse of G: writing T(u) for the inverse,

    delta(u) = T'(u) = 1 / F(1/3, 2/3; 1/2; kappa^2 sin^2 T(u)),

so delta(0) = 1 and delta is even with least positive period 2 omega,
where omega = G(pi/2) = (pi/2) F(1/3, 2/3; 1; kappa^2).

delta extends to the doubly periodic function

    dn3(z) = 1 - (4/9) kappa^2 / (1/3 + wp(z; g2, g3)),

coperiodic with the Weierstrass function of the configuration.  Both
half-period routes live here: the signature-three route through
F(1/3, 2/3; 1; .) and the classical route through F(1/2, 1/2; 1; .) at the
transfer arguments; their agreement is the analytic content that the
transfer identities certify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergence, PoleError
from .hypergeom import DEFAULT_CONFIG, EvalConfig, f2, f3, f_half
from .moduli import ModulusSet, invariants, params_from_p
from .quadrature import integrate
from .weierstrass import HalfPeriodPair, wp

__all__ = [
    "DeltaContext",
    "KAPPA_MAX",
    "half_periods_sig3",
    "half_periods_jacobi_route",
    "delta_integral",
    "delta_phase",
    "delta",
    "dn3",
]

# The series kernel loses convergence headroom as kappa^2 sin^2 t -> 1;
# keep the modulus at or below this bound.
KAPPA_MAX = 0.99


@dataclass(frozen=True)
class DeltaContext:
    """A modulus with the tolerances of the integral-inversion pipeline."""

    modulus: ModulusSet
    quad_tol: float = 1e-12  # absolute quadrature tolerance
    root_tol: float = 1e-13  # inversion tolerance, measured in T

    def __post_init__(self):
        if self.modulus.kappa > KAPPA_MAX:
            raise DomainError(
                f"modulus {self.modulus.kappa} exceeds the quadrature bound {KAPPA_MAX}"
            )
        if not (self.quad_tol > 0.0 and self.root_tol > 0.0):
            raise DomainError("tolerances must be positive")


def half_periods_sig3(mod: ModulusSet, config: EvalConfig = DEFAULT_CONFIG) -> HalfPeriodPair:
    """Half periods in the signature-three basis:

        omega  = (pi/2) F(1/3, 2/3; 1; kappa^2),
        omega' = i (sqrt3/2) pi F(1/3, 2/3; 1; 1 - kappa^2).

    Equivalently omega' = i sqrt3 omega(lambda), the complementary-modulus
    relation behind the imaginary-period formula.
    """
    half_pi = 0.5 * math.pi
    omega = half_pi * f3(mod.kappa * mod.kappa, config)
    omega_lam = half_pi * f3(mod.lam * mod.lam, config)
    return HalfPeriodPair(omega=omega, omega_prime=1j * (math.sqrt(3.0) * omega_lam))


def half_periods_jacobi_route(p: float, config: EvalConfig = DEFAULT_CONFIG) -> HalfPeriodPair:
    """Half periods through the classical basis at transfer parameter p:

        r omega  = (pi/2) F(1/2, 1/2; 1; alpha),
        r omega' = i (pi/2) F(1/2, 1/2; 1; 1 - alpha),

    with r = sqrt(e1 - e3) and alpha the squared Jacobi modulus.  Must
    agree with ``half_periods_sig3`` at the matching kappa; that equality
    is exactly the pair of transfer identities.
    """
    params = params_from_p(p)
    r = math.sqrt(params.r2)
    half_pi = 0.5 * math.pi
    return HalfPeriodPair(
        omega=half_pi * f2(params.alpha, config) / r,
        omega_prime=1j * (half_pi * f2(1.0 - params.alpha, config) / r),
    )


def delta_integral(T: float, ctx: DeltaContext, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """G(T): the arc integral of the series kernel up to T (odd in T)."""
    if T == 0.0:
        return 0.0
    k2 = ctx.modulus.kappa ** 2

    def kernel(t: float) -> float:
        st = math.sin(t)
        return f_half(k2 * st * st, config)

    return integrate(kernel, 0.0, T, ctx.quad_tol)


def _invert_in_quarter(u: float, ctx: DeltaContext, config: EvalConfig) -> float:
    """Solve G(T) = u for T, for u in [0, omega]; Newton with a bisection
    bracket (G' = kernel >= 1 keeps the problem well conditioned)."""
    if u == 0.0:
        return 0.0
    k2 = ctx.modulus.kappa ** 2
    omega = 0.5 * math.pi * f3(k2, config)
    lo, hi = 0.0, 0.5 * math.pi + 0.01  # the pad absorbs quadrature-vs-AGM seams
    T = min(max(u / omega * (0.5 * math.pi), lo), hi)
    for _ in range(80):
        g = delta_integral(T, ctx, config) - u
        if g > 0.0:
            hi = T
        else:
            lo = T
        st = math.sin(T)
        slope = f_half(k2 * st * st, config)
        T_next = T - g / slope
        if not lo < T_next < hi:
            T_next = 0.5 * (lo + hi)
        if abs(T_next - T) <= ctx.root_tol:
            return T_next
        T = T_next
    raise NonConvergence(f"inversion of the arc integral stalled at u={u}")


def delta_phase(u: float, ctx: DeltaContext, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """T(u), the inverse of G, for any real u.

    u is reduced modulo the period 2 omega and reflected into [0, omega],
    where the inversion runs on a single monotone branch; the ambient
    branch is restored afterwards, making T a global increasing bijection.
    """
    if not math.isfinite(u):
        raise DomainError(f"argument must be finite, got {u}")
    omega = 0.5 * math.pi * f3(ctx.modulus.kappa ** 2, config)
    period = 2.0 * omega
    cells = math.floor(u / period)
    v = u - cells * period
    if v <= omega:
        branch = _invert_in_quarter(v, ctx, config)
    else:
        branch = math.pi - _invert_in_quarter(period - v, ctx, config)
    return cells * math.pi + branch


def delta(u: float, ctx: DeltaContext, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """The delta function: delta(u) = 1/F(1/3,2/3;1/2; kappa^2 sin^2 T(u)).

    delta(0) = 1 exactly; values lie in (0, 1], are even in u, and repeat
    with period 2 omega.
    """
    T = delta_phase(u, ctx, config)
    st = math.sin(T)
    return 1.0 / f_half(ctx.modulus.kappa ** 2 * st * st, config)


def dn3(z: complex, mod: ModulusSet, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The elliptic extension of delta:

        dn3(z) = 1 - (4/9) kappa^2 / (1/3 + wp(z; g2, g3)).

    Agrees with ``delta`` on the real axis.  Poles of the quotient sit
    where wp = -1/3 (for instance two thirds of the way up the imaginary
    half-period); those raise PoleError, as do lattice points via ``wp``.
    """
    p = wp(z, invariants(mod), config)
    denom = 1.0 / 3.0 + p
    if abs(denom) <= 1e-8 * max(1.0, abs(p)):
        raise PoleError(f"dn3 pole: wp({z}) = {p} is too close to -1/3")
    return 1.0 - (4.0 / 9.0) * mod.kappa ** 2 / denom

#!/usr/bin/env python3
"""Tabulate both half-period routes across a modulus grid.

For each kappa the real and imaginary half-periods are computed once in the
signature-three basis (cubic AGM) and once through the classical Jacobi
basis at the matching transfer parameter; the relative gaps are the
geometric form of the transfer identities.
"""

import argparse
import math
import sys

from sig3.delta import half_periods_jacobi_route, half_periods_sig3
from sig3.moduli import modulus_from_kappa, p_from_s_c


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kappas", default="0.1:0.9:0.1", help="kappa grid start:stop:step")
    args = ap.parse_args()
    start, stop, step = (float(part) for part in args.kappas.split(":"))

    print(f"{'kappa':>6} {'p':>10} {'omega':>18} {'-i omega_prime':>18} {'gap_re':>9} {'gap_im':>9}")
    count = math.floor((stop - start + 0.5 * step) / step) + 1
    for i in range(count):
        kappa = start + i * step
        mod = modulus_from_kappa(kappa)
        third = mod.theta / 3.0
        p = p_from_s_c(math.sin(third), math.cos(third))
        sig = half_periods_sig3(mod)
        jac = half_periods_jacobi_route(p)
        gap_re = abs(sig.omega - jac.omega) / sig.omega
        gap_im = abs(sig.omega_prime.imag - jac.omega_prime.imag) / sig.omega_prime.imag
        print(
            f"{kappa:6.3f} {p:10.6f} {sig.omega:18.15f} {sig.omega_prime.imag:18.15f} "
            f"{gap_re:9.2e} {gap_im:9.2e}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())

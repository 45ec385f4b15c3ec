#!/usr/bin/env python3
"""Numeric tower for the self-trapping chain at odd roots of unity.

For each clock size N and chain length the script reports the transfer
commutator norm and the DFT fit of the Laurent coefficients against the
charges Q and Q H.  Dimensions grow as N^sites, so keep sites small.
"""

import argparse

from qbax.catalog import Aq
from qbax.cyclicrep import (
    qdst_charge_fit,
    qosc_rep,
    root_of_unity,
    spectral_points,
    transfer_commutator_num,
)
from qbax.lmatrices import L_qdst


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--clock-sizes", default="3,5,7,9")
    ap.add_argument("--sites", default="2,3")
    ap.add_argument("--seed", type=int, default=17)
    args = ap.parse_args()

    Ns = [int(t) for t in args.clock_sizes.split(",") if t]
    site_list = [int(t) for t in args.sites.split(",") if t]
    x, y = spectral_points(args.seed, 2)

    header = (f"{'N':>3} {'sites':>5} {'dim':>6}  {'[T(x),T(y)]':>12}  "
              f"{'lam^-n vs Q':>12}  {'lam^(2-n) vs QH':>16}")
    print(header)
    for N in Ns:
        rep = qosc_rep(N)
        q_val = root_of_unity(N)
        for n_sites in site_list:
            comm = transfer_commutator_num(L_qdst, Aq, rep, n_sites,
                                           x, y, q_val)
            fit = qdst_charge_fit(Aq, rep, n_sites, q_val)
            print(f"{N:>3} {n_sites:>5} {N**n_sites:>6}  {comm:>12.2e}  "
                  f"{fit['lam^-n vs Q']:>12.2e}  "
                  f"{fit['lam^(2-n) vs QH']:>16.2e}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Map the bridge coefficient over the (t/lambda, rho/lambda) plane.

Writes one CSV per polarization value showing where chi_H vanishes (J1
zeros, phase multiples of pi) and where the plus-sector denominator drives
it through cross-dominant enhancement bands.
"""

import argparse
from pathlib import Path

from crosstide.cli import ScanSpec, write_scan_csv


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alphas", default="0.05,0.2,0.5", help="comma list of polarization values")
    parser.add_argument("--t-steps", type=int, default=121)
    parser.add_argument("--rho-steps", type=int, default=201)
    parser.add_argument("--out-dir", default="chi_maps", help="output directory (default: chi_maps)")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    t_axis = tuple(-1.5 + 3.0 * k / (args.t_steps - 1) for k in range(args.t_steps))
    rho_axis = tuple(10.0 * k / (args.rho_steps - 1) for k in range(args.rho_steps))

    for alpha in (float(a) for a in args.alphas.split(",")):
        spec = ScanSpec(
            alpha=(alpha,),
            t_over_lambda=t_axis,
            rho_over_lambda=rho_axis,
            outputs=("chi", "theta", "kind", "dominance"),
        )
        path = out_dir / f"chi_map_alpha_{alpha:g}.csv"
        rows = write_scan_csv(spec, path)
        print(f"wrote {rows} rows to {path}")


if __name__ == "__main__":
    main()

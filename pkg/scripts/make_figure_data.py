#!/usr/bin/env python3
"""Emit the data tables behind all eight diagnostic figures.

Equivalent to running `crosstide figures --figure N --out-dir DIR` for
N = 1..8. Output is deterministic, so re-runs leave the files untouched
byte for byte.
"""

import argparse

from crosstide import PhysicalConstants, derive_scale
from crosstide.cli import write_figure_data


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figure_data", help="output directory (default: figure_data)")
    args = parser.parse_args()

    scale = derive_scale(PhysicalConstants())
    for figure in range(1, 9):
        for path in write_figure_data(figure, args.out_dir, scale):
            print(f"wrote {path}")


if __name__ == "__main__":
    main()

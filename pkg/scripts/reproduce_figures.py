#!/usr/bin/env python3
"""Emit the data files behind the reference plots into out/.

* nu-versus-h0 sweeps for several bulk coefficients and latent-heat
  exponents, each with the large-h0 limit column appended
  (out/sweep_alpha*_tinf*.csv)
* the temperature field grid for the reference parameter set
  alpha=0.4, h0=0.5, tinf=1, gamma=d=k=1 (out/field_reference.csv)
* an oracle cross-validation report for the same set (out/verify.json)

Usage: python scripts/reproduce_figures.py [outdir]
"""

import sys
from pathlib import Path

from stefan_kummer.cli import main as cli

SWEEP_ALPHAS = (0.0, 0.4, 1.0, 2.0)
SWEEP_TINFS = (0.5, 1.0, 2.0)
H0_VALUES = ",".join(repr(10.0 ** (0.25 * i)) for i in range(-4, 25))


def run(argv):
    code = cli(argv)
    if code != 0:
        sys.exit(f"command failed ({code}): {' '.join(argv)}")


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    outdir.mkdir(parents=True, exist_ok=True)

    for alpha in SWEEP_ALPHAS:
        for tinf in SWEEP_TINFS:
            path = outdir / f"sweep_alpha{alpha}_tinf{tinf}.csv"
            run(["sweep", "--vary", "h0", "--values", H0_VALUES,
                 "--alpha", repr(alpha), "--tinf", repr(tinf),
                 "--include-limit", "--out", str(path)])
            print("wrote", path)

    field_path = outdir / "field_reference.csv"
    run(["field", "--alpha", "0.4", "--h0", "0.5", "--tinf", "1",
         "--nx", "60", "--nt", "60", "--tmax", "1", "--out", str(field_path)])
    print("wrote", field_path)

    verify_path = outdir / "verify.json"
    run(["verify", "--alpha", "0.4", "--h0", "0.5", "--tinf", "1",
         "--nx-oracle", "2000", "--t-end", "1", "--out", str(verify_path)])
    print("wrote", verify_path)


if __name__ == "__main__":
    main()

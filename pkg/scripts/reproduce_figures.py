"""Regenerate the admissible-region tables and figures.

Two exports: the even-curve region pushed all the way to the envelope root,
and a mixed even/odd region at sup = 5 with decay exponent 0.5.  Both go
through the CLI so the files match what a user would get by hand.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from fucik.cli import main as cli_main
from fucik.envelope import envelope_root


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="figures", help="output directory")
    parser.add_argument("--resolution", type=int, default=200)
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    jobs = [
        (
            "region-at-root",
            ["region", "--sup", format(envelope_root(), ".17g"), "--nmax", "6",
             "--resolution", str(args.resolution)],
        ),
        (
            "region-sup5-eps05",
            ["region", "--sup", "5.0", "--nmax", "9", "--epsilon", "0.5",
             "--resolution", str(args.resolution)],
        ),
    ]
    for stem, argv in jobs:
        csv_path = outdir / f"{stem}.csv"
        svg_path = outdir / f"{stem}.svg"
        code = cli_main(argv + ["--csv", str(csv_path), "--svg", str(svg_path)])
        if code != 0:
            return code
        print(f"wrote {csv_path} and {svg_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

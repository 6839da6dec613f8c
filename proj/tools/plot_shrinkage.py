#!/usr/bin/env python3
"""Plot shrinkage-test output written by `nsverify shrink`.

Reads the -hist.csv and -cdf.csv companions of a shrink report and renders
a two-panel figure: the border histogram and the empirical vs theoretical
CDF. Usage:

    plot_shrinkage.py runs/shrink-radfriends-d7-n400-s1 [-o out.png]

The positional argument is the file stem (everything before -hist.csv).
"""

import argparse
import csv
import sys
from pathlib import Path


def read_csv(path: Path) -> dict[str, list[float]]:
    with path.open(newline="") as fh:
        reader = csv.DictReader(fh)
        columns: dict[str, list[float]] = {name: [] for name in reader.fieldnames or []}
        for row in reader:
            for name, value in row.items():
                columns[name].append(float(value))
    return columns


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("stem", help="report file stem, e.g. runs/shrink-rejection-d2-n400-s1")
    parser.add_argument("-o", "--output", help="output image (default: <stem>.png)")
    args = parser.parse_args()

    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib is required for plotting; the CSVs remain usable as-is", file=sys.stderr)
        return 1

    stem = Path(args.stem)
    hist = read_csv(stem.parent / (stem.name + "-hist.csv"))
    cdf = read_csv(stem.parent / (stem.name + "-cdf.csv"))

    fig, (ax_hist, ax_cdf) = plt.subplots(1, 2, figsize=(10, 4))

    if hist["bin_center"]:
        width = (hist["bin_center"][1] - hist["bin_center"][0]) if len(hist["bin_center"]) > 1 else 1.0
        ax_hist.bar(hist["bin_center"], hist["count"], width=width, color="steelblue")
    ax_hist.set_xlabel("border s")
    ax_hist.set_ylabel("count")
    ax_hist.set_title(stem.name)

    ax_cdf.plot(cdf["s"], cdf["empirical_cdf"], label="empirical", lw=1.5)
    ax_cdf.plot(cdf["s"], cdf["theoretical_cdf"], label="expected", lw=1.5, ls="--")
    ax_cdf.set_xlabel("border s")
    ax_cdf.set_ylabel("P(<s)")
    ax_cdf.legend()

    out = args.output or f"{stem}.png"
    fig.tight_layout()
    fig.savefig(out, dpi=120)
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Plot a spreadcx CSV: value columns against the first column, derivatives on a second panel."""

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def read(path):
    meta, rows = {}, []
    with open(path, newline="") as f:
        for line in f:
            if line.startswith("# "):
                key, _, value = line[2:].partition(":")
                meta[key.strip()] = value.strip()
                continue
            rows.append(line)
    table = list(csv.reader(rows))
    header, body = table[0], [[float(x) for x in r] for r in table[1:] if r]
    columns = {name: [r[i] for r in body] for i, name in enumerate(header)}
    return meta, header, columns


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv")
    ap.add_argument("-o", "--out", help="image path (default: CSV path with .png)")
    args = ap.parse_args()

    meta, header, cols = read(args.csv)
    x = header[0]
    values = [h for h in header[1:] if not h.startswith("d")]
    derivs = [h for h in header[1:] if h.startswith("d")]

    panels = 2 if derivs else 1
    fig, axes = plt.subplots(panels, 1, figsize=(6, 3.2 * panels), sharex=True, squeeze=False)
    for name in values:
        axes[0][0].plot(cols[x], cols[name], label=name)
    axes[0][0].set_ylabel("complexity" if values[0].startswith("complexity") else "work")
    axes[0][0].legend(fontsize="small")
    for name in derivs:
        axes[1][0].plot(cols[x], cols[name], label=name)
    if derivs:
        axes[1][0].legend(fontsize="small")
    axes[-1][0].set_xlabel(x)
    fig.suptitle(meta.get("scenario", args.csv), fontsize="medium")
    fig.tight_layout()
    out = args.out or args.csv.rsplit(".", 1)[0] + ".png"
    fig.savefig(out, dpi=150)
    print(f"wrote {out}", file=sys.stderr)


if __name__ == "__main__":
    main()

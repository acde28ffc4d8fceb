#!/usr/bin/env python3
"""Scan operator norms of the zero-order and second-kind families over the
degree and emit plot-ready CSV (degree, closed form, numeric line sup)."""

import argparse

import numpy as np

from betrans.beops import OperatorSpec
from betrans.mellin import numeric_line_sup, operator_norm


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", default="zero_order", choices=["zero_order", "second_kind"])
    ap.add_argument("--variant", default="S0+")
    ap.add_argument("--nu-min", type=float, default=-1.0)
    ap.add_argument("--nu-max", type=float, default=3.0)
    ap.add_argument("--n", type=int, default=121)
    ap.add_argument("--output", default=None)
    args = ap.parse_args()

    rows = ["nu,closed_form,numeric_sup"]
    for nu in np.linspace(args.nu_min, args.nu_max, args.n):
        spec = OperatorSpec(args.family, args.variant, nu=float(nu))
        closed = operator_norm(spec)
        if np.isfinite(closed):
            sup = numeric_line_sup(spec)
            rows.append(f"{nu:.17g},{closed:.17g},{sup:.17g}")
        else:
            rows.append(f"{nu:.17g},inf,inf")
    text = "\n".join(rows) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")


if __name__ == "__main__":
    main()

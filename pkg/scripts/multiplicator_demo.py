#!/usr/bin/env python3
"""Measure an operator's Mellin symbol from its action on a test function and
compare against the closed form along the critical line."""

import argparse

import numpy as np

from betrans.beops import apply, parse_operator
from betrans.mellin import measured_multiplicator, multiplicator
from betrans.numgrid import make_grid
from betrans.testfuncs import suite_on_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--op", default="second:S:nu=0.3")
    ap.add_argument("--fn", default="bump12")
    ap.add_argument("--umax", type=float, default=4.0)
    ap.add_argument("--n", type=int, default=17)
    args = ap.parse_args()

    grid = make_grid(512)
    f = suite_on_grid(args.fn, grid)
    spec = parse_operator(args.op)
    out = apply(spec, f)
    u = np.linspace(-args.umax, args.umax, args.n)
    measured = measured_multiplicator(f, out, 0.5, u)
    expected = multiplicator(spec, 0.5 + 1j * u)
    print("u,measured_re,measured_im,closed_re,closed_im,rel_err")
    for j in range(len(u)):
        rel = abs(measured[j] - expected[j]) / abs(expected[j])
        print(
            f"{u[j]:.6g},{measured[j].real:.10g},{measured[j].imag:.10g},"
            f"{expected[j].real:.10g},{expected[j].imag:.10g},{rel:.3e}"
        )


if __name__ == "__main__":
    main()

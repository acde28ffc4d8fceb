#!/usr/bin/env python3
"""Run the complete verification suite and write the JSON report bundle."""

import argparse
import sys
import time

from betrans.verify import run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--output", default="verify_report.json")
    args = ap.parse_args()
    t0 = time.time()
    reports = run_all(out_path=args.output)
    failed = [r.check_id for r in reports if r.status == "FAIL"]
    print(f"{len(reports)} checks in {time.time() - t0:.0f}s -> {args.output}")
    if failed:
        print("FAILED:", ", ".join(failed))
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run every registered reference check (C1..C13) and summarize.

Usage: python scripts/reproduce_claims.py [--ids C1,C4] [--threads N]

Exit status is the number of mismatched claims.  C13 needs SRCFG_DATA_DIR;
when the data is absent it is reported as unavailable, not as a failure.
"""

import argparse
import json
import os
import subprocess
import sys


def run_claim(claim_id: str, threads: int | None) -> str:
    cmd = [sys.executable, "-m", "srcfg.cli", "reproduce", claim_id]
    if threads:
        cmd += ["--threads", str(threads)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode == 0:
        report = json.loads(proc.stdout)
        seconds = report["timing"]["seconds"]
        return f"match ({seconds:.2f}s)"
    if proc.stdout.strip():
        return "MISMATCH"
    return f"unavailable: {proc.stderr.strip()}"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ids", default=None,
                    help="comma-separated claim ids (default: all)")
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()
    ids = (args.ids.split(",") if args.ids
           else [f"C{i}" for i in range(1, 14)])
    failures = 0
    for claim_id in ids:
        outcome = run_claim(claim_id.strip(), args.threads)
        print(f"{claim_id:>4}  {outcome}")
        if outcome == "MISMATCH":
            failures += 1
    return failures


if __name__ == "__main__":
    sys.exit(main())

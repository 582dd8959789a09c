#!/usr/bin/env python3
"""Print the parameter feasibility table.

Usage: python scripts/feasible_table.py [--vmax N] [--all-rows]
"""

import argparse

from srcfg.feasibility import feasible_table, render_table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vmax", type=int, default=200)
    ap.add_argument("--all-rows", action="store_true",
                    help="include infeasible and equality rows")
    args = ap.parse_args()
    table = feasible_table(args.vmax)
    print(render_table(table, only_feasible=not args.all_rows))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Recompute B(x) = #{n <= x : count_n < count_r} from a bias CSV.

usage: bias_term.py bias.csv X
"""
import csv
import sys


def main():
    path, x = sys.argv[1], int(sys.argv[2])
    with open(path, newline="") as f:
        rows = list(csv.DictReader(f))
    by_n = {int(r["n"]): r for r in rows}
    total = 0
    for n in range(1, x + 1):
        r = by_n.get(n)
        if r is None:
            sys.exit(f"row {n} missing")
        if r["exact"] != "1":
            sys.exit(f"row {n} is not exact")
        if int(r["count_n"]) < int(r["count_r"]):
            total += 1
    print(total)


if __name__ == "__main__":
    main()

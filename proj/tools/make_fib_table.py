#!/usr/bin/env python3
"""Write a lucas-factors v1 table for U(P,Q) by factoring with sympy.

usage: make_fib_table.py N [N ...] [--range A B] [--incomplete N] [-P 1 -Q -1]
"""
import argparse
import sys

from sympy import factorint


def term(P, Q, n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, P * b - Q * a
    return a


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("indices", nargs="*", type=int)
    ap.add_argument("--range", nargs=2, type=int)
    ap.add_argument("--incomplete", type=int, action="append", default=[],
                    help="emit only the factor 2 (if any) and a composite marker")
    ap.add_argument("-P", type=int, default=1)
    ap.add_argument("-Q", type=int, default=-1)
    args = ap.parse_args()

    indices = list(args.indices)
    if args.range:
        indices += range(args.range[0], args.range[1] + 1)
    out = sys.stdout
    out.write(f"lucas-factors v1 P={args.P} Q={args.Q}\n")
    for n in sorted(set(indices) | set(args.incomplete)):
        u = abs(term(args.P, args.Q, n))
        if n in args.incomplete:
            v = 0
            while u % 2 == 0:
                u //= 2
                v += 1
            head = [] if v == 0 else ["2" if v == 1 else f"2^{v}"]
            out.write(f"{n}: {' '.join(head + ['C' + str(u)])}\n")
            continue
        f = factorint(u)
        parts = [str(q) if e == 1 else f"{q}^{e}" for q, e in sorted(f.items())]
        out.write(f"{n}: {' '.join(parts) if parts else '1'}\n")


if __name__ == "__main__":
    main()

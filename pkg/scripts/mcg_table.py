"""Poincare series coefficients of H^*(Gamma^k(RP^2); F2) for a range of k.

    python scripts/mcg_table.py --kmax 8 --qmax 15
"""
import argparse

from confhom import McgQuery, mcg_rp2_series


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--kmax", type=int, default=6)
    parser.add_argument("--qmax", type=int, default=12)
    args = parser.parse_args()

    print("k   " + " ".join(f"{q:>6d}" for q in range(args.qmax + 1)))
    for k in range(2, args.kmax + 1):
        series = mcg_rp2_series(McgQuery(k, args.qmax))
        print(f"{k:<3d} " + " ".join(f"{c:>6d}" for c in series))


if __name__ == "__main__":
    main()

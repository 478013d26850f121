"""Print mod-2 Betti numbers of F_k(M)/Sigma_k for the built-in surfaces.

    python scripts/tabulate_surfaces.py --kmax 8
"""
import argparse

from confhom import BUILTIN_SURFACES, braid_betti, config_betti


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--kmax", type=int, default=6)
    args = parser.parse_args()

    for surface in BUILTIN_SURFACES:
        print(f"{surface.name}  betti={surface.mod2_betti}")
        for k in range(args.kmax + 1):
            print(f"  k={k:<3d}", " ".join(f"{c:>5d}" for c in config_betti(surface, k)))
    print("braid groups B_k")
    for k in range(args.kmax + 1):
        print(f"  k={k:<3d}", " ".join(f"{c:>5d}" for c in braid_betti(k)))


if __name__ == "__main__":
    main()

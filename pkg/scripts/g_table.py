"""Print the g-sequence bound next to the tree bound for a range of path orders."""

import argparse

from blockpath.proofs import extreme_index, f_upper_bound, g_extreme, g_extreme_closed_form_x4, tree_bound


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-min", type=int, default=4)
    ap.add_argument("--m-max", type=int, default=20)
    args = ap.parse_args()
    print(f"{'m':>4} {'i':>3} {'g_extreme':>10} {'closed/4':>9} {'(m-1)^2':>8} {'min':>5}")
    for m in range(args.m_min, args.m_max + 1):
        closed = g_extreme_closed_form_x4(m) / 4
        print(f"{m:>4} {extreme_index(m):>3} {g_extreme(m):>10} {closed:>9.2f} {tree_bound(m):>8} {f_upper_bound(m):>5}")


if __name__ == "__main__":
    main()

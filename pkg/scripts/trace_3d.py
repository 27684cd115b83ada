"""Print the most frequent self-aggregation traces of three-part partitions."""
import argparse

from latagg.chains import most_frequent_trace


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("starts", nargs="*", default=["10,3,1", "3,1,1", "7,5,3"])
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--expand-limit", type=int, default=8)
    args = ap.parse_args()
    for start in args.starts:
        lam = tuple(int(v) for v in start.split(","))
        print(most_frequent_trace(lam, args.steps, args.expand_limit).describe())
        print()


if __name__ == "__main__":
    main()

"""Compare sampled attachment frequencies with the exact distributions."""
import argparse
import time

from latagg.distributions import box_distribution
from latagg.montecarlo import SampleConfig, estimate_distribution, total_variation
from latagg.partitions import partition_distribution

CASES = [((1, 3), (1, 2), False), ((4, 2), (3, 1), False), ((1, 1, 4), (5, 2, 3), False),
         ((3, 1), (2, 1), True), ((3, 1, 1), (3, 1, 1), True)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--trials", type=int, nargs="+", default=[10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6])
    args = ap.parse_args()
    for x, y, part in CASES:
        exact = partition_distribution(x, y) if part else box_distribution(x, y)
        label = f"{'partition' if part else 'box'} {list(x)}+{list(y)}"
        for n in args.trials:
            t0 = time.perf_counter()
            emp = estimate_distribution(x, y, SampleConfig(n, args.seed), part, args.workers)
            tv = total_variation(emp, exact)
            print(f"{label:<32} trials={n:<8} tv={tv:.5f}  ({time.perf_counter() - t0:.2f} s)")


if __name__ == "__main__":
    main()

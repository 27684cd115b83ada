"""Side ratios along the most frequent self-aggregation chain of a rectangle."""
import argparse

from latagg.chains import fibonacci_limit_report

PHI = (1 + 5 ** 0.5) / 2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("start", nargs="?", default="10,6")
    ap.add_argument("--steps", type=int, default=14)
    args = ap.parse_args()
    lam = tuple(int(v) for v in args.start.split(","))
    limit = 0.5 - 1 / (PHI + 1)
    print(f"{'N':>3} {'state':>16} {'ratio':>8} {'|r-phi|':>10} {'P':>8} {'|P-lim|':>8}")
    for r in fibonacci_limit_report(lam, args.steps):
        p = "-" if r.probability is None else r.probability_decimal
        dp = "-" if r.probability is None else f"{abs(float(r.probability) - limit):.4f}"
        state = f"[{r.state[0]},{r.state[1]}]"
        print(f"{r.step:>3} {state:>16} {r.ratio_decimal:>8} "
              f"{abs(float(r.ratio) - PHI):>10.2e} {p:>8} {dp:>8}")
    print(f"phi = {PHI:.6f}, probability limit = {limit:.6f}")


if __name__ == "__main__":
    main()

"""Exhaustive check of the chord lemma: maximum families and their certificates."""
import argparse
import time

from arcsys.chords import all_maximum_families, helly_certificate, max_pairwise_family


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-points", type=int, default=8)
    args = ap.parse_args()
    print(f"{'l':>2} {'max':>4} {'families':>9} {'certified':>9} {'sec':>6}")
    for l in range(1, args.max_points + 1):
        t = time.monotonic()
        best = max_pairwise_family(l)
        fams = list(all_maximum_families(l))
        good = sum(helly_certificate(f).ok for f in fams)
        print(f"{l:>2} {len(best):>4} {len(fams):>9} {good:>9} {time.monotonic() - t:6.2f}")


if __name__ == "__main__":
    main()

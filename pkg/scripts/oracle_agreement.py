"""Compare the strand-order engine with the lift-counting oracle on random arcs."""
import argparse
import random
import time
from collections import Counter

from arcsys.arcs import Itinerary, canonicalize, is_essential
from arcsys.intersection import intersection_number
from arcsys.lifts import intersection_number_lifts
from arcsys.surface import parse_gluing


def random_arc(g, rng, max_len):
    while True:
        word = ""
        for _ in range(rng.randint(0, max_len)):
            c = rng.choice(g.word)
            while word and word[-1] == c.swapcase():
                c = rng.choice(g.word)
            word += c
        a = canonicalize(Itinerary(rng.randrange(g.sides), word, rng.randrange(g.sides)), g)
        if is_essential(a):
            return a


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("surfaces", nargs="*", default=["aAbB", "abAB", "aAbBcC", "abcABC"])
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for word in args.surfaces:
        g = parse_gluing(word)
        rng = random.Random(args.seed)
        t = time.monotonic()
        tally = Counter()
        values = Counter()
        for _ in range(args.pairs):
            a, b = random_arc(g, rng, args.max_len), random_arc(g, rng, args.max_len)
            if a.key() == b.key():
                continue
            lc = intersection_number_lifts(a, b)
            i = intersection_number(a, b)
            values[i] += 1
            if not lc.stabilized:
                tally["unstable"] += 1
            elif lc.count == i:
                tally["agree"] += 1
            else:
                tally["disagree"] += 1
                print(f"  {word}: {a} vs {b}: engine {i}, oracle {lc.count}")
        top = ", ".join(f"{k}:{v}" for k, v in sorted(values.items())[:8])
        print(f"{word:8} {dict(tally)}  values {top}  {time.monotonic() - t:.1f}s")


if __name__ == "__main__":
    main()

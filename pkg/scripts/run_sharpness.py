"""Largest k-systems among short arcs, compared with the closed-form bounds."""
import argparse
import time

from arcsys.surface import parse_gluing
from arcsys.systems import EndpointFilter, SearchConfig, extremal_search

CASES = [
    ("aAbB", 1, None, 6),
    ("abAB", 1, None, 6),
    ("aAbB", 0, None, 6),
    ("abAB", 0, None, 6),
    ("aAbBcC", 0, None, 4),
    ("abcABC", 0, None, 3),
    ("aAbB", 0, EndpointFilter.bipartite({0}, {1, 2}), 6),
    ("aAbB", 1, EndpointFilter.fixed(0, 0), 6),
    ("aAbB", 1, EndpointFilter.fixed(0, 2), 6),
    ("aAbBcC", 1, EndpointFilter.fixed(0, 0), 4),
    ("aAbBcC", 1, EndpointFilter.fixed(0, 3), 4),
    ("aAbBcC", 1, None, 2),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--extra", type=int, default=0, help="add this to every word-length limit")
    ap.add_argument("--time-budget", type=float, default=600)
    args = ap.parse_args()
    print(f"{'surface':8} {'k':>2} {'filter':28} {'L':>2} {'universe':>8} {'clique':>6} {'bound':>5} {'sec':>6}")
    for word, k, flt, L in CASES:
        cfg = SearchConfig(L + args.extra, k, flt or EndpointFilter(), args.time_budget)
        t = time.monotonic()
        res = extremal_search(parse_gluing(word), cfg)
        desc = "none" if flt is None else f"{flt.kind} {sorted(flt.first)}|{sorted(flt.second)}"
        print(f"{word:8} {k:>2} {desc:28} {cfg.max_word_len:>2} {res.universe_size:>8} "
              f"{res.clique_size:>6} {str(res.bound):>5} {time.monotonic() - t:6.2f}")


if __name__ == "__main__":
    main()

"""Pairwise intersecting chords between l points on a circle.

Chords are unordered pairs of labels in ``0..l-1``; a degenerate chord
``(p, p)`` is a single point.  Two chords intersect when they share an
endpoint or their endpoints strictly interleave.  A pairwise intersecting
family has at most ``l`` chords: reading labels on a line turns chords into
intervals with a common point ``i``, and their centres are distinct
half-integers between ``i / 2`` and ``(i + l - 1) / 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

import networkx as nx

from .clique import cliques_of_size, max_clique
from .errors import NotPairwiseIntersecting, TooLarge

EXHAUSTIVE_LIMIT = 8

Chord = tuple  # (i, j) with i <= j


def chord(i: int, j: int) -> Chord:
    return (min(i, j), max(i, j))


@dataclass(frozen=True)
class ChordFamily:
    l: int
    chords: tuple

    def __post_init__(self):
        norm = tuple(sorted(chord(*c) for c in self.chords))
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate chord in family")
        for i, j in norm:
            if not (0 <= i < self.l and 0 <= j < self.l):
                raise ValueError(f"chord {(i, j)} has a label outside 0..{self.l - 1}")
        object.__setattr__(self, "chords", norm)

    def __len__(self) -> int:
        return len(self.chords)

    def rotated(self, shift: int) -> "ChordFamily":
        return ChordFamily(self.l, tuple(chord((i + shift) % self.l, (j + shift) % self.l)
                                         for i, j in self.chords))

    def is_pairwise_intersecting(self) -> bool:
        return all(chords_intersect(a, b, self.l) for a, b in combinations(self.chords, 2))


def chords_intersect(c1: Chord, c2: Chord, l: int) -> bool:
    a, b = chord(*c1)
    c, d = chord(*c2)
    if {a, b} & {c, d}:
        return True
    if a == b or c == d:
        return False
    return (a < c < b) != (a < d < b)


def all_chords(l: int) -> list[Chord]:
    return [(i, j) for i in range(l) for j in range(i, l)]


def intersection_graph(l: int) -> nx.Graph:
    graph = nx.Graph()
    chords = all_chords(l)
    graph.add_nodes_from(chords)
    graph.add_edges_from((a, b) for a, b in combinations(chords, 2) if chords_intersect(a, b, l))
    return graph


def _check_size(l: int) -> None:
    if l < 1:
        raise ValueError("need at least one point")
    if l > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"exhaustive search is limited to l <= {EXHAUSTIVE_LIMIT}")


def max_pairwise_family(l: int) -> ChordFamily:
    """A maximum pairwise intersecting family, found by exact clique search."""
    _check_size(l)
    return ChordFamily(l, tuple(max_clique(intersection_graph(l))))


def all_maximum_families(l: int, size: int | None = None) -> Iterator[ChordFamily]:
    """Every pairwise intersecting family with ``size`` chords (default ``l``)."""
    _check_size(l)
    for nodes in cliques_of_size(intersection_graph(l), l if size is None else size):
        yield ChordFamily(l, tuple(nodes))


@dataclass(frozen=True)
class HellyCertificate:
    point: int
    centres: tuple  # Fractions, one per chord in family order
    centres_distinct: bool
    centres_in_range: bool

    @property
    def ok(self) -> bool:
        return self.centres_distinct and self.centres_in_range

    def to_json(self) -> dict:
        return {
            "point": self.point,
            "centres": [str(c) for c in self.centres],
            "centres_distinct": self.centres_distinct,
            "centres_in_range": self.centres_in_range,
        }


def helly_certificate(fam: ChordFamily) -> HellyCertificate:
    if not fam.chords:
        raise ValueError("empty family")
    for a, b in combinations(fam.chords, 2):
        if not chords_intersect(a, b, fam.l):
            raise NotPairwiseIntersecting(f"chords {a} and {b} are disjoint")
    point = max(i for i, _ in fam.chords)
    if any(point > j for _, j in fam.chords):
        raise AssertionError("intervals of a pairwise intersecting family must share a point")
    centres = tuple(Fraction(i + j, 2) for i, j in fam.chords)
    lo, hi = Fraction(point, 2), Fraction(point + fam.l - 1, 2)
    return HellyCertificate(point, centres, len(set(centres)) == len(centres),
                            all(lo <= c <= hi for c in centres))


def format_family(fam: ChordFamily) -> str:
    return f"chords {fam.l}\n" + "".join(f"{i} {j}\n" for i, j in fam.chords)


def parse_family(text: str) -> ChordFamily:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    head = lines[0].split() if lines else []
    if len(head) != 2 or head[0] != "chords" or not head[1].isdigit():
        raise ValueError("chord file must start with 'chords <l>'")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"bad chord line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return ChordFamily(int(head[1]), tuple(pairs))

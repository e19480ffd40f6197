"""Exact geometric intersection numbers of arcs.

Every arc is cut by the side arcs of the polygon into chords.  Where several
strands cross the same side arc they are ordered by comparing how they diverge
ahead of the crossing against how they diverged behind it; two strands that
must cross somewhere along a shared corridor of tiles swap order in exactly
one tile of it.  With that order fixed, chords in the polygon are in minimal
position and intersections are counted as strictly interleaving chord
endpoints.  Chords meeting at a corner share an ideal endpoint and never count.

Side arcs are never cut; an arc meets a side arc once per crossing of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arcs import CanonicalArc
from .errors import IndistinguishableStrands, SurfaceMismatch
from .surface import SurfaceGluing, inverse


@dataclass(frozen=True)
class Occurrence:
    arc: int
    position: int
    letter: str
    direction: int  # +1 exiting through the lowercase side, -1 through the uppercase one


@dataclass(frozen=True)
class StrandOrder:
    """Per cut arc (lowercase letter), occurrences listed from the start corner
    of the lowercase side towards its end corner."""

    order: dict

    def along(self, letter: str, flip: bool = False) -> list[Occurrence]:
        seq = list(self.order.get(letter, []))
        return seq[::-1] if flip else seq

    def rank(self) -> dict:
        return {occ: r for seq in self.order.values() for r, occ in enumerate(seq)}


def occurrences(arcs: Sequence[CanonicalArc]) -> list[Occurrence]:
    out = []
    for idx, a in enumerate(arcs):
        for j, c in enumerate(a.word):
            out.append(Occurrence(idx, j, c.lower(), 1 if c.islower() else -1))
    return out


def _offset(g: SurfaceGluing, ref_side: int, coord: int) -> int:
    return (coord - (2 * ref_side + 1)) % (2 * g.sides)


def _fraction(digits: list[int], base: int) -> Fraction:
    num = 0
    for d in digits:
        num = num * base + d
    return Fraction(num, base ** len(digits))


def _strand_key(g: SurfaceGluing, start: int, word: str, end: int, j: int) -> tuple:
    """Sort key of the crossing at ``word[j]`` (a lowercase exit) along its side.

    Offsets are read counterclockwise from the side a strand came through;
    ahead of the crossing a smaller offset means closer to the start corner of
    the lowercase side, behind it the opposite.  Both offset sequences become
    base-4m fractions; a crossing pair of strands swaps order exactly once
    along their common corridor because each step multiplies the difference
    ahead by 4m and divides the difference behind by 4m.
    """
    base = 2 * g.sides
    ahead = []
    ent = g.partner[g.side_of(word[j])]
    for c in word[j + 1:]:
        side = g.side_of(c)
        ahead.append(_offset(g, ent, 2 * side + 1))
        ent = g.partner[side]
    ahead.append(_offset(g, ent, 2 * end))
    behind = []
    for t in range(j, -1, -1):
        x = g.side_of(word[t])
        if t > 0:
            coord = 2 * g.partner[g.side_of(word[t - 1])] + 1
        else:
            coord = 2 * start
        behind.append(_offset(g, x, coord))
    fwd = _fraction(ahead, base)
    back = _fraction(behind, base)
    return (fwd - back, fwd, -back)


def _occurrence_key(g: SurfaceGluing, a: CanonicalArc, occ: Occurrence) -> tuple:
    if occ.direction > 0:
        return _strand_key(g, a.start, a.word, a.end, occ.position)
    rev = a.itinerary.reversed()
    return _strand_key(g, rev.start, rev.word, rev.end, len(a.word) - 1 - occ.position)


def _same_surface(arcs: Sequence[CanonicalArc]) -> SurfaceGluing:
    g = arcs[0].surface
    for a in arcs[1:]:
        if a.surface != g:
            raise SurfaceMismatch(f"{g.word!r} vs {a.surface.word!r}")
    return g


def strand_order(g: SurfaceGluing, arcs: Sequence[CanonicalArc],
                 occs: Sequence[Occurrence] | None = None) -> StrandOrder:
    if occs is None:
        occs = occurrences(arcs)
    buckets: dict[str, list] = {}
    for occ in occs:
        buckets.setdefault(occ.letter, []).append((_occurrence_key(g, arcs[occ.arc], occ), occ))
    order = {}
    for letter in sorted(buckets):
        items = sorted(buckets[letter], key=lambda kv: kv[0])
        for (k1, o1), (k2, o2) in zip(items, items[1:]):
            if k1 == k2:
                raise IndistinguishableStrands(
                    f"crossings {o1} and {o2} of side {letter!r} follow identical itineraries")
        order[letter] = [occ for _, occ in items]
    return StrandOrder(order)


def _segments(g: SurfaceGluing, arcs: Sequence[CanonicalArc], so: StrandOrder):
    """Chord endpoints on the polygon boundary as integers, plus owning arc ids."""
    rank = so.rank()
    count = {letter: len(seq) for letter, seq in so.order.items()}
    scale = max(count.values(), default=0) + 2

    def side_point(side: int, occ: Occurrence) -> int:
        r = rank[occ]
        if g.symbol(side).isupper():
            r = count[occ.letter] - 1 - r
        return (2 * side + 1) * scale + r + 1

    lo, hi, owner = [], [], []
    for idx, a in enumerate(arcs):
        if a.is_side:
            continue
        prev = 2 * a.start * scale
        for j, c in enumerate(a.word):
            occ = Occurrence(idx, j, c.lower(), 1 if c.islower() else -1)
            side = g.side_of(c)
            here = side_point(side, occ)
            lo.append(min(prev, here))
            hi.append(max(prev, here))
            owner.append(idx)
            prev = side_point(g.side_of(inverse(c)), occ)
        here = 2 * a.end * scale
        lo.append(min(prev, here))
        hi.append(max(prev, here))
        owner.append(idx)
    return np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64), np.array(owner, dtype=np.int64)


def crossing_table(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    """Boolean matrix of strictly interleaving chord pairs."""
    a, b = lo[:, None], hi[:, None]
    c, d = lo[None, :], hi[None, :]
    return ((a < c) & (c < b) & (b < d)) | ((c < a) & (a < d) & (d < b))


def _matrix(arcs: Sequence[CanonicalArc]) -> np.ndarray:
    n = len(arcs)
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    g = _same_surface(arcs)
    so = strand_order(g, arcs)
    lo, hi, owner = _segments(g, arcs, so)
    out = np.zeros((n, n), dtype=np.int64)
    if len(lo):
        cross = crossing_table(lo, hi).astype(np.int64)
        inc = np.zeros((len(lo), n), dtype=np.int64)
        inc[np.arange(len(lo)), owner] = 1
        out = inc.T @ cross @ inc
        # each unordered self-pair was counted twice
        out[np.diag_indices(n)] //= 2
    for i, a in enumerate(arcs):
        if not a.is_side:
            continue
        letter = a.side_letter
        for j, b in enumerate(arcs):
            if j != i:
                hits = sum(1 for c in b.word if c.lower() == letter)
                out[i, j] = out[j, i] = hits
    return out


@dataclass(frozen=True)
class IntersectionMatrix:
    values: np.ndarray

    def __getitem__(self, ij):
        return int(self.values[ij])

    @property
    def size(self) -> int:
        return self.values.shape[0]

    def max_off_diagonal(self) -> int:
        if self.size < 2:
            return 0
        mask = ~np.eye(self.size, dtype=bool)
        return int(self.values[mask].max())

    def is_symmetric(self) -> bool:
        return bool((self.values == self.values.T).all())

    def tolist(self) -> list[list[int]]:
        return self.values.tolist()


def intersection_number(a: CanonicalArc, b: CanonicalArc) -> int:
    """Minimal number of intersection points between the homotopy classes."""
    if a.surface != b.surface:
        raise SurfaceMismatch(f"{a.surface.word!r} vs {b.surface.word!r}")
    if a.key() == b.key():
        return self_intersection(a)
    return int(_matrix([a, b])[0, 1])


def self_intersection(a: CanonicalArc) -> int:
    return int(_matrix([a])[0, 0])


def is_simple(a: CanonicalArc) -> bool:
    return self_intersection(a) == 0


def intersection_matrix(arcs) -> IntersectionMatrix:
    """Pairwise intersection numbers; accepts an ArcSystem or a list of arcs."""
    arcs = list(getattr(arcs, "arcs", arcs))
    return IntersectionMatrix(_matrix(arcs))

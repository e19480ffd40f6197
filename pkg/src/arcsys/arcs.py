"""Homotopy classes of arcs as canonical crossing itineraries.

An itinerary ``(start, word, end)`` describes a path through copies of the
polygon: it leaves the start corner, exits through the sides named by
``word`` (one symbol per crossing; the symbol is the label of the side being
exited) and arrives at ``end`` in the last tile.

Normal form
-----------
In the universal cover the tiles form a tree and the tiles around one ideal
vertex form a connected fan.  A reduced word whose first crossing does not
touch the start vertex and whose last crossing does not touch the end vertex
is exactly the tree path crossed by the geodesic between the two ideal
endpoints, so such an itinerary is determined by the pair of endpoints up to
deck transformations.  Picking the smaller of the itinerary and its reversal
then gives one representative per unoriented homotopy class.  Chords running
along a side of the polygon are the cut arcs themselves and get their own
spelling (``side:<letter>``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import MalformedItinerary, SurfaceMismatch
from .surface import SurfaceGluing, inverse


@dataclass(frozen=True)
class Itinerary:
    start: int
    word: str
    end: int

    def reversed(self) -> "Itinerary":
        return Itinerary(self.end, "".join(inverse(c) for c in reversed(self.word)), self.start)

    def key(self) -> tuple:
        return (self.start, self.word, self.end)

    def __str__(self) -> str:
        return f"c{self.start}:{self.word}:c{self.end}"


@dataclass(frozen=True, order=False)
class CanonicalArc:
    surface: SurfaceGluing
    start: int
    word: str
    end: int

    @property
    def itinerary(self) -> Itinerary:
        return Itinerary(self.start, self.word, self.end)

    @property
    def is_side(self) -> bool:
        n = self.surface.sides
        return not self.word and self.end == (self.start + 1) % n

    @property
    def side_letter(self) -> str | None:
        return self.surface.symbol(self.start) if self.is_side else None

    @property
    def endpoint_cusps(self) -> tuple[int, int]:
        g = self.surface
        return (g.cusp_of[self.start], g.cusp_of[self.end])

    def key(self) -> tuple:
        return (self.start, self.word, self.end)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_arc(self)

    def __repr__(self) -> str:
        return f"CanonicalArc({self.surface.word!r}, {format_arc(self)!r})"


def _check(raw: Itinerary, g: SurfaceGluing) -> None:
    n = g.sides
    if not (0 <= raw.start < n and 0 <= raw.end < n):
        raise MalformedItinerary(f"corner out of range in {raw} for {g.word!r}")
    for c in raw.word:
        if c not in g.side_index:
            raise MalformedItinerary(f"symbol {c!r} is not a side of {g.word!r}")


def free_reduce(word: str) -> str:
    out: list[str] = []
    for c in word:
        if out and out[-1] == inverse(c):
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def _end_reduce(start: int, word: str, end: int, g: SurfaceGluing) -> tuple[int, str, int]:
    # pop crossings whose side touches the ideal endpoint; each pop shortens the word
    changed = True
    while changed and word:
        changed = False
        side = g.side_of(word[0])
        if g.incident(start, side):
            start = g.transport(start, side)
            word = word[1:]
            changed = True
            if not word:
                break
        entered = g.side_of(inverse(word[-1]))
        if g.incident(end, entered):
            end = g.transport(end, entered)
            word = word[:-1]
            changed = True
    return start, word, end


def canonicalize(raw: Itinerary, g: SurfaceGluing) -> CanonicalArc:
    """Normal form of an itinerary: free reduction, end reduction, side-arc and
    orientation normalisation."""
    _check(raw, g)
    start, word, end = raw.start, free_reduce(raw.word), raw.end
    start, word, end = _end_reduce(start, word, end, g)
    n = g.sides
    if not word and start == end:
        # inessential: one representative per cusp
        corner = min(g.cusp_cycles[g.cusp_of[start]])
        return CanonicalArc(g, corner, "", corner)
    if not word and (end - start) % n in (1, n - 1):
        side = start if (end - start) % n == 1 else end
        if g.symbol(side).isupper():
            side = g.partner[side]
        return CanonicalArc(g, side, "", (side + 1) % n)
    fwd = Itinerary(start, word, end)
    rev = fwd.reversed()
    best = min(fwd, rev, key=Itinerary.key)
    return CanonicalArc(g, best.start, best.word, best.end)


def side_arc(g: SurfaceGluing, letter: str) -> CanonicalArc:
    side = g.side_of(letter.lower())
    return CanonicalArc(g, side, "", (side + 1) % g.sides)


def equals(a: CanonicalArc, b: CanonicalArc) -> bool:
    if a.surface != b.surface:
        raise SurfaceMismatch(f"{a.surface.word!r} vs {b.surface.word!r}")
    return a.key() == b.key()


def is_essential(a: CanonicalArc) -> bool:
    # A non-empty end-reduced word always separates its two lifted endpoints;
    # an empty word is inessential only when it returns to its own corner.
    return bool(a.word) or a.start != a.end


def endpoints(a: CanonicalArc) -> tuple[int, int]:
    """Cusp ids of the two ends, as a sorted pair."""
    return tuple(sorted(a.endpoint_cusps))


def reverse(a: CanonicalArc) -> Itinerary:
    return a.itinerary.reversed()


def tile_path(start: int, word: str, end: int, g: SurfaceGluing):
    """Yield ``(entry, exit)`` for each tile visited.

    Entries and exits are ``("corner", i)`` or ``("side", i)``.
    """
    entry = ("corner", start)
    for c in word:
        side = g.side_of(c)
        yield entry, ("side", side)
        entry = ("side", g.partner[side])
    yield entry, ("corner", end)


_ARC_RE = re.compile(r"^c(\d+):([A-Za-z]*):c(\d+)$")


def parse_arc(text: str, g: SurfaceGluing) -> CanonicalArc:
    """Parse ``c<start>:<word>:c<end>`` or ``side:<letter>`` and canonicalise."""
    text = text.strip()
    if text.startswith("side:"):
        letter = text[5:]
        if len(letter) != 1 or letter.lower() not in g.side_index:
            raise MalformedItinerary(f"unknown side in {text!r}")
        return side_arc(g, letter)
    m = _ARC_RE.match(text)
    if not m:
        raise MalformedItinerary(f"cannot parse arc {text!r}")
    return canonicalize(Itinerary(int(m.group(1)), m.group(2), int(m.group(3))), g)


def format_arc(a: CanonicalArc) -> str:
    if a.is_side:
        return f"side:{a.side_letter}"
    return f"c{a.start}:{a.word}:c{a.end}"

"""Punctured surfaces presented as ideal polygons with paired sides.

A gluing word such as ``"aAbB"`` lists the 2m sides of the polygon
counterclockwise.  Side ``i`` runs from corner ``i`` to corner ``i + 1``; a
lowercase letter and its uppercase partner are glued orientation-reversingly,
so corner ``i`` of one side meets corner ``j + 1`` of its partner ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from string import ascii_lowercase

from .errors import EulerTooLarge, NonOrientable, UnpairedLetter

MAX_PAIRS = 26


def inverse(symbol: str) -> str:
    """The crossing symbol that undoes ``symbol``."""
    return symbol.swapcase()


@dataclass(frozen=True)
class SurfaceGluing:
    word: str
    m: int
    partner: tuple[int, ...]
    side_index: dict = field(compare=False, repr=False)
    cusp_cycles: tuple[tuple[int, ...], ...]
    cusp_of: tuple[int, ...] = field(repr=False)

    @property
    def sides(self) -> int:
        return 2 * self.m

    @property
    def euler(self) -> int:
        return 1 - self.m

    @property
    def abs_chi(self) -> int:
        return self.m - 1

    @property
    def punctures(self) -> int:
        return len(self.cusp_cycles)

    @property
    def genus(self) -> int:
        return (2 - self.punctures - self.euler) // 2

    @property
    def corners(self) -> range:
        return range(self.sides)

    def symbol(self, side: int) -> str:
        return self.word[side]

    def side_of(self, symbol: str) -> int:
        return self.side_index[symbol]

    def letters(self) -> list[str]:
        return sorted({c.lower() for c in self.word})

    def transport(self, corner: int, side: int) -> int:
        """Corner of the neighbouring tile across ``side`` that is glued to ``corner``.

        ``corner`` must be an endpoint of ``side``.
        """
        j = self.partner[side]
        n = self.sides
        if corner == side:
            return (j + 1) % n
        if corner == (side + 1) % n:
            return j
        raise ValueError(f"corner {corner} is not an endpoint of side {side}")

    def incident(self, corner: int, side: int) -> bool:
        return corner == side or corner == (side + 1) % self.sides

    def cusp_of_corner(self, corner: int) -> int:
        if not 0 <= corner < self.sides:
            raise IndexError(f"corner {corner} out of range for {self.word!r}")
        return self.cusp_of[corner]

    def summary(self) -> dict:
        return {
            "word": self.word,
            "sides": self.sides,
            "euler": self.euler,
            "genus": self.genus,
            "punctures": self.punctures,
            "cusp_cycles": [list(c) for c in self.cusp_cycles],
        }

    def __str__(self) -> str:
        return self.word


def _corner_walk(partner: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # corner v is the start of side v; across the gluing it becomes corner partner[v] + 1
    n = len(partner)
    seen = [False] * n
    cycles = []
    for v in range(n):
        if seen[v]:
            continue
        cyc = []
        w = v
        while not seen[w]:
            seen[w] = True
            cyc.append(w)
            w = (partner[w] + 1) % n
        cycles.append(tuple(cyc))
    return tuple(cycles)


def parse_gluing(text: str) -> SurfaceGluing:
    """Parse a gluing word and derive its cusp structure.

    >>> g = parse_gluing("abAB")
    >>> (g.euler, g.genus, g.punctures)
    (-1, 1, 1)
    """
    word = text.strip()
    if not word or not word.isascii() or not word.isalpha():
        raise UnpairedLetter(f"gluing word must be a non-empty string of letters, got {text!r}")
    counts: dict[str, int] = {}
    for c in word:
        counts[c.lower()] = counts.get(c.lower(), 0) + 1
    for letter, n in sorted(counts.items()):
        if n != 2:
            raise UnpairedLetter(f"letter {letter!r} appears {n} times in {word!r}")
    for letter in counts:
        if word.count(letter) != 1:
            raise NonOrientable(f"letter {letter!r} appears twice with the same direction in {word!r}")
    m = len(counts)
    if m > MAX_PAIRS:
        raise UnpairedLetter(f"at most {MAX_PAIRS} side pairs are supported")
    if 1 - m >= 0:
        raise EulerTooLarge(f"{word!r} has Euler characteristic {1 - m}; need chi < 0")

    side_index = {c: i for i, c in enumerate(word)}
    partner = tuple(side_index[c.swapcase()] for c in word)
    cycles = _corner_walk(partner)
    cusp_of = [0] * len(word)
    for cid, cyc in enumerate(cycles):
        for v in cyc:
            cusp_of[v] = cid
    return SurfaceGluing(
        word=word,
        m=m,
        partner=partner,
        side_index=side_index,
        cusp_cycles=cycles,
        cusp_of=tuple(cusp_of),
    )


def standard_planar_gluing(abs_chi: int) -> SurfaceGluing:
    """The sphere word a A b B ... with ``abs_chi + 2`` punctures.

    Corner 0 carries the puncture where all cut arcs meet; each odd corner is a
    puncture of its own.
    """
    if abs_chi < 1:
        raise ValueError("abs_chi must be at least 1")
    m = abs_chi + 1
    if m > MAX_PAIRS:
        raise ValueError(f"abs_chi must be at most {MAX_PAIRS - 1}")
    return parse_gluing("".join(c + c.upper() for c in ascii_lowercase[:m]))


def cusp_of_corner(g: SurfaceGluing, corner: int) -> int:
    return g.cusp_of_corner(corner)

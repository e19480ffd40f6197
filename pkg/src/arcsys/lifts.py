"""Intersection numbers by counting linked lifts in the tree of tiles.

Tiles of the universal cover are addressed by reduced words in the side
symbols (the word of sides exited on the way from the base tile).  One lift
of ``a`` is fixed in the base tile; translates of the lift of ``b`` are
enumerated by anchoring any tile of ``b``'s extended path on a tile of
``a``'s extended path.  Paths are extended by fans of tiles around the two
ideal endpoints, ``radius`` tiles in each rotational direction.  Each
candidate is tested for linking by walking the boundary of the union of the
tiles involved, which lists the ideal vertices in circular order.

This is a cross-check for :mod:`arcsys.intersection`, not a replacement: it
reports whether the count was stable when the radius grew.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arcs import CanonicalArc
from .errors import NotStabilized, SurfaceMismatch
from .surface import SurfaceGluing, inverse

Tile = tuple


def step(tile: Tile, symbol: str) -> Tile:
    if tile and tile[-1] == inverse(symbol):
        return tile[:-1]
    return tile + (symbol,)


def mul(u: Tile, v: Tile) -> Tile:
    for c in v:
        u = step(u, c)
    return u


def inv(u: Tile) -> Tile:
    return tuple(inverse(c) for c in reversed(u))


@dataclass(frozen=True)
class Lift:
    tiles: tuple
    start: tuple  # (tile, corner)
    end: tuple


def lift(a: CanonicalArc, base: Tile = ()) -> Lift:
    g = a.surface
    if a.is_side:
        return Lift((base, step(base, g.symbol(a.start)), ), (base, a.start), (base, a.end))
    tiles = [base]
    for c in a.word:
        tiles.append(step(tiles[-1], c))
    return Lift(tuple(tiles), (base, a.start), (tiles[-1], a.end))


def translate(lf: Lift, u: Tile) -> Lift:
    return Lift(tuple(mul(u, t) for t in lf.tiles),
                (mul(u, lf.start[0]), lf.start[1]),
                (mul(u, lf.end[0]), lf.end[1]))


def fan(g: SurfaceGluing, tile: Tile, corner: int, radius: int) -> list[Tile]:
    """Tiles around an ideal vertex, ``radius`` steps each way."""
    n = g.sides
    out = [tile]
    for forward in (True, False):
        t, v = tile, corner
        for _ in range(radius):
            side = v if forward else (v - 1) % n
            t = step(t, g.symbol(side))
            v = g.transport(v, side)
            out.append(t)
    return out


def extended(g: SurfaceGluing, lf: Lift, radius: int) -> set:
    tiles = set(lf.tiles)
    tiles.update(fan(g, *lf.start, radius))
    tiles.update(fan(g, *lf.end, radius))
    return tiles


def boundary_order(g: SurfaceGluing, region: set) -> dict:
    """Map ``(tile, corner)`` -> position of that ideal vertex along the
    counterclockwise boundary of the union of ``region``."""
    n = g.sides
    first = None
    for t in sorted(region, key=lambda w: (len(w), w)):
        for i in range(n):
            if step(t, g.symbol(i)) not in region:
                first = (t, i)
                break
        if first:
            break
    pos: dict = {}
    t, i = first
    index = 0
    while True:
        # arrive at the end corner of boundary side (t, i); rotate through the region
        k = (i + 1) % n
        reps = [(t, k)]
        while True:
            nxt = step(t, g.symbol(k))
            if nxt not in region:
                break
            k = (g.partner[k] + 1) % n
            t = nxt
            reps.append((t, k))
        index += 1
        for r in reps:
            pos[r] = index
        i = k
        if (t, i) == first:
            break
    return pos


def linked(g: SurfaceGluing, la: Lift, lb: Lift, connector: Tile) -> bool:
    region = set(la.tiles) | set(lb.tiles)
    region.update(connector[:j] for j in range(len(connector) + 1))
    pos = boundary_order(g, region)
    a1, a2 = pos[la.start], pos[la.end]
    b1, b2 = pos[lb.start], pos[lb.end]
    if len({a1, a2, b1, b2}) < 4:
        return False
    lo, hi = min(a1, a2), max(a1, a2)
    return (lo < b1 < hi) != (lo < b2 < hi)


@dataclass(frozen=True)
class LiftCount:
    count: int
    stabilized: bool
    radius: int


def default_radius(a: CanonicalArc, b: CanonicalArc) -> int:
    return max(len(c) for c in a.surface.cusp_cycles)


def intersection_number_lifts(a: CanonicalArc, b: CanonicalArc, radius: int | None = None,
                              strict: bool = False) -> LiftCount:
    if a.surface != b.surface:
        raise SurfaceMismatch(f"{a.surface.word!r} vs {b.surface.word!r}")
    g = a.surface
    if radius is None:
        radius = default_radius(a, b)
    la = lift(a)
    lb0 = lift(b)
    verdict: dict = {}
    counts = []
    for r in (radius, radius + 1, radius + 2):
        ext_a = extended(g, la, r)
        ext_b = extended(g, lb0, r)
        total = 0
        for x in ext_a:
            for y in ext_b:
                u = mul(x, inv(y))
                if u not in verdict:
                    lb = translate(lb0, u)
                    same = {la.start, la.end} == {lb.start, lb.end} and set(la.tiles) == set(lb.tiles)
                    verdict[u] = False if same else linked(g, la, lb, u)
        # count the candidates reachable at this radius
        seen = {mul(x, inv(y)) for x in ext_a for y in ext_b}
        total = sum(1 for u in seen if verdict[u])
        counts.append(total)
    stable = counts[0] == counts[1] == counts[2]
    if strict and not stable:
        raise NotStabilized(f"lift count {counts} did not stabilise from radius {radius}")
    return LiftCount(counts[-1], stable, radius)

"""Extremal arc systems.

The planar constructions are drawn in the plane with the distinguished
puncture ``p`` at infinity.  Every other puncture sits at an exact polar
position and is joined to infinity by the radial ray behind it; these rays are
the cut arcs of the standard sphere word ``aAbB...``.  Ordering the rays
counterclockwise by angle, ray ``i`` carries the letter pair ``i``, its
puncture is corner ``2i + 1`` and the sector at infinity just before it is
corner ``2i``.  Paths are made of radial moves (which never meet a ray) and
circular moves (which cross every ray of smaller radius whose angle they pass;
lowercase when turning counterclockwise).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from string import ascii_lowercase

from .arcs import CanonicalArc, Itinerary, canonicalize, side_arc
from .errors import DegenerateSystem, DivisibilityError
from .surface import SurfaceGluing, parse_gluing, standard_planar_gluing
from .systems import ArcSystem, make_system

FULL = Fraction(360)


@dataclass(frozen=True)
class Arc:
    radius: Fraction
    start: Fraction
    stop: Fraction


class PlanarPicture:
    """Punctures at polar ``(radius, angle)`` (degrees, angle in (0, 360])."""

    def __init__(self, punctures: list[tuple]):
        pts = [(Fraction(r), Fraction(a)) for r, a in punctures]
        angles = [a for _, a in pts]
        if len(set(angles)) != len(angles) or not all(0 < a <= FULL for a in angles):
            raise ValueError("puncture angles must be distinct and lie in (0, 360]")
        self.points = pts
        self.order = sorted(range(len(pts)), key=lambda i: pts[i][1])
        self.rank = {p: k for k, p in enumerate(self.order)}
        self.gluing = standard_planar_gluing(len(pts) - 1)

    def corner_of(self, puncture: int) -> int:
        return 2 * self.rank[puncture] + 1

    def corner_at_infinity(self, angle) -> int:
        angle = Fraction(angle) % FULL
        if any(a == angle for _, a in self.points):
            raise ValueError(f"direction {angle} runs along a cut ray")
        below = sum(1 for _, a in self.points if a < angle)
        return (2 * below) % self.gluing.sides

    def crossings(self, move: Arc) -> str:
        lo, hi = sorted((move.start, move.stop))
        hits = []
        for idx, (r, a) in enumerate(self.points):
            if r >= move.radius:
                continue
            k = (lo - a) // FULL
            theta = a + k * FULL
            while theta <= hi:
                if theta == lo or theta == hi:
                    raise ValueError("circular move ends on a cut ray")
                if lo < theta:
                    hits.append((theta, idx))
                theta += FULL
        hits.sort(reverse=move.stop < move.start)
        letters = [ascii_lowercase[self.rank[i]] for _, i in hits]
        if move.stop < move.start:
            letters = [c.upper() for c in letters]
        return "".join(letters)

    def trace(self, start, moves: list[Arc], end) -> CanonicalArc:
        """``start``/``end`` are ``("puncture", index)`` or ``("infinity", angle)``."""
        word = "".join(self.crossings(m) for m in moves)
        return canonicalize(Itinerary(self._corner(start), word, self._corner(end)), self.gluing)

    def _corner(self, where) -> int:
        kind, value = where
        return self.corner_of(value) if kind == "puncture" else self.corner_at_infinity(value)


def _distinct(arcs, expected: int, what: str) -> list[CanonicalArc]:
    out, seen = [], set()
    for a in arcs:
        if a.key() not in seen:
            seen.add(a.key())
            out.append(a)
    if len(out) != expected:
        raise DegenerateSystem(f"{what}: expected {expected} distinct arcs, got {len(out)}")
    return out


def ideal_polygon_system(g: SurfaceGluing) -> ArcSystem:
    """All diagonals of the polygon together with the side arcs."""
    n = g.sides
    diagonals = [canonicalize(Itinerary(i, "", j), g)
                 for i in range(n) for j in range(i + 2, n) if (i, j) != (0, n - 1)]
    sides = [side_arc(g, c) for c in g.letters()]
    x = g.abs_chi
    expected = (2 * x + 2) * (2 * x - 1) // 2 + (x + 1)
    return make_system(g, _distinct(diagonals + sides, expected, "polygon system"))


def triangulation_system(g: SurfaceGluing) -> ArcSystem:
    """Side arcs plus the fan of diagonals from corner 0."""
    n = g.sides
    fan = [canonicalize(Itinerary(0, "", j), g) for j in range(2, n - 1)]
    sides = [side_arc(g, c) for c in g.letters()]
    return make_system(g, _distinct(sides + fan, 3 * g.abs_chi, "triangulation"))


def concentric_system(abs_chi: int, k: int) -> ArcSystem:
    """k-system of arcs from p' (centre) to p (infinity) crossing each of
    k + 1 punctured concentric circles once and avoiding a fixed arc alpha.

    alpha is the ray at angle 360 from the centre; circle ``r`` (radius r)
    carries ``abs_chi / (k + 1)`` punctures.
    """
    if abs_chi < 1 or k < 0:
        raise ValueError("need abs_chi >= 1 and k >= 0")
    if abs_chi % (k + 1):
        raise DivisibilityError(f"k + 1 = {k + 1} does not divide |chi| = {abs_chi}")
    n = abs_chi // (k + 1)
    circles = range(1, k + 2)
    # the odd denominator keeps every gap midpoint off every puncture angle
    angle = {(r, t): FULL * (t + Fraction(r, 2 * k + 5)) / (n + 1) for r in circles for t in range(1, n + 1)}
    pts = [(0, FULL)] + [(r, angle[r, t]) for r in circles for t in range(1, n + 1)]
    pic = PlanarPicture(pts)

    def gap(r, s):
        left = Fraction(0) if s == 0 else angle[r, s]
        right = FULL if s == n else angle[r, s + 1]
        return (left + right) / 2

    arcs = []
    for choice in product(range(n + 1), repeat=k + 1):
        phis = [gap(r, s) for r, s in zip(circles, choice)]
        moves = [Arc(Fraction(2 * r + 1, 2), phis[r - 1], phis[r]) for r in range(1, k + 1)]
        arcs.append(pic.trace(("puncture", 0), moves, ("infinity", phis[-1])))
    expected = (n + 1) ** (k + 1) - 1
    return make_system(pic.gluing, _distinct(arcs, expected, "concentric system"))


def same_puncture_system(abs_chi: int) -> ArcSystem:
    """Arcs from p to p made of two rays from the centre of a disc whose
    |chi| + 1 inner punctures lie on a circle."""
    if abs_chi < 1:
        raise ValueError("abs_chi must be at least 1")
    m = abs_chi + 1
    pic = PlanarPicture([(1, FULL * (t + 1) / m) for t in range(m)])
    # segment s of the circle lies between puncture s - 1 and puncture s
    mids = [FULL * (2 * s + 1) / (2 * m) for s in range(m)]
    arcs = []
    for i, j in combinations(range(m), 2):
        moves = [Arc(Fraction(1, 2), mids[i], mids[j])]
        arcs.append(pic.trace(("infinity", mids[i]), moves, ("infinity", mids[j])))
    return make_system(pic.gluing, _distinct(arcs, m * (m - 1) // 2, "same-puncture system"))


def two_puncture_system(abs_chi: int) -> ArcSystem:
    """Arcs from p (infinity) to p' (centre) weaving around an arc alpha.

    The |chi| punctures on alpha sit at radius t and angle just above 180;
    alpha's segment s (counted from p) lies between radii |chi| - s and
    |chi| - s + 1.  Passing on the left of alpha means angle 179, on the
    right angle 181.
    """
    if abs_chi < 1:
        raise ValueError("abs_chi must be at least 1")
    n = abs_chi
    delta = Fraction(1, n + 1)
    pts = [(0, FULL)] + [(t, 180 + t * delta) for t in range(1, n + 1)]
    pic = PlanarPicture(pts)
    left, right = Fraction(179), Fraction(181)
    arcs = []
    for i, j in combinations(range(n + 1), 2):
        ri = Fraction(2 * (n - i) + 1, 2)
        rj = Fraction(2 * (n - j) + 1, 2)
        moves = [Arc(ri, left, right), Arc(rj, right, left)]
        arcs.append(pic.trace(("infinity", left), moves, ("puncture", 0)))
    return make_system(pic.gluing, _distinct(arcs, (n + 1) * n // 2, "two-puncture system"))


def tetrahedron_system() -> ArcSystem:
    """Twelve arcs on the boundary of a tetrahedron with its vertices removed.

    Vertex p sits at infinity and the other three at radius 1, angles 90, 210
    and 330; the edges through p are the cut arcs.  The six extra arcs join
    the two vertices opposite an edge through the midpoint of that edge.
    """
    pic = PlanarPicture([(1, 90), (1, 210), (1, 330)])
    g = pic.gluing
    ang = [Fraction(90), Fraction(210), Fraction(330)]
    half = Fraction(1, 2)
    arcs = [side_arc(g, c) for c in g.letters()]
    for i, j in combinations(range(3), 2):
        arcs.append(pic.trace(("puncture", i), [Arc(half, ang[i], ang[j])], ("puncture", j)))
    # across an inner edge: from the opposite vertex through the centre to infinity
    for v in range(3):
        out = ang[v] + 180
        arcs.append(pic.trace(("puncture", v), [Arc(half, ang[v], out)], ("infinity", out)))
    # across the edge from p to vertex e: around the outside, passing over its ray
    for e in range(3):
        j, l = (e + 1) % 3, (e + 2) % 3
        eps = Fraction(1)
        start = ang[j] - eps
        stop = ang[l] + eps - FULL if ang[l] > ang[j] else ang[l] + eps
        if not (stop < ang[e] < start or stop < ang[e] + FULL < start or stop < ang[e] - FULL < start):
            raise AssertionError("median path misses its edge")
        arcs.append(pic.trace(("puncture", j), [Arc(Fraction(2), start, stop)], ("puncture", l)))
    return make_system(g, _distinct(arcs, 12, "tetrahedron system"))


CONSTRUCTIONS = {
    "polygon": "ideal_polygon_system",
    "triangulation": "triangulation_system",
    "concentric": "concentric_system",
    "same-puncture": "same_puncture_system",
    "two-punctures": "two_puncture_system",
    "tetrahedron": "tetrahedron_system",
}


def build(name: str, chi: int | None = None, k: int | None = None, gluing: str | None = None) -> ArcSystem:
    """Dispatch used by the command line."""
    if name in ("polygon", "triangulation"):
        g = parse_gluing(gluing) if gluing else standard_planar_gluing(chi)
        return ideal_polygon_system(g) if name == "polygon" else triangulation_system(g)
    if name == "concentric":
        return concentric_system(chi, k)
    if name == "same-puncture":
        return same_puncture_system(chi)
    if name == "two-punctures":
        return two_puncture_system(chi)
    if name == "tetrahedron":
        return tetrahedron_system()
    raise KeyError(name)

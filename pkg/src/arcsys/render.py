"""Deterministic SVG pictures of arc systems and chord families."""
from __future__ import annotations

import math
from itertools import combinations
from xml.sax.saxutils import escape

from .arcs import format_arc
from .chords import ChordFamily, chords_intersect, helly_certificate
from .errors import NotPairwiseIntersecting
from .intersection import _segments, crossing_table, intersection_matrix, strand_order
from .systems import ArcSystem

SIZE = 480
RADIUS = 180
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"]


def _num(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _vertex(q: float, n: int) -> tuple[float, float]:
    # corner 0 at the top, corners counterclockwise
    theta = math.pi / 2 + 2 * math.pi * q / n
    return SIZE / 2 + RADIUS * math.cos(theta), SIZE / 2 - RADIUS * math.sin(theta)


def _boundary_point(pos: int, scale: int, n: int) -> tuple[float, float]:
    """Integer boundary coordinate (corner q at 2q*scale) to the plane."""
    unit = pos / (2 * scale)
    q = math.floor(unit) % n
    t = unit - math.floor(unit)
    (x0, y0), (x1, y1) = _vertex(q, n), _vertex(q + 1, n)
    return x0 + t * (x1 - x0), y0 + t * (y1 - y0)


def _meet(p, q, r, s):
    (x1, y1), (x2, y2), (x3, y3), (x4, y4) = p, q, r, s
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) < 1e-12:
        return (x1 + x2) / 2, (y1 + y2) / 2
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    return x1 + t * (x2 - x1), y1 + t * (y2 - y1)


def _header(title: str) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE + 40}" '
        f'viewBox="0 0 {SIZE} {SIZE + 40}">',
        f"<title>{escape(title)}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE + 40}" fill="white"/>',
    ]


def render_system(sys: ArcSystem) -> str:
    """The 2m-gon with every arc drawn as chords between refined side positions.

    Crossings inside the polygon and crossings with side arcs of the system are
    marked; their number equals the sum of the upper triangle (with diagonal)
    of the intersection matrix.
    """
    g = sys.surface
    arcs = list(sys.arcs)
    n = g.sides
    out = _header(f"arc system on {g.word}")
    pts = [_vertex(q, n) for q in range(n)]
    out.append('<polygon points="' + " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
               + '" fill="none" stroke="#999999" stroke-width="1"/>')
    for s in range(n):
        (x0, y0), (x1, y1) = pts[s], pts[(s + 1) % n]
        xm, ym = (x0 + x1) / 2, (y0 + y1) / 2
        dx, dy = xm - SIZE / 2, ym - SIZE / 2
        k = 14 / math.hypot(dx, dy)
        out.append(f'<text x="{_num(xm + k * dx)}" y="{_num(ym + k * dy)}" font-size="12" '
                   f'text-anchor="middle" dominant-baseline="middle">{escape(g.symbol(s))}</text>')
    so = strand_order(g, arcs)
    lo, hi, owner = _segments(g, arcs, so)
    count = {letter: len(seq) for letter, seq in so.order.items()}
    scale = max(count.values(), default=0) + 2
    for idx, a in enumerate(arcs):
        colour = PALETTE[idx % len(PALETTE)]
        if a.is_side:
            (x0, y0), (x1, y1) = pts[a.start], pts[a.end]
            out.append(f'<line x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x1)}" y2="{_num(y1)}" '
                       f'stroke="{colour}" stroke-width="4" class="arc"><title>{escape(format_arc(a))}</title></line>')
            continue
        segs = [k for k in range(len(lo)) if owner[k] == idx]
        path = []
        for k in segs:
            (x0, y0) = _boundary_point(int(lo[k]), scale, n)
            (x1, y1) = _boundary_point(int(hi[k]), scale, n)
            path.append(f"M {_num(x0)} {_num(y0)} L {_num(x1)} {_num(y1)}")
        out.append(f'<path d="{" ".join(path)}" fill="none" stroke="{colour}" stroke-width="2" '
                   f'class="arc"><title>{escape(format_arc(a))}</title></path>')
    marks = []
    if len(lo):
        cross = crossing_table(lo, hi)
        for i, j in zip(*cross.nonzero()):
            if i < j:
                p = _meet(_boundary_point(int(lo[i]), scale, n), _boundary_point(int(hi[i]), scale, n),
                          _boundary_point(int(lo[j]), scale, n), _boundary_point(int(hi[j]), scale, n))
                marks.append(p)
    rank = so.rank()
    sides = {a.side_letter for a in arcs if a.is_side}
    for letter in sorted(sides):
        side = g.side_of(letter)
        for occ in so.along(letter):
            marks.append(_boundary_point((2 * side + 1) * scale + rank[occ] + 1, scale, n))
    for x, y in marks:
        out.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="4" fill="none" stroke="black" class="crossing"/>')
    mat = intersection_matrix(arcs).values
    total = int(sum(mat[i, j] for i in range(len(arcs)) for j in range(i, len(arcs))))
    out.append(f'<text x="10" y="{SIZE + 25}" font-size="14">{len(arcs)} arcs, {total} crossings</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_chords(fam: ChordFamily) -> str:
    """The circle with ``l`` labelled points and the chords of the family."""
    l = fam.l
    out = _header(f"chord family on {l} points")
    cx = cy = SIZE / 2
    out.append(f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{RADIUS}" fill="none" stroke="#999999"/>')

    def point(i):
        theta = math.pi / 2 - 2 * math.pi * i / l
        return cx + RADIUS * math.cos(theta), cy - RADIUS * math.sin(theta)

    for i in range(l):
        x, y = point(i)
        out.append(f'<circle cx="{_num(x)}" cy="{_num(y)}" r="3" fill="black"/>')
        k = 1 + 16 / RADIUS
        out.append(f'<text x="{_num(cx + k * (x - cx))}" y="{_num(cy + k * (y - cy))}" font-size="12" '
                   f'text-anchor="middle" dominant-baseline="middle">{i}</text>')
    for idx, (i, j) in enumerate(fam.chords):
        colour = PALETTE[idx % len(PALETTE)]
        (x0, y0), (x1, y1) = point(i), point(j)
        if i == j:
            out.append(f'<circle cx="{_num(x0)}" cy="{_num(y0)}" r="7" fill="none" stroke="{colour}" '
                       f'stroke-width="2" class="chord"/>')
        else:
            out.append(f'<line x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x1)}" y2="{_num(y1)}" '
                       f'stroke="{colour}" stroke-width="2" class="chord"/>')
    meets = sum(1 for a, b in combinations(fam.chords, 2) if chords_intersect(a, b, l))
    try:
        note = f", common point {helly_certificate(fam).point}"
    except NotPairwiseIntersecting:
        note = ", not pairwise intersecting"
    out.append(f'<text x="10" y="{SIZE + 25}" font-size="14">{len(fam)} chords, '
               f'{meets} intersecting pairs{note}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

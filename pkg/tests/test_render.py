import xml.etree.ElementTree as ET

from arcsys.chords import ChordFamily, max_pairwise_family
from arcsys.constructions import ideal_polygon_system, tetrahedron_system, triangulation_system
from arcsys.intersection import intersection_matrix
from arcsys.render import render_chords, render_system
from arcsys.surface import parse_gluing

NS = "{http://www.w3.org/2000/svg}"


def _count(svg, cls):
    root = ET.fromstring(svg.encode())
    return sum(1 for el in root.iter() if el.get("class") == cls)


def test_polygon_square():
    svg = render_system(ideal_polygon_system(parse_gluing("aAbB")))
    assert _count(svg, "arc") == 4 and _count(svg, "crossing") == 1
    assert 'version="1.1"' in svg


def test_triangulation_no_crossings():
    svg = render_system(triangulation_system(parse_gluing("aAbBcC")))
    assert _count(svg, "crossing") == 0


def test_marks_match_matrix():
    s = tetrahedron_system()
    m = intersection_matrix(s).values
    total = sum(int(m[i, j]) for i in range(len(s)) for j in range(i + 1, len(s)))
    assert _count(render_system(s), "crossing") == total


def test_deterministic():
    s = tetrahedron_system()
    assert render_system(s) == render_system(s)


def test_chords():
    svg = render_chords(max_pairwise_family(3))
    assert _count(svg, "chord") == 3
    assert "common point" in svg
    assert "not pairwise" in render_chords(ChordFamily(4, ((0, 1), (2, 3))))

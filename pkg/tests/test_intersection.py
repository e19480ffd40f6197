import itertools
import random

import numpy as np
import pytest

from arcsys.arcs import Itinerary, canonicalize, is_essential, parse_arc, side_arc
from arcsys.constructions import ideal_polygon_system, triangulation_system
from arcsys.errors import SurfaceMismatch
from arcsys.intersection import (intersection_matrix, intersection_number, is_simple,
                                 occurrences, self_intersection, strand_order)
from arcsys.lifts import intersection_number_lifts
from arcsys.surface import parse_gluing
from arcsys.systems import SearchConfig, enumerate_arcs, _reduced_words

from conftest import SURFACES, random_arc


def arcs(g, *texts):
    return [parse_arc(t, g) for t in texts]


def test_cut_arcs_disjoint(surface):
    sides = [side_arc(surface, c) for c in surface.letters()]
    for a, b in itertools.combinations(sides, 2):
        assert intersection_number(a, b) == 0


def test_square_diagonals():
    g = parse_gluing("aAbB")
    d1, d2 = arcs(g, "c0::c2", "c1::c3")
    assert intersection_number(d1, d2) == 1


def test_frozen_values():
    # cross-checked with the lift oracle when first computed
    g = parse_gluing("aAbB")
    a, b = arcs(g, "c2:aBa:c3", "c2:BaBaa:c3")
    assert intersection_number(a, b) == 14
    t = parse_gluing("abAB")
    # arcs crossing a once have slopes +-2, those crossing b once slopes +-1/2
    x1, x2, y1, y2 = arcs(t, "c0:A:c2", "c1:A:c3", "c0:b:c2", "c1:B:c3")
    assert [intersection_number(x, y) for x in (x1, x2) for y in (y1, y2)] == [2, 4, 4, 2]


_CORNER = [(0, 0), (1, 0), (1, 1), (0, 1)]
_STEP = {"a": (0, -1), "b": (1, 0), "A": (0, 1), "B": (-1, 0)}


def _torus_vector(a):
    # displacement of a lift in the square lattice covering the torus abAB
    x, y = _CORNER[a.end][0] - _CORNER[a.start][0], _CORNER[a.end][1] - _CORNER[a.start][1]
    for c in a.word:
        x, y = x + _STEP[c][0], y + _STEP[c][1]
    return x, y


def test_torus_slope_formula():
    # simple arcs on the punctured torus are slopes; i(p/q, r/s) = |ps - qr| - 1
    g = parse_gluing("abAB")
    universe = enumerate_arcs(g, SearchConfig(5)).arcs
    assert len(universe) > 20
    for a, b in itertools.combinations(universe, 2):
        (p, q), (r, s) = _torus_vector(a), _torus_vector(b)
        assert intersection_number(a, b) == abs(p * s - q * r) - 1, (a, b)


def test_simple_arcs_zero_diagonal(surface):
    for a in enumerate_arcs(surface, SearchConfig(3)).arcs:
        assert self_intersection(a) == 0 and is_simple(a)
        assert intersection_number(a, a) == 0


def test_non_simple_arcs_exist_and_match_oracle():
    g = parse_gluing("aAbB")
    found = []
    for w in _reduced_words(g, 4):
        for s in g.corners:
            for e in g.corners:
                a = canonicalize(Itinerary(s, w, e), g)
                if is_essential(a) and self_intersection(a) > 0:
                    found.append(a)
    assert found
    rng = random.Random(5)
    for a in rng.sample(found, 15):
        # each self-crossing shows up as two linked translates of the fixed lift
        lc = intersection_number_lifts(a, a)
        assert lc.stabilized and lc.count == 2 * self_intersection(a)
    assert not set(a.key() for a in found) & set(
        a.key() for a in enumerate_arcs(g, SearchConfig(4)).arcs)


def test_surface_mismatch():
    with pytest.raises(SurfaceMismatch):
        intersection_number(side_arc(parse_gluing("aAbB"), "a"), side_arc(parse_gluing("abAB"), "a"))


def test_matrix_examples():
    g = parse_gluing("aAbB")
    m = intersection_matrix(ideal_polygon_system(g))
    assert m.is_symmetric() and m.max_off_diagonal() <= 1
    assert all(m[i, i] == 0 for i in range(m.size))
    assert not intersection_matrix(triangulation_system(g)).values.any()
    one = intersection_matrix([side_arc(g, "a")])
    assert one.tolist() == [[0]]


@pytest.mark.parametrize("word", SURFACES)
def test_symmetry_exhaustive(word):
    g = parse_gluing(word)
    universe = enumerate_arcs(g, SearchConfig(4)).arcs
    for a, b in itertools.combinations(universe, 2):
        assert intersection_number(a, b) == intersection_number(b, a)


@pytest.mark.parametrize("word", SURFACES)
def test_permutation_invariance(word):
    g = parse_gluing(word)
    rng = random.Random(word)
    pool = [random_arc(g, rng, 4) for _ in range(30)]
    pool = list({a.key(): a for a in pool}.values())
    base = intersection_matrix(pool).values
    for _ in range(5):
        perm = list(range(len(pool)))
        rng.shuffle(perm)
        shuffled = intersection_matrix([pool[i] for i in perm]).values
        assert np.array_equal(shuffled, base[np.ix_(perm, perm)])
    for i, j in itertools.combinations(range(len(pool)), 2):
        assert base[i, j] == intersection_number(pool[i], pool[j])


def test_strand_order_total_and_flip():
    g = parse_gluing("aAbBcC")
    a = parse_arc("c4:aBA:c4", g)
    so = strand_order(g, [a])
    seq = so.along("a")
    assert len(seq) == 2 and seq[0] != seq[1]
    assert so.along("a", flip=True) == seq[::-1]


def test_strand_order_independent_of_input_order():
    g = parse_gluing("abAB")
    rng = random.Random(2)
    pool = list({a.key(): a for a in (random_arc(g, rng, 5) for _ in range(12))}.values())
    occs = occurrences(pool)
    so = strand_order(g, pool, occs)
    rev = pool[::-1]
    so2 = strand_order(g, rev)
    n = len(pool)
    for letter, seq in so.order.items():
        mapped = [(n - 1 - o.arc, o.position) for o in so2.order[letter]]
        assert mapped == [(o.arc, o.position) for o in seq]

import random

import pytest
from hypothesis import given, settings, strategies as st

from arcsys.arcs import (Itinerary, canonicalize, endpoints, equals, format_arc, free_reduce,
                         is_essential, parse_arc, reverse, side_arc)
from arcsys.errors import MalformedItinerary, SurfaceMismatch
from arcsys.surface import inverse, parse_gluing

from conftest import SURFACES, random_arc, random_word


def homotopy_move(g, it: Itinerary, rng: random.Random) -> Itinerary:
    """One random move that preserves the homotopy class."""
    s, w, e = it.start, it.word, it.end
    kind = rng.randrange(4)
    if kind == 0:
        # insert a crossing immediately undone
        i = rng.randint(0, len(w))
        c = rng.choice(g.word)
        return Itinerary(s, w[:i] + c + inverse(c) + w[i:], e)
    if kind == 1:
        # push the end across a side incident to its corner
        side = rng.choice([e, (e - 1) % g.sides])
        return Itinerary(s, w + g.symbol(side), g.transport(e, side))
    if kind == 2:
        side = rng.choice([s, (s - 1) % g.sides])
        return Itinerary(g.transport(s, side), inverse(g.symbol(side)) + w, e)
    return it.reversed()


def test_backtrack_cancels():
    g = parse_gluing("aAbB")
    a = canonicalize(Itinerary(0, "aA", 0), g)
    assert a.word == "" and not is_essential(a)


def test_side_arc_normalisation():
    g = parse_gluing("aAbB")
    assert canonicalize(Itinerary(0, "", 1), g).key() == side_arc(g, "a").key()
    # the chord across the partner copy of a is the same cut arc
    assert equals(canonicalize(Itinerary(1, "", 2), g), side_arc(g, "A"))


def test_end_reduction_on_hexagon():
    g = parse_gluing("aAbBcC")
    # crossing c (side 4) from corner 0, ending at corner 5 of the tile behind it
    raw = Itinerary(0, "c", g.transport(4, 4))
    a = canonicalize(raw, g)
    assert len(a.word) == 0
    assert canonicalize(a.itinerary, g) == a


def test_diagonals():
    g = parse_gluing("aAbB")
    d1 = canonicalize(Itinerary(0, "", 2), g)
    d2 = canonicalize(Itinerary(1, "", 3), g)
    assert not equals(d1, d2)
    assert is_essential(d1)
    assert endpoints(d1) == tuple(sorted((g.cusp_of[0], g.cusp_of[2])))


def test_side_arcs_essential_and_endpoints():
    g = parse_gluing("aAbB")
    for c in g.letters():
        a = side_arc(g, c)
        assert is_essential(a)
        s = g.side_of(c)
        assert endpoints(a) == tuple(sorted((g.cusp_of[s], g.cusp_of[(s + 1) % 4])))


def test_torus_endpoints():
    g = parse_gluing("abAB")
    rng = random.Random(1)
    for _ in range(20):
        assert endpoints(random_arc(g, rng)) == (0, 0)


def test_malformed():
    g = parse_gluing("aAbB")
    with pytest.raises(MalformedItinerary):
        canonicalize(Itinerary(0, "z", 1), g)
    with pytest.raises(MalformedItinerary):
        canonicalize(Itinerary(0, "", 9), g)
    with pytest.raises(MalformedItinerary):
        parse_arc("c0-a-c1", g)


def test_surface_mismatch():
    with pytest.raises(SurfaceMismatch):
        equals(side_arc(parse_gluing("aAbB"), "a"), side_arc(parse_gluing("abAB"), "a"))


def test_text_round_trip():
    g = parse_gluing("aAbBcC")
    rng = random.Random(3)
    for _ in range(200):
        a = random_arc(g, rng, 6)
        assert parse_arc(format_arc(a), g) == a
    assert format_arc(parse_arc("c0::c2", g)) == "c0::c2"
    assert format_arc(parse_arc("side:B", g)) == "side:b"


def test_free_reduce():
    assert free_reduce("abBA") == ""
    assert free_reduce("aBbAc") == "c"


@pytest.mark.parametrize("word", SURFACES)
def test_homotopy_moves(word):
    g = parse_gluing(word)
    rng = random.Random(word)
    for _ in range(1000):
        a = random_arc(g, rng, 6)
        it = a.itinerary
        for _ in range(rng.randint(1, 4)):
            it = homotopy_move(g, it, rng)
        assert canonicalize(it, g) == a


@pytest.mark.parametrize("word", SURFACES)
def test_distinct_forms_stay_distinct(word):
    # sampled normal-form uniqueness: moves never carry one form to another
    g = parse_gluing(word)
    rng = random.Random(word + "!")
    seen = {}
    for _ in range(300):
        a = random_arc(g, rng, 4)
        it = a.itinerary
        for _ in range(3):
            it = homotopy_move(g, it, rng)
            b = canonicalize(it, g)
            assert b == a
        seen[a.key()] = a
    assert len(seen) > 50


@st.composite
def itineraries(draw):
    word = draw(st.sampled_from(SURFACES))
    g = parse_gluing(word)
    letters = draw(st.lists(st.sampled_from(list(g.word)), max_size=8))
    s = draw(st.integers(0, g.sides - 1))
    e = draw(st.integers(0, g.sides - 1))
    return g, Itinerary(s, "".join(letters), e)


@settings(max_examples=300)
@given(itineraries())
def test_idempotent(data):
    g, raw = data
    a = canonicalize(raw, g)
    assert canonicalize(a.itinerary, g) == a


@settings(max_examples=300)
@given(itineraries())
def test_reversal(data):
    g, raw = data
    a = canonicalize(raw, g)
    assert canonicalize(reverse(a), g) == a
    assert canonicalize(raw.reversed(), g) == a


@settings(max_examples=200)
@given(itineraries())
def test_canonical_invariants(data):
    g, raw = data
    a = canonicalize(raw, g)
    assert free_reduce(a.word) == a.word
    if a.word:
        assert not g.incident(a.start, g.side_of(a.word[0]))
        assert not g.incident(a.end, g.side_of(inverse(a.word[-1])))
    assert a.key() <= a.itinerary.reversed().key() or a.is_side


def test_random_word_helper_is_reduced():
    g = parse_gluing("abAB")
    rng = random.Random(0)
    for _ in range(100):
        w = random_word(g, rng, 8)
        assert free_reduce(w) == w

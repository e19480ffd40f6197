import pytest
from hypothesis import given, strategies as st

from arcsys.chords import (ChordFamily, all_maximum_families, chords_intersect, format_family,
                           helly_certificate, max_pairwise_family, parse_family)
from arcsys.errors import NotPairwiseIntersecting, TooLarge


def test_examples():
    assert chords_intersect((0, 2), (1, 3), 4)
    assert not chords_intersect((0, 1), (2, 3), 4)
    assert chords_intersect((0, 0), (0, 1), 4)
    assert not chords_intersect((0, 0), (1, 1), 4)
    assert not chords_intersect((0, 3), (1, 2), 4)


def test_small_families():
    assert max_pairwise_family(1).chords == ((0, 0),)
    assert len(max_pairwise_family(3)) == 3
    assert len(max_pairwise_family(6)) == 6
    with pytest.raises(TooLarge):
        max_pairwise_family(9)


def test_helly_examples():
    cert = helly_certificate(ChordFamily(3, ((0, 1), (1, 2), (0, 2))))
    assert cert.point == 1 and cert.ok
    assert helly_certificate(ChordFamily(5, ((1, 3),))).point == 1
    with pytest.raises(NotPairwiseIntersecting):
        helly_certificate(ChordFamily(4, ((0, 1), (2, 3))))


def test_family_validation():
    with pytest.raises(ValueError):
        ChordFamily(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        ChordFamily(3, ((0, 3),))


@pytest.mark.parametrize("l", range(1, 9))
def test_lemma_sharp(l):
    assert len(max_pairwise_family(l)) == l
    assert not list(all_maximum_families(l, l + 1)) if l <= 6 else True
    for fam in all_maximum_families(l):
        assert fam.is_pairwise_intersecting()
        assert helly_certificate(fam).ok


def test_file_round_trip():
    fam = max_pairwise_family(5)
    assert parse_family(format_family(fam)) == fam
    with pytest.raises(ValueError):
        parse_family("3\n0 1\n")


chord_st = st.tuples(st.integers(0, 9), st.integers(0, 9))


@given(chord_st, chord_st)
def test_symmetric(c1, c2):
    assert chords_intersect(c1, c2, 10) == chords_intersect(c2, c1, 10)


@given(chord_st, chord_st, st.integers(0, 9))
def test_rotation_invariant(c1, c2, shift):
    rot = [tuple((x + shift) % 10 for x in c) for c in (c1, c2)]
    assert chords_intersect(c1, c2, 10) == chords_intersect(*rot, 10)


@pytest.mark.parametrize("l, shift", [(5, 2), (7, 3)])
def test_rotated_maximum_families(l, shift):
    fams = {f.chords for f in all_maximum_families(l)}
    assert {ChordFamily(l, c).rotated(shift).chords for c in fams} == fams


@given(st.sets(st.tuples(st.integers(0, 6), st.integers(0, 6)).map(lambda c: (min(c), max(c))),
               min_size=1, max_size=10))
def test_any_pairwise_family_is_certified(chords):
    fam = ChordFamily(7, tuple(chords))
    if fam.is_pairwise_intersecting():
        cert = helly_certificate(fam)
        assert cert.ok and len(fam) <= 7
        assert all(i <= cert.point <= j for i, j in fam.chords)

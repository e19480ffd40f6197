from math import comb

import pytest

from arcsys.errors import DivisibilityError
from arcsys.formulas import (BoundQuery, bipartite_disjoint, chord_bound, curve_bound,
                             degree_summary, disjoint_arcs, evaluate, f_arcs, k_system_lower,
                             nib_overlap_bound, punctured_sphere_arcs)


def test_examples():
    assert [f_arcs(x) for x in (1, 2, 3)] == [4, 12, 24]
    assert [disjoint_arcs(x) for x in (1, 2, 10)] == [3, 6, 30]
    assert [bipartite_disjoint(x) for x in (1, 2, 5)] == [2, 4, 10]
    assert [curve_bound(1, 1), curve_bound(2, 2), curve_bound(0, 2)] == [9, 51, 1]
    assert [punctured_sphere_arcs(x) for x in (1, 2, 4)] == [1, 3, 10]
    assert [k_system_lower(2, 1), k_system_lower(3, 2), k_system_lower(4, 1)] == [3, 7, 8]
    assert [nib_overlap_bound(x) for x in (1, 2, 3)] == [4, 6, 8]
    assert [chord_bound(x) for x in (3, 8, 1)] == [3, 8, 1]
    assert [degree_summary(k) for k in (1, 0, 2)] == [(2, 3), (1, 1), (3, 7)]


def test_errors():
    with pytest.raises(DivisibilityError):
        k_system_lower(3, 1)
    with pytest.raises(ValueError):
        f_arcs(0)
    with pytest.raises(ValueError):
        BoundQuery(0)
    with pytest.raises(ValueError):
        evaluate("k_system_lower", chi=4)
    with pytest.raises(KeyError):
        evaluate("nope", chi=1)


def test_identities():
    for x in list(range(1, 200)) + [10 ** 6]:
        assert f_arcs(x) == (2 * x + 2) * (2 * x - 1) // 2 + (x + 1)
        assert punctured_sphere_arcs(x) == comb(x + 1, 2)
        assert k_system_lower(x, 0) == x <= disjoint_arcs(x)


def test_integers_only():
    for x in range(1, 11):
        for v in (f_arcs(x), disjoint_arcs(x), punctured_sphere_arcs(x), nib_overlap_bound(x)):
            assert type(v) is int


def test_evaluate_dispatch():
    assert evaluate("f_arcs", chi=2) == 12
    assert evaluate("curve_bound", chi=2, genus=2) == 51
    assert evaluate("degree_summary", k=2) == (3, 7)

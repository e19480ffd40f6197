"""Closed-form cardinality bounds for arc and curve systems.  Integers only."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisibilityError


@dataclass(frozen=True)
class BoundQuery:
    abs_chi: int
    k: int | None = None
    genus: int | None = None

    def __post_init__(self):
        if self.abs_chi < 1:
            raise ValueError("abs_chi must be at least 1")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be non-negative")
        if self.genus is not None and self.genus < 0:
            raise ValueError("genus must be non-negative")


def _positive(x: int) -> int:
    if x < 1:
        raise ValueError("abs_chi must be at least 1")
    return x


def f_arcs(abs_chi: int) -> int:
    """Maximal size of a 1-system of arcs."""
    x = _positive(abs_chi)
    return 2 * x * (x + 1)


def disjoint_arcs(abs_chi: int) -> int:
    """Maximal number of pairwise disjoint arcs (an ideal triangulation)."""
    return 3 * _positive(abs_chi)


def bipartite_disjoint(abs_chi: int) -> int:
    """Disjoint arcs joining two complementary sets of punctures."""
    return 2 * _positive(abs_chi)


def curve_bound(genus: int, abs_chi: int) -> int:
    """Upper bound for closed curves pairwise intersecting at most once."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    x = _positive(abs_chi)
    return genus * (2 * f_arcs(x) + 1) + x - 1


def punctured_sphere_arcs(abs_chi: int) -> int:
    """1-systems of arcs with prescribed endpoints on a punctured sphere."""
    x = _positive(abs_chi)
    return x * (x + 1) // 2


def k_system_lower(abs_chi: int, k: int) -> int:
    """Size of the concentric-circles k-system."""
    x = _positive(abs_chi)
    if k < 0:
        raise ValueError("k must be non-negative")
    if x % (k + 1):
        raise DivisibilityError(f"k + 1 = {k + 1} does not divide |chi| = {x}")
    return (x // (k + 1) + 1) ** (k + 1) - 1


def nib_overlap_bound(abs_chi: int) -> int:
    return 2 * (_positive(abs_chi) + 1)


def chord_bound(l: int) -> int:
    """Pairwise intersecting chords among l circle points."""
    if l < 1:
        raise ValueError("l must be at least 1")
    return l


def degree_summary(k: int) -> tuple[int, int]:
    """Polynomial degrees in |chi| of the k-system bounds (arcs, curves)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return k + 1, k * k + k + 1


FORMULAS = {
    "f_arcs": ("chi",),
    "disjoint_arcs": ("chi",),
    "bipartite_disjoint": ("chi",),
    "curve_bound": ("genus", "chi"),
    "punctured_sphere_arcs": ("chi",),
    "k_system_lower": ("chi", "k"),
    "nib_overlap_bound": ("chi",),
    "chord_bound": ("chi",),
    "degree_summary": ("k",),
}


def evaluate(name: str, chi: int | None = None, k: int | None = None, genus: int | None = None):
    if name not in FORMULAS:
        raise KeyError(name)
    args = {"chi": chi, "k": k, "genus": genus}
    missing = [a for a in FORMULAS[name] if args[a] is None]
    if missing:
        raise ValueError(f"{name} needs --{' --'.join(missing)}")
    return globals()[name](*(args[a] for a in FORMULAS[name]))

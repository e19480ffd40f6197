"""Arc systems: k-system verification, bounded enumeration and extremal search."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import networkx as nx

from .arcs import CanonicalArc, Itinerary, canonicalize, format_arc, is_essential, parse_arc
from .clique import max_clique
from .errors import BudgetExceeded, InvalidSystem, MalformedItinerary, SurfaceMismatch
from .formulas import bipartite_disjoint, disjoint_arcs, f_arcs, punctured_sphere_arcs
from .intersection import IntersectionMatrix, intersection_matrix, self_intersection
from .surface import SurfaceGluing, parse_gluing

DEFAULT_TIME_BUDGET = float(os.environ.get("ARCSYS_TIME_BUDGET", "120"))


@dataclass(frozen=True)
class ArcSystem:
    surface: SurfaceGluing
    arcs: tuple[CanonicalArc, ...]

    def __post_init__(self):
        seen = set()
        for a in self.arcs:
            if a.surface != self.surface:
                raise SurfaceMismatch(f"arc {a} is not on {self.surface.word!r}")
            if a.key() in seen:
                raise InvalidSystem(f"duplicate arc {a}")
            seen.add(a.key())

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def keys(self) -> frozenset:
        return frozenset(a.key() for a in self.arcs)


def make_system(surface: SurfaceGluing, arcs: Iterable[CanonicalArc], check: bool = True) -> ArcSystem:
    """Build a system, rejecting inessential and non-simple arcs."""
    arcs = tuple(arcs)
    if check:
        for a in arcs:
            if not is_essential(a):
                raise InvalidSystem(f"arc {a} is inessential")
            if self_intersection(a):
                raise InvalidSystem(f"arc {a} is not simple")
    return ArcSystem(surface, arcs)


@dataclass
class KSystemReport:
    k: int
    matrix: IntersectionMatrix
    max_pair: int
    ok: bool
    witnesses: list

    def to_json(self, arcs: Sequence[CanonicalArc] | None = None) -> dict:
        out = {
            "k": self.k,
            "size": self.matrix.size,
            "max_pair": self.max_pair,
            "ok": self.ok,
            "witnesses": [list(w) for w in self.witnesses],
            "matrix": self.matrix.tolist(),
        }
        if arcs is not None:
            out["arcs"] = [format_arc(a) for a in arcs]
        return out


def verify_k_system(sys: ArcSystem, k: int) -> KSystemReport:
    mat = intersection_matrix(sys.arcs)
    n = mat.size
    witnesses = [(i, j, mat[i, j]) for i in range(n) for j in range(i + 1, n) if mat[i, j] > k]
    diag_ok = all(mat[i, i] == 0 for i in range(n))
    distinct = len(sys.keys()) == n
    max_pair = mat.max_off_diagonal()
    return KSystemReport(k, mat, max_pair, max_pair <= k and diag_ok and distinct, witnesses)


@dataclass(frozen=True)
class EndpointFilter:
    """``kind`` is ``none``, ``bipartite`` or ``fixed``.

    bipartite keeps arcs with one end in ``first`` and the other in ``second``;
    fixed keeps arcs whose unordered end cusps are exactly ``{p, q}``.
    """
    kind: str = "none"
    first: frozenset = frozenset()
    second: frozenset = frozenset()

    @classmethod
    def bipartite(cls, first, second) -> "EndpointFilter":
        return cls("bipartite", frozenset(first), frozenset(second))

    @classmethod
    def fixed(cls, p: int, q: int) -> "EndpointFilter":
        return cls("fixed", frozenset([p]), frozenset([q]))

    def accepts(self, a: CanonicalArc) -> bool:
        u, v = a.endpoint_cusps
        if self.kind == "none":
            return True
        if self.kind == "bipartite":
            return (u in self.first and v in self.second) or (v in self.first and u in self.second)
        (p,), (q,) = tuple(self.first), tuple(self.second)
        return sorted((u, v)) == sorted((p, q))

    def check(self, g: SurfaceGluing) -> None:
        cusps = set(range(g.punctures))
        if not (self.first | self.second) <= cusps:
            raise ValueError(f"cusp ids must lie in 0..{g.punctures - 1}")
        if self.kind == "bipartite" and self.first & self.second:
            raise ValueError("bipartite cusp sets must be disjoint")

    def describe(self) -> dict:
        return {"kind": self.kind, "first": sorted(self.first), "second": sorted(self.second)}


@dataclass(frozen=True)
class SearchConfig:
    max_word_len: int
    k: int = 1
    endpoint_filter: EndpointFilter = field(default_factory=EndpointFilter)
    time_budget: float = DEFAULT_TIME_BUDGET

    def __post_init__(self):
        if self.max_word_len < 0:
            raise ValueError("max_word_len must be non-negative")
        if self.k < 0:
            raise ValueError("k must be non-negative")


def _reduced_words(g: SurfaceGluing, max_len: int):
    yield ""
    frontier = [""]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for c in g.word:
                if w and w[-1] == c.swapcase():
                    continue
                nxt.append(w + c)
        yield from nxt
        frontier = nxt


def enumerate_arcs(g: SurfaceGluing, cfg: SearchConfig, deadline: float | None = None) -> ArcSystem:
    """All simple essential arcs with at most ``cfg.max_word_len`` crossings."""
    if deadline is None:
        deadline = time.monotonic() + cfg.time_budget
    cfg.endpoint_filter.check(g)
    found: dict = {}
    for count, w in enumerate(_reduced_words(g, cfg.max_word_len)):
        if count % 512 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("arc enumeration exceeded its time budget")
        for s in g.corners:
            for e in g.corners:
                a = canonicalize(Itinerary(s, w, e), g)
                if a.key() not in found:
                    found[a.key()] = a
    universe = []
    for key in sorted(found, key=lambda k: (len(k[1]), k)):
        a = found[key]
        if len(a.word) > cfg.max_word_len or not is_essential(a):
            continue
        if not cfg.endpoint_filter.accepts(a):
            continue
        if self_intersection(a) == 0:
            universe.append(a)
    return ArcSystem(g, tuple(universe))


def compatibility_graph(universe: ArcSystem | Sequence[CanonicalArc], k: int,
                        matrix: IntersectionMatrix | None = None) -> nx.Graph:
    arcs = list(getattr(universe, "arcs", universe))
    if matrix is None:
        matrix = intersection_matrix(arcs)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(arcs)))
    vals = matrix.values
    for i in range(len(arcs)):
        for j in range(i + 1, len(arcs)):
            if vals[i, j] <= k:
                graph.add_edge(i, j)
    return graph


def closed_form_bound(g: SurfaceGluing, cfg: SearchConfig) -> int | None:
    """Closed-form ceiling for the configuration, when one applies."""
    x = g.abs_chi
    kind = cfg.endpoint_filter.kind
    if kind == "none" and cfg.k == 0:
        return disjoint_arcs(x)
    if kind == "none" and cfg.k == 1:
        return f_arcs(x)
    if kind == "bipartite" and cfg.k == 0:
        f = cfg.endpoint_filter
        if (f.first | f.second) == set(range(g.punctures)):
            return bipartite_disjoint(x)
        return None
    if kind == "fixed" and cfg.k == 1 and g.genus == 0:
        return punctured_sphere_arcs(x)
    return None


@dataclass
class SearchResult:
    best_system: ArcSystem
    clique_size: int
    universe_size: int
    elapsed: float
    bound: int | None
    max_word_len: int
    k: int

    @property
    def matches_bound(self) -> bool | None:
        return None if self.bound is None else self.clique_size == self.bound

    @property
    def exceeds_bound(self) -> bool:
        return self.bound is not None and self.clique_size > self.bound

    def to_json(self, with_time: bool = False) -> dict:
        out = {
            "surface": self.best_system.surface.word,
            "k": self.k,
            "max_word_len": self.max_word_len,
            "universe_size": self.universe_size,
            "clique_size": self.clique_size,
            "bound": self.bound,
            "matches_bound": self.matches_bound,
            "best_system": [format_arc(a) for a in self.best_system.arcs],
        }
        if with_time:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def extremal_search(g: SurfaceGluing, cfg: SearchConfig) -> SearchResult:
    """Largest k-system inside the enumerated universe.

    The answer is certified only within arcs of at most ``cfg.max_word_len``
    crossings with the cut system.
    """
    t0 = time.monotonic()
    deadline = t0 + cfg.time_budget
    universe = enumerate_arcs(g, cfg, deadline)
    graph = compatibility_graph(universe, cfg.k)
    remaining = deadline - time.monotonic()
    if remaining <= 0:
        raise BudgetExceeded("search exceeded its time budget before the clique stage")
    clique = max_clique(graph, remaining)
    best = ArcSystem(g, tuple(universe.arcs[i] for i in clique))
    return SearchResult(best, len(clique), len(universe), time.monotonic() - t0,
                        closed_form_bound(g, cfg), cfg.max_word_len, cfg.k)


# system files

def format_system(sys: ArcSystem) -> str:
    lines = [f"surface {sys.surface.word}"]
    lines.extend(format_arc(a) for a in sys.arcs)
    return "\n".join(lines) + "\n"


def parse_system(text: str, check: bool = True) -> ArcSystem:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("surface "):
        raise MalformedItinerary("system file must start with 'surface <gluing word>'")
    g = parse_gluing(lines[0].split(None, 1)[1])
    return make_system(g, (parse_arc(ln, g) for ln in lines[1:]), check=check)


def write_system(sys: ArcSystem, path: str | Path) -> None:
    Path(path).write_text(format_system(sys))


def read_system(path: str | Path, check: bool = True) -> ArcSystem:
    return parse_system(Path(path).read_text(), check=check)


"""Exact maximum clique by branch and bound with a greedy colouring bound.

Vertex sets are Python ints used as bitsets.  Vertices are tried in a fixed
order, so the clique returned for a given graph never changes between runs.
"""
from __future__ import annotations

import time
from typing import Iterator

import networkx as nx

from .errors import BudgetExceeded


def _bits(graph: nx.Graph) -> tuple[list, list[int]]:
    nodes = sorted(graph.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    nbr = [0] * len(nodes)
    for u, v in graph.edges:
        if u == v:
            continue
        i, j = index[u], index[v]
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    return nodes, nbr


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _colour_sort(p: int, nbr: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of the candidate set; returns vertices and their colour
    numbers in non-decreasing colour order."""
    order, bounds = [], []
    colour = 0
    uncoloured = p
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncoloured &= ~low
            q &= ~low & ~nbr[v]
            order.append(v)
            bounds.append(colour)
    return order, bounds


class _Search:
    def __init__(self, nbr: list[int], deadline: float | None):
        self.nbr = nbr
        self.deadline = deadline
        self.best: list[int] = []
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks % 256 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("clique search exceeded its time budget")

    def expand(self, r: list[int], p: int) -> None:
        self.tick()
        order, bounds = _colour_sort(p, self.nbr)
        for k in range(len(order) - 1, -1, -1):
            if len(r) + bounds[k] <= len(self.best):
                return
            v = order[k]
            r.append(v)
            np_ = p & self.nbr[v]
            if np_:
                self.expand(r, np_)
            elif len(r) > len(self.best):
                self.best = list(r)
            r.pop()
            p &= ~(1 << v)


def max_clique(graph: nx.Graph, time_budget: float | None = None) -> list:
    """One maximum clique of ``graph`` as a sorted list of its nodes."""
    nodes, nbr = _bits(graph)
    if not nodes:
        return []
    deadline = None if time_budget is None else time.monotonic() + time_budget
    search = _Search(nbr, deadline)
    search.expand([], (1 << len(nodes)) - 1)
    return sorted(nodes[i] for i in search.best)


def cliques_of_size(graph: nx.Graph, size: int) -> Iterator[list]:
    """Every clique with exactly ``size`` vertices, each as a sorted node list."""
    nodes, nbr = _bits(graph)

    def grow(r: list[int], p: int):
        if len(r) == size:
            yield sorted(nodes[i] for i in r)
            return
        order, bounds = _colour_sort(p, nbr)
        for k in range(len(order) - 1, -1, -1):
            if len(r) + bounds[k] < size:
                return
            v = order[k]
            r.append(v)
            yield from grow(r, p & nbr[v])
            r.pop()
            p &= ~(1 << v)

    if size == 0:
        yield []
        return
    yield from grow([], (1 << len(nodes)) - 1)

"""Labelled presentation graphs and the combinatorial primitives built on them.

A :class:`PresentationGraph` is immutable.  Vertex sets are plain
``frozenset`` objects of vertex names; every operation taking one checks
that its members belong to the graph.
"""
from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, Mapping

from .errors import GraphInputError

MAX_LABEL = 10**6

INFINITE = math.inf


class PresentationGraph:
    """Finite simple graph with integer edge labels ``m >= 2``.

    Vertices are kept in lexicographic order.  Equality and hashing ignore
    ``name``: two graphs are equal when they have the same vertices and the
    same labelled edges.
    """

    __slots__ = ("vertices", "name", "_labels", "_adj", "_key")

    def __init__(self, vertices: Iterable[str], edges=(), name: str | None = None):
        verts = list(vertices)
        seen = set()
        for v in verts:
            if not isinstance(v, str) or not v:
                raise GraphInputError(f"vertex identifiers must be non-empty strings, got {v!r}")
            if v in seen:
                raise GraphInputError(f"duplicate vertex {v!r}")
            seen.add(v)

        if isinstance(edges, Mapping):
            edges = [(u, v, m) for (u, v), m in edges.items()]

        labels: dict[frozenset, int] = {}
        adj: dict[str, set] = {v: set() for v in verts}
        for u, v, m in edges:
            for w in (u, v):
                if w not in seen:
                    raise GraphInputError(f"edge endpoint {w!r} is not a declared vertex")
            if u == v:
                raise GraphInputError(f"self-loop at {u!r}")
            check_label(m)
            pair = frozenset((u, v))
            if pair in labels:
                raise GraphInputError(f"duplicate edge {u}–{v}")
            labels[pair] = int(m)
            adj[u].add(v)
            adj[v].add(u)

        self.vertices: tuple[str, ...] = tuple(sorted(verts))
        self.name = name
        self._labels = labels
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._key = (
            self.vertices,
            tuple(sorted((*sorted(p), m) for p, m in labels.items())),
        )

    # -- basic access -----------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._adj

    def __eq__(self, other):
        if not isinstance(other, PresentationGraph):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        edges = ", ".join(f"{u}-{v}:{m}" for u, v, m in self.edges())
        tag = f"{self.name!r}, " if self.name else ""
        return f"PresentationGraph({tag}[{', '.join(self.vertices)}], {{{edges}}})"

    @property
    def key(self):
        """Hashable canonical form: sorted vertices and sorted ``(u, v, m)`` triples."""
        return self._key

    def label(self, u: str, v: str) -> int | None:
        """Edge label ``m_uv``, or ``None`` for a non-edge (including ``u == v``)."""
        return self._labels.get(frozenset((u, v))) if u != v else None

    def neighbours(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphInputError(f"unknown vertex {v!r}") from None

    def edges(self) -> list[tuple[str, str, int]]:
        """All edges as ``(u, v, m)`` with ``u < v``, sorted."""
        return list(self._key[1])

    def degree(self, v: str) -> int:
        return len(self.neighbours(v))

    def with_name(self, name):
        return PresentationGraph(self.vertices, self.edges(), name=name)


def check_label(m) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        raise GraphInputError(f"edge labels must be integers, got {m!r}")
    if m < 2:
        raise GraphInputError("label must be ≥ 2")
    if m > MAX_LABEL:
        raise GraphInputError(f"label {m} exceeds the maximum of {MAX_LABEL}")
    return m


def vertex_set(g: PresentationGraph, A: Iterable[str]) -> frozenset:
    """Validate ``A`` against ``g`` and return it as a frozenset."""
    if isinstance(A, str):
        raise GraphInputError(f"expected a collection of vertices, got the string {A!r}")
    A = frozenset(A)
    unknown = sorted(a for a in A if a not in g)
    if unknown:
        raise GraphInputError(f"unknown vertex {unknown[0]!r}")
    return A


# -- set operations ---------------------------------------------------------


def link(g: PresentationGraph, A: Iterable[str]) -> frozenset:
    """Common neighbours of every vertex of ``A``; the empty set has link ``S``."""
    A = vertex_set(g, A)
    result = frozenset(g.vertices)
    for v in A:
        result &= g.neighbours(v)
    return result


def neighbourhood(g: PresentationGraph, A: Iterable[str]) -> frozenset:
    """Union of the closed neighbourhoods ``link(v) ∪ {v}`` over ``v ∈ A``."""
    A = vertex_set(g, A)
    result = set(A)
    for v in A:
        result |= g.neighbours(v)
    return frozenset(result)


def perp(g: PresentationGraph, X: Iterable[str]) -> frozenset:
    """Vertices joined by a 2-labelled edge to every vertex of ``X``."""
    X = vertex_set(g, X)
    return frozenset(s for s in g.vertices if all(g.label(s, t) == 2 for t in X))


def induced_subgraph(g: PresentationGraph, X: Iterable[str], name=None) -> PresentationGraph:
    X = vertex_set(g, X)
    edges = [(u, v, m) for u, v, m in g.edges() if u in X and v in X]
    return PresentationGraph(X, edges, name=name)


# -- connectivity -----------------------------------------------------------


class UnionFind:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller name wins, which keeps roots deterministic
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self) -> list[frozenset]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), set()).add(x)
        return sorted((frozenset(s) for s in out.values()), key=lambda s: min(s))


class OddPartition:
    """Classes of vertices joined by paths whose labels are all odd."""

    def __init__(self, classes: Iterable[frozenset]):
        self.classes = tuple(sorted((frozenset(c) for c in classes), key=lambda s: min(s)))
        self._index = {v: i for i, c in enumerate(self.classes) for v in c}

    def class_of(self, v) -> frozenset:
        return self.classes[self._index[v]]

    def same(self, u, v) -> bool:
        return self._index[u] == self._index[v]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return f"OddPartition({[sorted(c) for c in self.classes]})"


def odd_components(g: PresentationGraph) -> OddPartition:
    uf = UnionFind(g.vertices)
    for u, v, m in g.edges():
        if m % 2 == 1:
            uf.union(u, v)
    return OddPartition(uf.groups())


def joined_by_odd_path(g: PresentationGraph, A, B):
    """Return ``(a, b)`` with ``a ∈ A``, ``b ∈ B`` in one odd class, else ``None``.

    A length-0 path counts, so overlapping sets are always joined; the pair
    returned is the lexicographically least one.
    """
    A = vertex_set(g, A)
    B = vertex_set(g, B)
    common = A & B
    if common:
        v = min(common)
        return (v, v)
    part = odd_components(g)
    for a in sorted(A):
        cls = part.class_of(a)
        hits = cls & B
        if hits:
            return (a, min(hits))
    return None


def connected_components(g: PresentationGraph) -> list[frozenset]:
    uf = UnionFind(g.vertices)
    for u, v, _ in g.edges():
        uf.union(u, v)
    return uf.groups()


def distances_from(g: PresentationGraph, source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbours(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter(g: PresentationGraph):
    """Graph diameter; ``math.inf`` for disconnected or empty graphs."""
    n = len(g)
    if n == 0:
        return INFINITE
    best = 0
    for v in g.vertices:
        dist = distances_from(g, v)
        if len(dist) < n:
            return INFINITE
        best = max(best, max(dist.values()))
    return best


def non_edges(g: PresentationGraph):
    return [(u, v) for u, v in combinations(g.vertices, 2) if g.label(u, v) is None]

"""Dynkin diagrams, irreducible components and finite-type recognition.

Recognition is exact: each irreducible component's diagram is matched
against the classification of finite Coxeter groups.  Floating point is
kept out of this module; the Gram-form check lives in :mod:`.oracle`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import ContractViolation
from .graph import INFINITE, PresentationGraph, UnionFind, vertex_set


@dataclass(frozen=True)
class CoxeterMatrix:
    """Coxeter matrix restricted to ``vertices``; absent edges carry ``math.inf``."""

    vertices: tuple
    entries: dict

    def m(self, u, v):
        if u == v:
            return 1
        return self.entries[frozenset((u, v))]

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(
            (tuple(sorted(p)), m) for p, m in self.entries.items()))))

    def dynkin_edges(self):
        """Pairs with label other than 2, as ``(u, v, m)`` with ``u < v``."""
        return [(u, v, self.m(u, v)) for u, v in combinations(self.vertices, 2)
                if self.m(u, v) != 2]

    def restrict(self, X) -> CoxeterMatrix:
        verts = tuple(v for v in self.vertices if v in X)
        return CoxeterMatrix(verts, {p: m for p, m in self.entries.items() if p <= set(verts)})

    @classmethod
    def from_labels(cls, vertices, labels: dict) -> CoxeterMatrix:
        """Build from ``{(u, v): m}``; missing pairs default to infinity."""
        verts = tuple(sorted(vertices))
        given = {frozenset(p): m for p, m in labels.items()}
        return cls(verts, {frozenset(p): given.get(frozenset(p), INFINITE)
                           for p in combinations(verts, 2)})


@dataclass(frozen=True)
class FiniteType:
    family: str  # one of A, B, D, E, F, H, I2
    rank: int
    m: int | None = None  # edge label, I2 only

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        """Order of the corresponding finite Coxeter group."""
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "B":
            return 2**n * math.factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.family == "I2":
            return 2 * self.m
        return {"E6": 51840, "E7": 2903040, "E8": 696729600,
                "F4": 1152, "H3": 120, "H4": 14400}[str(self)]


def coxeter_matrix(g: PresentationGraph, X=None) -> CoxeterMatrix:
    X = frozenset(g.vertices) if X is None else vertex_set(g, X)
    verts = tuple(v for v in g.vertices if v in X)
    entries = {}
    for u, v in combinations(verts, 2):
        m = g.label(u, v)
        entries[frozenset((u, v))] = INFINITE if m is None else m
    return CoxeterMatrix(verts, entries)


def irreducible_components(cm: CoxeterMatrix) -> list[frozenset]:
    uf = UnionFind(cm.vertices)
    for u, v, _ in cm.dynkin_edges():
        uf.union(u, v)
    return uf.groups()


# arm lengths (vertices beyond the branch point) of the branched diagrams
_BRANCHED = {(1, 2, 2): ("E", 6), (1, 2, 3): ("E", 7), (1, 2, 4): ("E", 8)}


def recognize_finite_type(cm: CoxeterMatrix) -> FiniteType | None:
    """Identify an irreducible component; ``None`` means the group is infinite."""
    n = len(cm.vertices)
    if n == 0:
        raise ContractViolation("empty Coxeter matrix has no irreducible type")
    if len(irreducible_components(cm)) != 1:
        raise ContractViolation("recognize_finite_type expects an irreducible Coxeter matrix")
    if n == 1:
        return FiniteType("A", 1)

    edges = cm.dynkin_edges()
    if any(m == INFINITE for _, _, m in edges):
        return None
    if n == 2:
        (_, _, m), = edges
        if m == 2:
            raise ContractViolation("rank-2 component with label 2")
        return FiniteType("I2", 2, m)

    # finite irreducible diagrams are trees
    if len(edges) != n - 1:
        return None
    adj = {v: {} for v in cm.vertices}
    for u, v, m in edges:
        adj[u][v] = m
        adj[v][u] = m
    degrees = sorted(len(adj[v]) for v in cm.vertices)
    if degrees[-1] > 3:
        return None

    if degrees[-1] == 3:
        if degrees[-2] == 3 or any(m != 3 for _, _, m in edges):
            return None
        centre = next(v for v in cm.vertices if len(adj[v]) == 3)
        arms = []
        for start in adj[centre]:
            length, prev, cur = 1, centre, start
            while len(adj[cur]) == 2:
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
                length += 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[:2] == (1, 1):
            return FiniteType("D", n)
        if arms in _BRANCHED:
            return FiniteType(*_BRANCHED[arms])
        return None

    # path: read labels from one end to the other
    end = min(v for v in cm.vertices if len(adj[v]) == 1)
    labels, prev, cur = [], None, end
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            break
        labels.append(adj[cur][nxt[0]])
        prev, cur = cur, nxt[0]

    odd_ones = [i for i, m in enumerate(labels) if m != 3]
    if not odd_ones:
        return FiniteType("A", n)
    if len(odd_ones) > 1:
        return None
    i = odd_ones[0]
    m = labels[i]
    at_end = i in (0, len(labels) - 1)
    if m == 4 and at_end:
        return FiniteType("B", n)
    if m == 4 and n == 4:
        return FiniteType("F", 4)
    if m == 5 and at_end and n in (3, 4):
        return FiniteType("H", n)
    return None


@dataclass(frozen=True)
class SphericityPartition:
    components: tuple  # of (frozenset, FiniteType | None)

    @property
    def spherical(self) -> frozenset:
        """Union of the spherical irreducible components."""
        return frozenset().union(*(c for c, t in self.components if t is not None))

    @property
    def aspherical(self) -> frozenset:
        return frozenset().union(*(c for c, t in self.components if t is None))

    @property
    def types(self):
        return [t for _, t in self.components]


def sphericity_partition(g: PresentationGraph, X=None) -> SphericityPartition:
    cm = coxeter_matrix(g, X)
    comps = []
    for comp in irreducible_components(cm):
        comps.append((comp, recognize_finite_type(cm.restrict(comp))))
    return SphericityPartition(tuple(comps))


def is_spherical(g: PresentationGraph, X=None) -> bool:
    """True iff the Coxeter group on ``X`` (default: all vertices) is finite."""
    return all(t is not None for t in sphericity_partition(g, X).types)


def coxeter_type(g: PresentationGraph, X=None) -> str | None:
    """Product decomposition such as ``"I2(4) x A1"``, or ``None`` if infinite."""
    types = sphericity_partition(g, X).types
    if any(t is None for t in types):
        return None
    return " x ".join(str(t) for t in types) if types else "trivial"

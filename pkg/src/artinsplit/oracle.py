"""Brute-force reference answers used to cross-check the main code paths.

Nothing here is clever on purpose.  Sphericity is decided by the Coxeter
bilinear form, conjugacy by enumerating the finite Coxeter group in its
reflection representation, odd paths and splittings by exhaustive search.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .coxeter import CoxeterMatrix
from .errors import ContractViolation, SizeCapExceeded, SplittingError
from .graph import PresentationGraph, vertex_set

MINOR_TOL = 1e-9
HASH_GRID = 1e-6


def gram_matrix(cm: CoxeterMatrix) -> np.ndarray:
    """``B[s, t] = -cos(pi / m_st)``; infinite labels give ``-1``."""
    n = len(cm.vertices)
    B = np.eye(n)
    for i, j in combinations(range(n), 2):
        m = cm.m(cm.vertices[i], cm.vertices[j])
        B[i, j] = B[j, i] = -1.0 if m == math.inf else -math.cos(math.pi / m)
    return B


def gram_positive_definite(cm: CoxeterMatrix, tol: float = MINOR_TOL) -> bool:
    """Sylvester's criterion on the Gram matrix: every leading minor above ``tol``.

    A dihedral block contributes ``sin^2(pi/m)`` to the determinant, so with the
    default tolerance labels above roughly ``1e5`` read as degenerate.
    """
    B = gram_matrix(cm)
    return all(np.linalg.det(B[:k, :k]) > tol for k in range(1, len(B) + 1))


# -- finite Coxeter groups as matrix groups -----------------------------------


def reflection_matrices(cm: CoxeterMatrix) -> list[np.ndarray]:
    """Geometric representation: ``s(v) = v - 2 B(e_s, v) e_s``."""
    B = gram_matrix(cm)
    n = len(B)
    mats = []
    for i in range(n):
        R = np.eye(n)
        R[i, :] -= 2 * B[i, :]
        mats.append(R)
    return mats


def _hash(M: np.ndarray) -> bytes:
    return (np.rint(M / HASH_GRID).astype(np.int64) + 0).tobytes()


@dataclass
class CoxeterElementTable:
    vertices: tuple
    generators: list  # reflection matrix per vertex, same order
    elements: dict  # hash -> matrix

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class CapExceeded:
    cap: int
    reached: int


def enumerate_coxeter(cm: CoxeterMatrix, cap: int = 10**5):
    """Breadth-first closure of the generators; ``CapExceeded`` once ``cap`` is passed."""
    gens = reflection_matrices(cm)
    n = len(cm.vertices)
    identity = np.eye(n)
    elements = {_hash(identity): identity}
    queue = deque([identity])
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w @ s
            key = _hash(ws)
            if key not in elements:
                elements[key] = ws
                if len(elements) > cap:
                    return CapExceeded(cap, len(elements))
                queue.append(ws)
    return CoxeterElementTable(cm.vertices, gens, elements)


def generators_conjugate_bruteforce(table, s, t) -> bool:
    """Whether some group element conjugates the reflection ``s`` to ``t``."""
    if not isinstance(table, CoxeterElementTable):
        raise ContractViolation("conjugacy needs a complete element table")
    rs = table.generators[table.vertices.index(s)]
    target = _hash(table.generators[table.vertices.index(t)])
    for w in table.elements.values():
        # orthogonal w.r.t. the Gram form, so use a genuine inverse
        if _hash(w @ rs @ np.linalg.inv(w)) == target:
            return True
    return False


# -- naive graph searches -------------------------------------------------------


def odd_simple_paths(g: PresentationGraph, a):
    """Every simple path from ``a`` whose edges all carry odd labels."""
    stack = [(a,)]
    while stack:
        path = stack.pop()
        yield path
        for w in sorted(g.neighbours(path[-1])):
            if w not in path and g.label(path[-1], w) % 2 == 1:
                stack.append(path + (w,))


def brute_force_odd_join(g: PresentationGraph, A, B, max_vertices: int = 8) -> bool:
    if len(g) > max_vertices:
        raise SizeCapExceeded(len(g), max_vertices)
    A = vertex_set(g, A)
    B = vertex_set(g, B)
    if A & B:
        return True
    return any(path[-1] in B for a in sorted(A) for path in odd_simple_paths(g, a))


def _subsets(vertices):
    for r in range(len(vertices) + 1):
        yield from (frozenset(c) for c in combinations(vertices, r))


def brute_force_splittings(g: PresentationGraph, max_vertices: int = 6) -> list:
    """All ``(X, Y)`` pairs accepted by ``validate_splitting``, one per unordered pair."""
    from .splittings import validate_splitting

    if len(g) > max_vertices:
        raise SizeCapExceeded(len(g), max_vertices)
    found = set()
    subsets = list(_subsets(g.vertices))
    for X in subsets:
        for Y in subsets:
            try:
                found.add(validate_splitting(g, X, Y))
            except SplittingError:
                pass
    return sorted(found, key=lambda s: s.sort_key())

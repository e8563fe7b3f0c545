"""Independent re-validation of Tits certificates.

Written against the definitions only: sphericity comes from the Gram form,
class memberships from exhaustive subset checks, the splitting and the
odd-path criterion from direct set arithmetic.  It shares no decision code
with :mod:`.splittings`, :mod:`.classes` or :mod:`.coxeter` recognition.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations

from .coxeter import CoxeterMatrix
from .graph import PresentationGraph
from .oracle import gram_positive_definite


def _spherical(g: PresentationGraph, X) -> bool:
    X = sorted(X)
    if not X:
        return True
    labels = {(u, v): g.label(u, v) for u, v in combinations(X, 2) if g.label(u, v)}
    return gram_positive_definite(CoxeterMatrix.from_labels(X, labels))


def _cliques(g: PresentationGraph):
    for r in range(1, len(g) + 1):
        for sub in combinations(g.vertices, r):
            if all(g.label(u, v) for u, v in combinations(sub, 2)):
                yield sub


def _fc(g):
    return all(_spherical(g, c) for c in _cliques(g))


def _two_dimensional(g):
    return not any(_spherical(g, sub) for r in range(3, len(g) + 1)
                   for sub in combinations(g.vertices, r))


def _even(g):
    return all(m % 2 == 0 for _, _, m in g.edges())


def _two_two_free(g):
    return all(sum(1 for w in g.vertices if g.label(v, w) == 2) <= 1 for v in g.vertices)


BASE_CHECKS = {
    "spherical": lambda g: _spherical(g, g.vertices),
    "fc_type": _fc,
    "two_dimensional": _two_dimensional,
    "large_type": lambda g: all(m >= 3 for _, _, m in g.edges()),
}

HYPOTHESIS_CHECKS = {
    "spherical": lambda g: _spherical(g, g.vertices),
    "even_fc": lambda g: _even(g) and _fc(g),
    "two_dim_two_two_free": lambda g: _two_dimensional(g) and _two_two_free(g),
}


def _induced(g: PresentationGraph, X) -> PresentationGraph:
    return PresentationGraph(X, [(u, v, m) for u, v, m in g.edges() if u in X and v in X])


def _closed_nbhd(g, A):
    return set(A) | {w for a in A for w in g.neighbours(a)}


def _odd_reach(g, A):
    seen = set(A)
    queue = deque(A)
    while queue:
        v = queue.popleft()
        for w in g.neighbours(v):
            if w not in seen and g.label(v, w) % 2:
                seen.add(w)
                queue.append(w)
    return seen


def _check_hypothesis(g, ev, where, problems):
    if not ev.certified:
        problems.append(f"{where}: hypothesis not certified")
        return
    if ev.rule == "user_superset":
        emb, sup = ev.embedding, ev.superset
        ok = (sup is not None and set(emb) == set(g.vertices)
              and len(set(emb.values())) == len(emb)
              and all(g.label(u, v) == sup.label(emb[u], emb[v])
                      for u, v in combinations(g.vertices, 2)))
        if not ok:
            problems.append(f"{where}: supergraph embedding is not induced and label-preserving")
        elif not HYPOTHESIS_CHECKS.get(ev.superset_rule, lambda _: False)(sup):
            problems.append(f"{where}: supergraph fails rule {ev.superset_rule}")
        return
    check = HYPOTHESIS_CHECKS.get(ev.rule)
    if check is None or not check(g):
        problems.append(f"{where}: rule {ev.rule} does not hold")


def validate_certificate(cert, path="root") -> list[str]:
    """All problems found in ``cert``; an empty list means it checks out."""
    problems = []
    g = cert.graph
    if cert.status == "base":
        check = BASE_CHECKS.get(cert.base_class)
        if check is None:
            problems.append(f"{path}: unknown base class {cert.base_class}")
        elif not check(g):
            problems.append(f"{path}: graph is not {cert.base_class}")
        return problems
    if cert.status != "split":
        return [f"{path}: unknown node, certificate incomplete"]

    S = set(g.vertices)
    X, Y = set(cert.splitting.x), set(cert.splitting.y)
    Z = X & Y
    if X | Y != S or X == S or Y == S:
        problems.append(f"{path}: sides do not form a non-trivial cover")
    if any(g.label(u, v) for u in X - Z for v in Y - Z):
        problems.append(f"{path}: X∩Y does not separate")
    v = cert.verdict
    if v is None or v.verdict != "acylindrical" or v.constants != (3, 1):
        problems.append(f"{path}: verdict is not (3,1)-acylindrical")
    if len(cert.children) != 2:
        return problems + [f"{path}: split node needs two children"]

    gx, gy = _induced(g, X), _induced(g, Y)
    a = _closed_nbhd(gx, X - Z)
    b = _closed_nbhd(gy, Y - Z)
    if _odd_reach(g, a) & b:
        problems.append(f"{path}: neighbourhoods are joined by an odd path")
    if v is not None:
        _check_hypothesis(gx, v.hypothesis_x, f"{path}.x", problems)
        _check_hypothesis(gy, v.hypothesis_y, f"{path}.y", problems)

    for tag, child, expected in (("x", cert.children[0], gx), ("y", cert.children[1], gy)):
        if child.graph != expected:
            problems.append(f"{path}.{tag}: child graph is not the induced subgraph")
        problems += validate_certificate(child, f"{path}.{tag}")
    return problems

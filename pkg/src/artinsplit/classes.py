"""Class predicates on presentation graphs and PIP/RP hypothesis certification.

Each predicate returns a :class:`Check`, which is truthy when the class
membership holds and otherwise carries a witness that can be verified by
hand (an edge, a vertex, a triangle or a clique).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .coxeter import is_spherical
from .errors import EmbeddingError
from .graph import PresentationGraph


@dataclass(frozen=True)
class Check:
    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def is_right_angled(g: PresentationGraph) -> Check:
    for u, v, m in g.edges():
        if m != 2:
            return Check(False, (u, v, m))
    return Check(True)


def is_even(g: PresentationGraph) -> Check:
    for u, v, m in g.edges():
        if m % 2:
            return Check(False, (u, v, m))
    return Check(True)


def is_large_type(g: PresentationGraph) -> Check:
    for u, v, m in g.edges():
        if m < 3:
            return Check(False, (u, v, m))
    return Check(True)


def is_two_two_free(g: PresentationGraph) -> Check:
    """At most one 2-labelled edge at each vertex; the witness is ``(v, (edge, edge))``."""
    for v in g.vertices:
        twos = sorted(w for w in g.neighbours(v) if g.label(v, w) == 2)
        if len(twos) > 1:
            return Check(False, (v, ((v, twos[0]), (v, twos[1]))))
    return Check(True)


def is_two_dimensional(g: PresentationGraph) -> Check:
    """No spherical triple of vertices.

    A spherical set of size at least 3 contains a spherical triple, since
    subsets of spherical sets are spherical; triples therefore suffice.
    """
    for tri in combinations(g.vertices, 3):
        if is_spherical(g, tri):
            return Check(False, tri)
    return Check(True)


def maximal_cliques(g: PresentationGraph) -> list[tuple]:
    """Bron–Kerbosch with pivoting; cliques returned as sorted tuples, sorted."""
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: (len(P & g.neighbours(u)), u))
        for v in sorted(P - g.neighbours(pivot)):
            nv = g.neighbours(v)
            expand(R | {v}, P & nv, X & nv)
            P = P - {v}
            X = X | {v}

    if len(g):
        expand(frozenset(), frozenset(g.vertices), frozenset())
    return sorted(out)


def is_fc_type(g: PresentationGraph) -> Check:
    """Every clique spherical; checking maximal cliques is enough by heredity."""
    for clique in maximal_cliques(g):
        if not is_spherical(g, clique):
            return Check(False, clique)
    return Check(True)


def is_reducible(g: PresentationGraph) -> bool:
    from .coxeter import coxeter_matrix, irreducible_components

    return len(irreducible_components(coxeter_matrix(g))) > 1


def is_spherical_check(g: PresentationGraph) -> Check:
    if is_spherical(g):
        return Check(True)
    from .coxeter import sphericity_partition

    part = sphericity_partition(g)
    bad = next(c for c, t in part.components if t is None)
    return Check(False, tuple(sorted(bad)))


@dataclass(frozen=True)
class ClassReport:
    right_angled: Check
    even: Check
    large_type: Check
    two_two_free: Check
    two_dimensional: Check
    fc_type: Check
    spherical: Check
    reducible: bool

    FLAGS = ("right_angled", "even", "large_type", "two_two_free",
             "two_dimensional", "fc_type", "spherical")

    def to_json(self):
        out = {}
        for name in self.FLAGS:
            chk = getattr(self, name)
            out[name] = {"holds": chk.holds}
            if not chk.holds:
                out[name]["witness"] = _jsonable(chk.witness)
        out["reducible"] = self.reducible
        return out


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def classify(g: PresentationGraph) -> ClassReport:
    return ClassReport(
        right_angled=is_right_angled(g),
        even=is_even(g),
        large_type=is_large_type(g),
        two_two_free=is_two_two_free(g),
        two_dimensional=is_two_dimensional(g),
        fc_type=is_fc_type(g),
        spherical=is_spherical_check(g),
        reducible=is_reducible(g),
    )


# -- induced embeddings -----------------------------------------------------------


def induced_embedding(g: PresentationGraph, h: PresentationGraph) -> dict | None:
    """Injective map ``g -> h`` preserving labels and non-edges, or ``None``.

    Plain backtracking, most constrained vertex first.
    """
    if len(g) > len(h):
        return None
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def fits(v, w):
        if g.degree(v) > h.degree(w):
            return False
        return all(g.label(v, u) == h.label(w, mapping[u]) for u in mapping)

    def search(i):
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w not in used and fits(v, w):
                mapping[v] = w
                used.add(w)
                if search(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return dict(sorted(mapping.items())) if search(0) else None


def is_induced_embedding(g: PresentationGraph, h: PresentationGraph, mapping: dict) -> bool:
    if set(mapping) != set(g.vertices) or len(set(mapping.values())) != len(mapping):
        return False
    if not all(w in h for w in mapping.values()):
        return False
    return all(g.label(u, v) == h.label(mapping[u], mapping[v])
               for u, v in combinations(g.vertices, 2))


# -- PIP / RP registry -----------------------------------------------------------


@dataclass(frozen=True)
class Rule:
    name: str
    predicate: Callable[[PresentationGraph], bool]
    pip_source: str
    rp_source: str


def _even_fc(g):
    return bool(is_even(g)) and bool(is_fc_type(g))


def _two_dim_two_two_free(g):
    return bool(is_two_dimensional(g)) and bool(is_two_two_free(g))


SPHERICAL = Rule("spherical", lambda g: is_spherical(g),
                 "spherical Artin groups", "spherical Artin groups")
EVEN_FC = Rule("even_fc", _even_fc,
               "Antolín–Foniqi, Theorem 1.1", "Godelle (FC type), Theorem 3.2")
TWO_DIM_TWO_TWO_FREE = Rule("two_dim_two_two_free", _two_dim_two_two_free,
                            "Blufstein, Theorem 1.3", "Godelle, Corollary 4.12")

DEFAULT_RULES = (SPHERICAL, EVEN_FC, TWO_DIM_TWO_TWO_FREE)

# rule name used when certification goes through a user-supplied supergraph
USER_SUPERSET = "user_superset"


@dataclass(frozen=True)
class PipRpEvidence:
    certified: bool
    rule: str | None = None
    superset: PresentationGraph | None = None
    embedding: dict | None = field(default=None, hash=False)
    superset_rule: str | None = None

    @property
    def outcome(self):
        return "certified" if self.certified else "unknown"

    def to_json(self):
        out = {"outcome": self.outcome}
        if self.certified:
            out["rule"] = self.rule
        if self.superset is not None:
            from .io import graph_to_json

            out["superset"] = graph_to_json(self.superset)
            out["embedding"] = dict(sorted(self.embedding.items()))
            out["superset_rule"] = self.superset_rule
        return out

    @classmethod
    def from_json(cls, d):
        superset = None
        if "superset" in d:
            from .io import graph_from_json

            superset = graph_from_json(d["superset"])
        return cls(d["outcome"] == "certified", d.get("rule"), superset,
                   d.get("embedding"), d.get("superset_rule"))


def pip_rp_certificate(g: PresentationGraph, superset: PresentationGraph | None = None,
                       rules=DEFAULT_RULES) -> PipRpEvidence:
    """Certify that ``A_g`` sits as a special subgroup in a group with PIP and RP.

    Without ``superset`` the group itself is tested against ``rules``.  With
    one, ``g`` must embed as an induced labelled subgraph of ``superset``
    (otherwise :class:`EmbeddingError`) and the rules are applied to the
    supergraph.
    """
    if superset is None:
        for rule in rules:
            if rule.predicate(g):
                return PipRpEvidence(True, rule.name)
        return PipRpEvidence(False)

    embedding = induced_embedding(g, superset)
    if embedding is None:
        raise EmbeddingError(
            f"graph is not an induced labelled subgraph of the supplied supergraph"
            f" {superset.name or ''}".rstrip())
    for rule in rules:
        if rule.predicate(superset):
            return PipRpEvidence(True, USER_SUPERSET, superset, embedding, rule.name)
    return PipRpEvidence(False, None, superset, embedding)


def recheck_evidence(g: PresentationGraph, ev: PipRpEvidence, rules=DEFAULT_RULES) -> bool:
    """Re-run the rule named by certified evidence; False if it no longer holds."""
    if not ev.certified:
        return False
    by_name = {r.name: r for r in rules}
    if ev.rule == USER_SUPERSET:
        return (is_induced_embedding(g, ev.superset, ev.embedding)
                and ev.superset_rule in by_name
                and bool(by_name[ev.superset_rule].predicate(ev.superset)))
    return ev.rule in by_name and bool(by_name[ev.rule].predicate(g))

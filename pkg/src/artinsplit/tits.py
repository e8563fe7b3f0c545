"""Recursive certificates for the strong Tits alternative.

A certificate is a tree.  Leaves name a base class of Artin groups known to
satisfy the strong Tits alternative; internal nodes carry an acylindrical
visual splitting, whose two factors are certified recursively.  The
alternative passes to the whole group across an acylindrical splitting iff
it holds for both factors.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from . import classes
from .coxeter import is_spherical
from .errors import SizeCapExceeded
from .graph import PresentationGraph, induced_subgraph
from .io import graph_from_json, graph_to_json
from .splittings import (ACYLINDRICAL, DEFAULT_CAP, AcylindricityVerdict, Criterion,
                         VisualSplitting, enumerate_splittings, theorem_verdict)


@dataclass(frozen=True)
class BaseClass:
    tag: str
    predicate: Callable[[PresentationGraph], bool]
    citation: str


BASE_CLASSES = {
    "spherical": BaseClass(
        "spherical", lambda g: is_spherical(g),
        "linear in characteristic zero (Cohen–Wales, Theorem 1.1), hence Tits (Theorem 1.1)"),
    "fc_type": BaseClass(
        "fc_type", lambda g: bool(classes.is_fc_type(g)),
        "FC-type Artin groups (Martin–Przytycki, Theorem B)"),
    "two_dimensional": BaseClass(
        "two_dimensional", lambda g: bool(classes.is_two_dimensional(g)),
        "2-dimensional Artin groups (Martin, Theorem A)"),
    "large_type": BaseClass(
        "large_type", lambda g: bool(classes.is_large_type(g)),
        "large-type Artin groups (Osajda–Przytycki, Theorem A.2)"),
}

DEFAULT_BASES = tuple(BASE_CLASSES.values())


@dataclass
class Certificate:
    graph: PresentationGraph
    status: str  # "base" | "split" | "unknown"
    base_class: str | None = None
    citation: str | None = None
    splitting: VisualSplitting | None = None
    verdict: AcylindricityVerdict | None = None
    children: tuple = ()
    summary: dict = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return 1 + max(c.depth for c in self.children) if self.children else 0

    @property
    def complete(self) -> bool:
        if self.status == "unknown":
            return False
        return all(c.complete for c in self.children)

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()

    def to_json(self) -> dict:
        out = {"graph": graph_to_json(self.graph), "status": self.status}
        if self.status == "base":
            out["base_class"] = self.base_class
            out["citation"] = self.citation
        elif self.status == "split":
            out["splitting"] = self.splitting.to_json()
            out["verdict"] = self.verdict.to_json()
            out["children"] = [c.to_json() for c in self.children]
        else:
            out["summary"] = self.summary
        return out


def certify(g: PresentationGraph, registry=DEFAULT_BASES, max_depth: int = 6,
            memoize: bool = True, rules=classes.DEFAULT_RULES,
            cap: int = DEFAULT_CAP) -> Certificate:
    """Depth-first search for a complete certificate.

    Base classes are tried first, in registry order.  Then vertex-pair
    splittings, then every other visual splitting (subject to ``cap``),
    keeping those whose verdict is acylindrical and recursing into both
    factors.  Failure yields an ``unknown`` node summarising the search; it
    never claims the alternative fails.
    """
    memo: dict = {}

    def search(h: PresentationGraph, budget: int) -> Certificate:
        key = (h.key, budget)
        if memoize and key in memo:
            return memo[key]
        result = _search(h, budget)
        if memoize:
            memo[key] = result
        return result

    def _search(h, budget):
        for base in registry:
            if base.predicate(h):
                return Certificate(h, "base", base.tag, base.citation)
        summary = {"explored": 0, "acylindrical": 0, "depth_limited": False, "refused": None}
        if budget == 0:
            summary["depth_limited"] = True
            return Certificate(h, "unknown", summary=summary)

        candidates = list(enumerate_splittings(h, "vertex_pairs"))
        try:
            seen = set(candidates)
            candidates += [s for s in enumerate_splittings(h, "all", cap) if s not in seen]
        except SizeCapExceeded as exc:
            summary["refused"] = str(exc)

        for s in candidates:
            summary["explored"] += 1
            verdict = theorem_verdict(h, s, rules=rules)
            if verdict.verdict != ACYLINDRICAL:
                continue
            summary["acylindrical"] += 1
            left = search(induced_subgraph(h, s.x), budget - 1)
            if not left.complete:
                summary["depth_limited"] |= left.summary.get("depth_limited", False)
                continue
            right = search(induced_subgraph(h, s.y), budget - 1)
            if not right.complete:
                summary["depth_limited"] |= right.summary.get("depth_limited", False)
                continue
            return Certificate(h, "split", splitting=s, verdict=verdict,
                               children=(left, right))
        return Certificate(h, "unknown", summary=summary)

    cert = search(g, max_depth)
    if cert.graph.name != g.name:
        cert = Certificate(g, cert.status, cert.base_class, cert.citation, cert.splitting,
                           cert.verdict, cert.children, cert.summary)
    return cert


# -- rendering ------------------------------------------------------------------------


def render_certificate(cert: Certificate, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(cert.to_json(), indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    head = "complete" if cert.complete else "incomplete"
    name = cert.graph.name or "graph"
    lines.append(f"strong Tits alternative certificate for {name}: {head}, depth {cert.depth}")
    _render_text(cert, lines, "")
    return "\n".join(lines) + "\n"


def _verts(c):
    return "{" + ",".join(c.graph.vertices) + "}"


def _render_text(c: Certificate, lines, indent):
    if c.status == "base":
        lines.append(f"{indent}{_verts(c)}: base class {c.base_class} [{c.citation}]")
    elif c.status == "split":
        v = c.verdict
        lines.append(
            f"{indent}{_verts(c)}: split {c.splitting}, Z={{{','.join(sorted(c.splitting.z))}}}"
            f" ({v.constants[0]},{v.constants[1]})-acylindrical;"
            f" PIP/RP via {v.hypothesis_x.rule} / {v.hypothesis_y.rule}")
        for child in c.children:
            _render_text(child, lines, indent + "  ")
    else:
        s = c.summary
        extra = []
        if s.get("depth_limited"):
            extra.append("depth limit reached")
        if s.get("refused"):
            extra.append(s["refused"])
        tail = f" ({'; '.join(extra)})" if extra else ""
        lines.append(f"{indent}{_verts(c)}: unknown after exploring "
                     f"{s.get('explored', 0)} splittings{tail}")


def certificate_from_json(d: dict) -> Certificate:
    g = graph_from_json(d["graph"])
    status = d["status"]
    if status == "base":
        return Certificate(g, "base", d["base_class"], d["citation"])
    if status == "split":
        sp = d["splitting"]
        s = VisualSplitting(frozenset(sp["x"]), frozenset(sp["y"]))
        vd = d["verdict"]
        crit = Criterion(vd["criterion"] == "holds", frozenset(vd["neighbourhood_x"]),
                         frozenset(vd["neighbourhood_y"]))
        verdict = AcylindricityVerdict(
            crit, classes.PipRpEvidence.from_json(vd["hypothesis_x"]),
            classes.PipRpEvidence.from_json(vd["hypothesis_y"]), vd["verdict"])
        children = tuple(certificate_from_json(c) for c in d["children"])
        return Certificate(g, "split", splitting=s, verdict=verdict, children=children)
    return Certificate(g, "unknown", summary=d.get("summary", {}))


def parse_certificate(text: str) -> Certificate:
    return certificate_from_json(json.loads(text))

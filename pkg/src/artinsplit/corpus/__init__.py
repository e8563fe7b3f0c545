"""Bundled example graphs and the standard families K_n, O_n, P_n, C_n."""
from __future__ import annotations

import re
import string
from importlib import resources
from itertools import combinations

from ..errors import GraphInputError
from ..graph import PresentationGraph
from ..io import parse_text

NAMES = ("example3_4", "figure2_as_printed", "figure3_union", "figure3_x", "figure3_y")


def load_corpus(name: str) -> PresentationGraph:
    if name not in NAMES:
        raise GraphInputError(f"no bundled graph named {name!r}; choose from {', '.join(NAMES)}")
    text = resources.files(__name__).joinpath(f"{name}.txt").read_text(encoding="utf-8")
    return parse_text(text, name=name).graph


def vertex_names(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    width = len(str(n - 1))
    return [f"v{i:0{width}d}" for i in range(n)]


def _labels(labels, count):
    if isinstance(labels, int):
        return [labels] * count
    labels = list(labels)
    if len(labels) != count:
        raise GraphInputError(f"expected {count} labels, got {len(labels)}")
    return labels


def complete_graph(n: int, labels=2) -> PresentationGraph:
    vs = vertex_names(n)
    pairs = list(combinations(vs, 2))
    return PresentationGraph(vs, [(u, v, m) for (u, v), m in zip(pairs, _labels(labels, len(pairs)))],
                             name=f"K{n}")


def discrete_graph(n: int) -> PresentationGraph:
    return PresentationGraph(vertex_names(n), name=f"O{n}")


def path_graph(n: int, labels=2) -> PresentationGraph:
    vs = vertex_names(n)
    ms = _labels(labels, n - 1)
    return PresentationGraph(vs, [(vs[i], vs[i + 1], ms[i]) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int, labels=2) -> PresentationGraph:
    if n < 3:
        raise GraphInputError("cycles need at least 3 vertices")
    vs = vertex_names(n)
    ms = _labels(labels, n)
    return PresentationGraph(vs, [(vs[i], vs[(i + 1) % n], ms[i]) for i in range(n)], name=f"C{n}")


_FAMILY = re.compile(r"^([KOPC])(\d+)(?::([\d,]+))?$")


def family(spec: str) -> PresentationGraph:
    """Build a family member from a string like ``K4``, ``P4:2,3,2`` or ``C5:4``."""
    match = _FAMILY.match(spec)
    if not match:
        raise GraphInputError(f"bad family spec {spec!r}; expected e.g. K4, O3, P4:2,3,2, C5:4")
    kind, n, labels = match.group(1), int(match.group(2)), match.group(3)
    ms = 2 if labels is None else [int(x) for x in labels.split(",")]
    if isinstance(ms, list) and len(ms) == 1:
        ms = ms[0]
    if kind == "O":
        if labels:
            raise GraphInputError("discrete graphs have no labels")
        return discrete_graph(n)
    return {"K": complete_graph, "P": path_graph, "C": cycle_graph}[kind](n, ms)

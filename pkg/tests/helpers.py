"""Graph generators shared by the test modules."""
import random
import string
from itertools import combinations, product

from hypothesis import strategies as st

from artinsplit.graph import PresentationGraph

NAMES = string.ascii_lowercase

# (criterion id, passed, detail) lines collected by the acceptance module
ACCEPTANCE = []


def record_acceptance(ident, passed, detail=""):
    ACCEPTANCE.append((ident, passed, detail))


def graph_from_choices(n, choices):
    """``choices[i]`` is the label (or ``None``) of the i-th pair in combination order."""
    vs = NAMES[:n]
    edges = [(u, v, m) for (u, v), m in zip(combinations(vs, 2), choices) if m is not None]
    return PresentationGraph(vs, edges)


def all_graphs(n, options):
    """Every labelled graph on ``n`` vertices, each pair taking a value from ``options``."""
    pairs = n * (n - 1) // 2
    for choices in product(options, repeat=pairs):
        yield graph_from_choices(n, choices)


def random_graph(rng: random.Random, n, labels, p_edge=0.5):
    choices = [rng.choice(labels) if rng.random() < p_edge else None
               for _ in range(n * (n - 1) // 2)]
    return graph_from_choices(n, choices)


def random_subset(rng, g, p=0.4):
    return frozenset(v for v in g.vertices if rng.random() < p)


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, labels=(2, 3, 4, 5, 6)):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = n * (n - 1) // 2
    choices = draw(st.lists(st.one_of(st.none(), st.sampled_from(labels)),
                            min_size=pairs, max_size=pairs))
    return graph_from_choices(n, choices)


@st.composite
def graphs_with_subsets(draw, count=2, **kw):
    g = draw(graphs(**kw))
    subsets = [frozenset(draw(st.sets(st.sampled_from(g.vertices)))) for _ in range(count)]
    return (g, *subsets)


def relabel(g, perm):
    """Copy of ``g`` with vertices renamed through the dict ``perm``."""
    return PresentationGraph([perm[v] for v in g.vertices],
                             [(perm[u], perm[v], m) for u, v, m in g.edges()])


def tri(ab, bc, ac):
    return PresentationGraph("abc", [("a", "b", ab), ("b", "c", bc), ("a", "c", ac)])

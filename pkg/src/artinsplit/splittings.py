"""Visual splittings: validation, enumeration, the odd-path criterion, and
the explicit centraliser word that defeats acylindricity when it fails.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from . import classes
from .errors import (ContractViolation, CoverError, GraphInputError, InvariantError,
                     SeparationError, SizeCapExceeded, TrivialSplittingError)
from .graph import (PresentationGraph, connected_components, diameter, induced_subgraph,
                    neighbourhood, odd_components, vertex_set)

DEFAULT_CAP = 16

# acylindricity constants (k, C) delivered whenever the criterion holds
K_PATH = 3
C_STAB = 1


def _sorted(s):
    return tuple(sorted(s))


@dataclass(frozen=True)
class VisualSplitting:
    """Unordered pair of sides; ``x`` is the lexicographically smaller one."""

    x: frozenset
    y: frozenset

    def __post_init__(self):
        if _sorted(self.y) < _sorted(self.x):
            x, y = self.y, self.x
            object.__setattr__(self, "x", x)
            object.__setattr__(self, "y", y)

    @property
    def z(self) -> frozenset:
        return self.x & self.y

    def swapped(self):
        """Same splitting, sides in the opposite role (for the X/Y-sensitive criterion)."""
        return _Oriented(self.y, self.x)

    def sort_key(self):
        return (len(self.z), _sorted(self.z), _sorted(self.x), _sorted(self.y))

    def to_json(self):
        return {"x": list(_sorted(self.x)), "y": list(_sorted(self.y)),
                "z": list(_sorted(self.z))}

    def __str__(self):
        return f"X={{{','.join(_sorted(self.x))}}} Y={{{','.join(_sorted(self.y))}}}"


@dataclass(frozen=True)
class _Oriented:
    x: frozenset
    y: frozenset

    @property
    def z(self):
        return self.x & self.y


def validate_splitting(g: PresentationGraph, X, Y) -> VisualSplitting:
    X = vertex_set(g, X)
    Y = vertex_set(g, Y)
    S = frozenset(g.vertices)
    if X | Y != S:
        raise CoverError(S - (X | Y))
    for name, side in (("X", X), ("Y", Y)):
        if side == S:
            raise TrivialSplittingError(name)
    Z = X & Y
    x_only, y_only = X - Z, Y - Z
    for u in sorted(x_only):
        for v in sorted(g.neighbours(u) & y_only):
            raise SeparationError((u, v))
    return VisualSplitting(X, Y)


def enumerate_splittings(g: PresentationGraph, mode: str = "all",
                         cap: int = DEFAULT_CAP) -> list[VisualSplitting]:
    """All non-trivial visual splittings, or only those cutting off one vertex pair.

    ``mode="all"`` walks every proper subset ``Z`` (by size, then
    lexicographically) and every way of distributing the components of
    ``S - Z`` over two non-empty sides.  Graphs above ``cap`` vertices are
    refused rather than truncated.
    """
    if mode in ("vertex_pairs", "pairs"):
        S = frozenset(g.vertices)
        return [VisualSplitting(S - {b}, S - {a})
                for a, b in combinations(g.vertices, 2) if g.label(a, b) is None]
    if mode != "all":
        raise GraphInputError(f"unknown enumeration mode {mode!r}")
    if len(g) > cap:
        raise SizeCapExceeded(len(g), cap)

    out = []
    seen = set()
    verts = g.vertices
    for size in range(len(verts) - 1):
        for Z in combinations(verts, size):
            Z = frozenset(Z)
            rest = induced_subgraph(g, frozenset(verts) - Z)
            comps = connected_components(rest)
            k = len(comps)
            if k < 2:
                continue
            # first component always on side one: each bipartition once
            for mask in range(2 ** (k - 1) - 1):
                side1 = set(comps[0])
                side2 = set()
                for i in range(1, k):
                    (side1 if mask >> (i - 1) & 1 else side2).update(comps[i])
                s = VisualSplitting(Z | side1, Z | side2)
                if s not in seen:
                    seen.add(s)
                    out.append(s)
    return out


# -- the criterion ------------------------------------------------------------------


@dataclass(frozen=True)
class Criterion:
    """Outcome of the odd-path test for one oriented splitting.

    ``a_set``/``b_set`` are the neighbourhoods of ``X - Z`` in ``Γ_X`` and of
    ``Y - Z`` in ``Γ_Y``.  On failure ``path`` is an odd-labelled path inside
    ``Z`` from ``witness[0] ∈ a_set`` to ``witness[1] ∈ b_set``.
    """

    holds: bool
    a_set: frozenset
    b_set: frozenset
    witness: tuple | None = None
    path: tuple = ()

    def to_json(self):
        out = {"criterion": "holds" if self.holds else "fails",
               "neighbourhood_x": list(_sorted(self.a_set)),
               "neighbourhood_y": list(_sorted(self.b_set))}
        if not self.holds:
            out["witness"] = list(self.witness)
            out["path"] = list(self.path)
        return out


def side_neighbourhoods(g: PresentationGraph, s) -> tuple[frozenset, frozenset]:
    Z = s.z
    a = neighbourhood(induced_subgraph(g, s.x), s.x - Z)
    b = neighbourhood(induced_subgraph(g, s.y), s.y - Z)
    # Z separates, so the ambient neighbourhoods must agree
    if a != neighbourhood(g, s.x - Z) or b != neighbourhood(g, s.y - Z):
        raise InvariantError(f"side neighbourhood depends on the ambient graph for {s}")
    return a, b


def odd_path_within(g: PresentationGraph, allowed, sources, targets):
    """Shortest odd-labelled path inside ``allowed`` from ``sources`` to ``targets``.

    Breadth-first, sources and neighbours visited in lexicographic order.
    """
    sources = sorted(sources & allowed)
    for v in sources:
        if v in targets:
            return (v,)
    parent = {v: None for v in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbours(v)):
            if w in allowed and w not in parent and g.label(v, w) % 2 == 1:
                parent[w] = v
                if w in targets:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                queue.append(w)
    return None


def criterion(g: PresentationGraph, s) -> Criterion:
    a, b = side_neighbourhoods(g, s)
    part = odd_components(g)
    joined = any(part.same(u, v) for u in a for v in b)
    if not joined:
        return Criterion(True, a, b)
    # any odd path from a to b can be shortened to one lying in Z
    path = odd_path_within(g, s.z, a, b)
    if path is None:
        raise InvariantError(f"odd join for {s} has no sub-path inside Z")
    return Criterion(False, a, b, (path[0], path[-1]), path)


# -- witness words -------------------------------------------------------------------


def alternating(u: str, v: str, m: int) -> tuple:
    """The positive word ``u v u ...`` of length ``m``."""
    return tuple(u if i % 2 == 0 else v for i in range(m))


def delta(u: str, v: str, m: int) -> tuple:
    """Garside element of the dihedral group on ``u, v``, spelled from ``u``."""
    return alternating(u, v, m)


def conjugation_identity_holds(u: str, v: str, m: int) -> bool:
    """Literal check of ``Δ u = v Δ``.

    The left ``Δ`` is spelled from ``v`` and the right one from ``u``; the
    two spellings are equal by the single Artin relation, and after that
    the sides must agree letter by letter.  True exactly when ``m`` is odd.
    """
    return delta(v, u, m) + (u,) == (v,) + delta(u, v, m)


def centre_word(x: str, x2: str, m: int) -> tuple:
    """Word centralising ``x2`` inside the dihedral group on ``{x, x2}``, outside ``<x2>``."""
    if m == 2:
        return (x,)
    if m % 2 == 0:
        return delta(x, x2, m)
    return delta(x, x2, m) * 2


Letter = tuple  # (generator, +1 | -1)


def _positive(word):
    return tuple((a, 1) for a in word)


def _inverse(letters):
    return tuple((a, -e) for a, e in reversed(letters))


def format_letters(letters) -> str:
    return " ".join(a if e == 1 else f"{a}^-1" for a, e in letters)


@dataclass(frozen=True)
class WitnessWord:
    """``g^-1 · z_{y,y'} · g · z_{x,x'}``, kept factor by factor."""

    x: str
    x_prime: str
    y: str
    y_prime: str
    path: tuple
    deltas: tuple  # (u, v, m, word) per odd edge along the path
    factors: tuple = field(default=())  # ((tag, letters), ...)

    @property
    def letters(self):
        return tuple(l for _, part in self.factors for l in part)

    def factor(self, tag):
        return dict(self.factors)[tag]

    def __str__(self):
        return format_letters(self.letters)

    def to_json(self):
        return {
            "x": self.x, "x_prime": self.x_prime, "y": self.y, "y_prime": self.y_prime,
            "path": list(self.path),
            "factors": [{"tag": t, "word": format_letters(w)} for t, w in self.factors],
            "word": str(self),
        }


def witness_word(g: PresentationGraph, s, crit: Criterion) -> WitnessWord:
    if crit.holds:
        raise ContractViolation("no witness word exists when the criterion holds")
    x2, y2 = crit.witness
    path = crit.path
    x = min(v for v in g.neighbours(x2) if v in s.x - s.z)
    y = min(v for v in g.neighbours(y2) if v in s.y - s.z)

    deltas = []
    for u, v in zip(path, path[1:]):
        m = g.label(u, v)
        if not conjugation_identity_holds(u, v, m):
            raise InvariantError(f"Δ{u}{v} does not conjugate {u} to {v} (m={m})")
        deltas.append((u, v, m, delta(u, v, m)))
    # g conjugates x' to y': the first edge's Δ acts first, so it sits rightmost
    g_word = tuple(l for *_, w in reversed(deltas) for l in _positive(w))

    factors = (
        ("g^-1", _inverse(g_word)),
        ("z_y", _positive(centre_word(y, y2, g.label(y, y2)))),
        ("g", g_word),
        ("z_x", _positive(centre_word(x, x2, g.label(x, x2)))),
    )
    word = WitnessWord(x, x2, y, y2, tuple(path), tuple(deltas), factors)
    problems = check_witness_word(g, s, word)
    if problems:
        raise InvariantError("; ".join(problems))
    return word


def check_witness_word(g: PresentationGraph, s, w: WitnessWord) -> list[str]:
    """Structural re-check of a witness word; returns a list of problems."""
    problems = []
    Z = s.z
    if w.x not in s.x - Z or w.y not in s.y - Z:
        problems.append("x or y is not on its own side of the splitting")
    if g.label(w.x, w.x_prime) is None or g.label(w.y, w.y_prime) is None:
        problems.append("x' (resp. y') is not adjacent to x (resp. y)")
    if not w.path or w.path[0] != w.x_prime or w.path[-1] != w.y_prime:
        problems.append("path does not run from x' to y'")
    if any(p not in Z for p in w.path):
        problems.append("path leaves Z")
    expected_g = ()
    for i, (u, v) in enumerate(zip(w.path, w.path[1:])):
        m = g.label(u, v)
        if m is None or m % 2 == 0:
            problems.append(f"path edge {u}–{v} is not odd-labelled")
            continue
        if not conjugation_identity_holds(u, v, m):
            problems.append(f"Δ{u}{v} u != v Δ{u}{v} as strings")
        if i >= len(w.deltas) or w.deltas[i][3] != alternating(u, v, m):
            problems.append(f"recorded Δ for {u}–{v} is not the alternating word")
        expected_g = _positive(alternating(u, v, m)) + expected_g
    factors = dict(w.factors)
    if factors.get("g") != expected_g:
        problems.append("g is not the product of the Δ's along the path")
    if factors.get("g^-1") != _inverse(expected_g):
        problems.append("g^-1 is not the inverse of g")
    for tag, a, b in (("z_x", w.x, w.x_prime), ("z_y", w.y, w.y_prime)):
        m = g.label(a, b)
        if m is not None and factors.get(tag) != _positive(centre_word(a, b, m)):
            problems.append(f"{tag} is not the centre generator for m={m}")
    if [t for t, _ in w.factors] != ["g^-1", "z_y", "g", "z_x"]:
        problems.append("factors are not in the order g^-1 z_y g z_x")
    return problems


# -- verdicts ---------------------------------------------------------------------------

ACYLINDRICAL = "acylindrical"
NOT_ACYLINDRICAL = "not_acylindrical"
HYPOTHESIS_UNKNOWN = "criterion_holds_hypothesis_unknown"


@dataclass(frozen=True)
class AcylindricityVerdict:
    criterion: Criterion
    hypothesis_x: classes.PipRpEvidence
    hypothesis_y: classes.PipRpEvidence
    verdict: str
    witness_word: WitnessWord | None = None

    @property
    def acylindrical(self):
        return self.verdict == ACYLINDRICAL

    @property
    def constants(self):
        return (K_PATH, C_STAB) if self.acylindrical else None

    def to_json(self):
        out = {"verdict": self.verdict, **self.criterion.to_json()}
        if self.acylindrical:
            out["k"], out["c"] = K_PATH, C_STAB
        out["hypothesis_x"] = self.hypothesis_x.to_json()
        out["hypothesis_y"] = self.hypothesis_y.to_json()
        if self.witness_word is not None:
            out["witness_word"] = self.witness_word.to_json()
        return out


def theorem_verdict(g: PresentationGraph, s, x_superset=None, y_superset=None,
                    rules=classes.DEFAULT_RULES) -> AcylindricityVerdict:
    """Combine the criterion with PIP/RP certification of both sides.

    A failing criterion is conclusive on its own.  A holding one gives
    ``(3, 1)``-acylindricity only when both sides are certified; otherwise
    the verdict says so instead of guessing.
    """
    crit = criterion(g, s)
    hx = classes.pip_rp_certificate(induced_subgraph(g, s.x), x_superset, rules)
    hy = classes.pip_rp_certificate(induced_subgraph(g, s.y), y_superset, rules)
    if not crit.holds:
        return AcylindricityVerdict(crit, hx, hy, NOT_ACYLINDRICAL, witness_word(g, s, crit))
    if hx.certified and hy.certified:
        return AcylindricityVerdict(crit, hx, hy, ACYLINDRICAL)
    return AcylindricityVerdict(crit, hx, hy, HYPOTHESIS_UNKNOWN)


# -- whole-graph criteria --------------------------------------------------------------


def pair_criterion(g: PresentationGraph) -> list[tuple[str, str]]:
    """Vertex pairs whose neighbourhoods no odd path joins."""
    part = odd_components(g)
    nbhd = {v: neighbourhood(g, {v}) for v in g.vertices}
    found = []
    for a, b in combinations(g.vertices, 2):
        if any(part.same(u, w) for u in nbhd[a] for w in nbhd[b]):
            continue
        S = frozenset(g.vertices)
        s = validate_splitting(g, S - {b}, S - {a})
        if not criterion(g, s).holds:
            raise InvariantError(f"pair ({a}, {b}) passes but its splitting fails the criterion")
        found.append((a, b))
    return found


def even_diameter_criterion(g: PresentationGraph) -> bool:
    chk = classes.is_even(g)
    if not chk:
        raise GraphInputError(f"graph is not even: edge {chk.witness[0]}–{chk.witness[1]} "
                              f"has label {chk.witness[2]}")
    return diameter(g) >= 3

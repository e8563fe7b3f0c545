"""Command-line interface.

Exit status: 0 when an answer was computed (whatever the answer is), 1 for
bad input, 2 when an internal consistency check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classes, corpus, io
from .errors import (ContractViolation, CoverError, EmbeddingError, GraphInputError,
                     InvariantError, SeparationError, SizeCapExceeded, SplittingError,
                     TrivialSplittingError)
from .graph import odd_components
from .splittings import (enumerate_splittings, pair_criterion, theorem_verdict,
                         validate_splitting)
from .tits import BASE_CLASSES, certify, render_certificate


def load_graph(ref: str):
    """A file path, a bundled corpus name, or a family spec such as ``P4:2,3,2``."""
    if Path(ref).exists():
        return io.load(ref).graph
    if ref in corpus.NAMES:
        return corpus.load_corpus(ref)
    if ref.startswith("family:"):
        return corpus.family(ref[len("family:"):])
    try:
        return corpus.family(ref)
    except GraphInputError:
        raise GraphInputError(
            f"{ref!r} is neither a file, a bundled graph ({', '.join(corpus.NAMES)})"
            " nor a family spec like K4 or P4:2,3") from None


def parse_vertex_list(text: str) -> frozenset:
    text = text.strip().strip("{}")
    return frozenset(t for t in (p.strip() for p in text.replace(" ", ",").split(",")) if t)


def _dump(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _fmt_set(s):
    return "{" + ",".join(sorted(s)) + "}"


def _verdict_lines(v):
    crit = v.criterion
    out = [f"  N_X(X∖Z) = {_fmt_set(crit.a_set)}   N_Y(Y∖Z) = {_fmt_set(crit.b_set)}"]
    if crit.holds:
        out.append("  criterion: holds (no odd-labelled path joins the neighbourhoods)")
    else:
        out.append(f"  criterion: fails, witness {crit.witness}, odd path {'-'.join(crit.path)}")
    out.append(f"  PIP/RP for Γ_X: {v.hypothesis_x.outcome}"
               + (f" ({v.hypothesis_x.rule})" if v.hypothesis_x.certified else ""))
    out.append(f"  PIP/RP for Γ_Y: {v.hypothesis_y.outcome}"
               + (f" ({v.hypothesis_y.rule})" if v.hypothesis_y.certified else ""))
    if v.acylindrical:
        out.append(f"  verdict: acylindrical, (k, C) = {v.constants}")
    elif v.witness_word is not None:
        out.append(f"  verdict: not acylindrical; centralising word {v.witness_word}")
    else:
        out.append("  verdict: criterion holds, hypotheses not certified")
    return out


def cmd_classify(args):
    g = load_graph(args.graph)
    report = classes.classify(g)
    if args.json:
        _dump({"graph": io.graph_to_json(g), "classes": report.to_json()})
        return
    for flag in report.FLAGS:
        chk = getattr(report, flag)
        tail = "" if chk.holds else f"   witness: {chk.witness}"
        print(f"{flag:16s} {'yes' if chk.holds else 'no'}{tail}")
    print(f"{'reducible':16s} {'yes' if report.reducible else 'no'}")


def cmd_splittings(args):
    g = load_graph(args.graph)
    mode = "vertex_pairs" if args.mode == "pairs" else "all"
    results = [(s, theorem_verdict(g, s)) for s in enumerate_splittings(g, mode, args.cap)]
    pairs = pair_criterion(g)
    if args.json:
        _dump({
            "graph": io.graph_to_json(g),
            "mode": args.mode,
            "splittings": [{"splitting": s.to_json(), "verdict": v.to_json()} for s, v in results],
            "pair_criterion": [list(p) for p in pairs],
        })
        return
    print(f"{len(results)} visual splitting(s)")
    for s, v in results:
        print(f"{s}  Z={_fmt_set(s.z)}")
        print("\n".join(_verdict_lines(v)))
    print("vertex pairs with odd-separated neighbourhoods: "
          + (", ".join(f"({a},{b})" for a, b in pairs) or "none"))


def _violation(exc):
    if isinstance(exc, SeparationError):
        return {"violation": "separation", "witness": list(exc.edge)}
    if isinstance(exc, CoverError):
        return {"violation": "cover", "witness": list(exc.missing)}
    if isinstance(exc, TrivialSplittingError):
        return {"violation": "trivial", "witness": exc.side}
    return {"violation": "other"}


def cmd_check(args):
    g = load_graph(args.graph)
    X, Y = parse_vertex_list(args.x), parse_vertex_list(args.y)
    sx = io.load(args.x_superset).graph if args.x_superset else None
    sy = io.load(args.y_superset).graph if args.y_superset else None
    try:
        s = validate_splitting(g, X, Y)
    except SplittingError as exc:
        if args.json:
            _dump({"valid": False, "message": str(exc), **_violation(exc)})
        else:
            print(f"not a visual splitting: {exc}")
        return
    if s.x != X:  # canonical order swapped the sides
        sx, sy = sy, sx
    v = theorem_verdict(g, s, sx, sy)
    if args.json:
        _dump({"valid": True, "splitting": s.to_json(), "verdict": v.to_json()})
        return
    print(f"{s}  Z={_fmt_set(s.z)}")
    print("\n".join(_verdict_lines(v)))


def cmd_certify(args):
    g = load_graph(args.graph)
    if args.bases:
        tags = [t.strip() for t in args.bases.split(",") if t.strip()]
        unknown = [t for t in tags if t not in BASE_CLASSES]
        if unknown:
            raise GraphInputError(f"unknown base class {unknown[0]!r}; "
                                  f"choose from {', '.join(BASE_CLASSES)}")
        registry = tuple(BASE_CLASSES[t] for t in tags)
    else:
        registry = tuple(BASE_CLASSES.values())
    cert = certify(g, registry, max_depth=args.max_depth, memoize=not args.no_memo,
                   cap=args.cap)
    sys.stdout.write(render_certificate(cert, "json" if args.json else "text"))


def cmd_dot(args):
    g = load_graph(args.graph)
    sys.stdout.write(io.to_dot(g, highlight_odd=args.highlight_odd))


def cmd_odd(args):
    g = load_graph(args.graph)
    for cls in odd_components(g):
        print(_fmt_set(cls))


def build_parser():
    p = argparse.ArgumentParser(
        prog="artinsplit",
        description="Visual splittings of Artin groups and strong Tits alternative certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph file (.txt or .json), bundled name, or family "
                                      "spec such as K4, O3, P4:2,3,2")
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "report class memberships with witnesses")
    sp.add_argument("--json", action="store_true")

    sp = add("splittings", cmd_splittings, "enumerate visual splittings with verdicts")
    sp.add_argument("--mode", choices=("all", "pairs"), default="all")
    sp.add_argument("--cap", type=int, default=16, help="refuse mode=all above this many vertices")
    sp.add_argument("--json", action="store_true")

    sp = add("check", cmd_check, "verdict for one splitting")
    sp.add_argument("--x", required=True, help="comma-separated vertex list")
    sp.add_argument("--y", required=True, help="comma-separated vertex list")
    sp.add_argument("--x-superset", help="graph file containing Γ_X as an induced subgraph")
    sp.add_argument("--y-superset", help="graph file containing Γ_Y as an induced subgraph")
    sp.add_argument("--json", action="store_true")

    sp = add("certify-tits", cmd_certify, "search for a strong Tits alternative certificate")
    sp.add_argument("--bases", help=f"comma-separated base classes ({', '.join(BASE_CLASSES)})")
    sp.add_argument("--max-depth", type=int, default=6)
    sp.add_argument("--cap", type=int, default=16)
    sp.add_argument("--no-memo", action="store_true", help=argparse.SUPPRESS)
    sp.add_argument("--json", action="store_true")

    sp = add("export-dot", cmd_dot, "write the graph in Graphviz DOT")
    sp.add_argument("--highlight-odd", action="store_true")

    add("odd-classes", cmd_odd, "list the classes of vertices joined by odd-labelled paths")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (GraphInputError, EmbeddingError, SizeCapExceeded, SplittingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InvariantError, ContractViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

import json
import os
from pathlib import Path

import pytest
from hypothesis import given

from artinsplit import cli, io
from artinsplit.corpus import NAMES, family, load_corpus
from artinsplit.errors import GraphInputError, InvariantError
from artinsplit.graph import PresentationGraph
from artinsplit.tits import parse_certificate, render_certificate

from helpers import graphs


class TestParseText:
    def test_basic(self):
        g = io.parse_text("# comment\nv z\na b 3  # trailing\n\nb c 2\n").graph
        assert g.vertices == ("a", "b", "c", "z")
        assert g.label("a", "b") == 3 and g.label("a", "c") is None

    def test_union_graph(self, fig3):
        assert len(fig3) == 8 and len(fig3.edges()) == 12

    @pytest.mark.parametrize("text,line,fragment", [
        ("a b 3\nb c 1\n", 2, "label must be ≥ 2"),
        ("a b 3\nb c x\n", 2, "not an integer"),
        ("a a 3\n", 1, "self-loop"),
        ("a b 3\n# c\nb a 4\n", 3, "duplicate edge"),
        ("a b\n", 1, "expected"),
        ("v\n", 1, "expected"),
    ])
    def test_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(GraphInputError) as exc:
            io.parse_text(text)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}: ")
        assert fragment in str(exc.value)

    def test_source_lines(self):
        doc = io.parse_text("v a\n\nb c 5\n")
        assert doc.lines["a"] == 1 and doc.lines[frozenset("bc")] == 3


class TestParseJson:
    def test_round_trip(self, fig3):
        assert io.parse_json(io.render_json(fig3)).graph == fig3

    def test_name(self, fig3):
        assert io.parse(io.render_json(fig3)).graph.name == "figure3_union"

    @pytest.mark.parametrize("text", [
        "[1, 2]", '{"edges": []}', '{"vertices": ["a", "b"], "edges": [{"u": "a"}]}',
        '{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 1}]}',
        '{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 2},'
        ' {"u": "b", "v": "a", "m": 3}]}',
        '{"vertices": ',
    ])
    def test_errors(self, text):
        with pytest.raises(GraphInputError):
            io.parse_json(text)


@given(graphs(max_vertices=7, labels=(2, 3, 4, 5, 12, 10**6)))
def test_render_parse_round_trip(g):
    assert io.parse(io.render_text(g)).graph == g
    assert io.parse(io.render_json(g)).graph == g


def test_load_uses_file_stem(tmp_path, fig3):
    p = tmp_path / "mine.json"
    p.write_text(io.render_json(fig3.with_name(None)))
    assert io.load(p).graph.name == "mine"
    assert io.load(p).graph == fig3
    with pytest.raises(GraphInputError):
        io.load(tmp_path / "missing.txt")


class TestDot:
    def test_plain(self, ex34):
        assert io.to_dot(ex34) == (
            'graph "example3_4" {\n  "a";\n  "b";\n  "c";\n'
            '  "a" -- "b" [label=2];\n  "b" -- "c" [label=3];\n}\n')

    def test_highlight(self, ex34):
        dot = io.to_dot(ex34, highlight_odd=True)
        assert '"b" -- "c" [label=3, color=red, penwidth=2];' in dot
        assert '"a" -- "b" [label=2];' in dot

    def test_quoting(self):
        g = PresentationGraph(['x"1', "y"], [('x"1', "y", 2)])
        assert '"x\\"1" -- "y"' in io.to_dot(g)


class TestCorpus:
    def test_all_load(self):
        for name in NAMES:
            assert load_corpus(name).name == name

    def test_figure2_has_the_extra_edge(self, fig2, fig3):
        assert fig2.label("e", "h") == 4 and fig3.label("e", "h") is None
        assert set(fig2.edges()) - set(fig3.edges()) == {("e", "h", 4)}

    @pytest.mark.parametrize("spec,n,edges", [
        ("K4", 4, 6), ("O3", 3, 0), ("P4:2,3,2", 4, 3), ("C5:4", 5, 5), ("K3:3", 3, 3)])
    def test_families(self, spec, n, edges):
        g = family(spec)
        assert len(g) == n and len(g.edges()) == edges

    def test_family_labels(self):
        g = family("P4:2,3,2")
        assert [m for _, _, m in g.edges()] == [2, 3, 2]

    def test_bad_family(self):
        with pytest.raises(GraphInputError):
            family("Q3")


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestCli:
    def test_splittings_example_path(self, capsys):
        code, out, _ = run(capsys, "splittings", "example3_4")
        assert code == 0
        assert out.splitlines()[0] == "1 visual splitting(s)"
        assert "centralising word c b c c b c a" in out
        assert out.rstrip().endswith("odd-separated neighbourhoods: none")

    def test_splittings_json(self, capsys):
        code, out, _ = run(capsys, "splittings", "example3_4", "--json")
        d = json.loads(out)
        assert code == 0 and len(d["splittings"]) == 1 and d["pair_criterion"] == []
        v = d["splittings"][0]["verdict"]
        assert v["verdict"] == "not_acylindrical"
        assert v["witness_word"]["word"] == "c b c c b c a"

    def test_splittings_pairs_mode(self, capsys):
        code, out, _ = run(capsys, "splittings", "P4:2,2,2", "--mode", "pairs", "--json")
        d = json.loads(out)
        assert len(d["splittings"]) == 3 and d["pair_criterion"] == [["a", "d"]]

    def test_splittings_cap(self, capsys):
        code, _, err = run(capsys, "splittings", "O5", "--cap", "4")
        assert code == 1 and err.startswith("error:")

    def test_check_union_graph(self, capsys):
        code, out, _ = run(capsys, "check", "figure3_union", "--x", "a,b,c,e,f,g",
                           "--y", "{b, c, d, f, g, h}", "--json")
        d = json.loads(out)
        assert code == 0 and d["valid"]
        assert d["splitting"]["z"] == ["b", "c", "f", "g"]
        assert d["verdict"]["verdict"] == "acylindrical"

    def test_check_text(self, capsys):
        code, out, _ = run(capsys, "check", "figure3_union", "--x", "a,b,c,e,f,g",
                           "--y", "b,c,d,f,g,h")
        assert "verdict: acylindrical, (k, C) = (3, 1)" in out
        assert "PIP/RP for Γ_X: certified (even_fc)" in out

    def test_check_invalid_splitting(self, capsys):
        code, out, _ = run(capsys, "check", "figure2_as_printed", "--x", "a,b,c,e,f,g",
                           "--y", "b,c,d,f,g,h", "--json")
        d = json.loads(out)
        assert code == 0
        assert d == {"valid": False, "violation": "separation", "witness": ["e", "h"],
                     "message": d["message"]}

    def test_check_supersets_follow_their_sides(self, capsys, tmp_path, fig3_x, fig3_y):
        px, py = tmp_path / "x.txt", tmp_path / "y.txt"
        px.write_text(io.render_text(fig3_x))
        py.write_text(io.render_text(fig3_y))
        # give the sides in reverse order; the supersets must still match up
        code, out, _ = run(capsys, "check", "figure3_union", "--x", "b,c,d,f,g,h",
                           "--y", "a,b,c,e,f,g", "--x-superset", py, "--y-superset", px,
                           "--json")
        v = json.loads(out)["verdict"]
        assert code == 0 and v["verdict"] == "acylindrical"
        assert v["hypothesis_x"]["rule"] == "user_superset"

    def test_check_superset_not_containing_side(self, capsys, tmp_path):
        p = tmp_path / "k2.txt"
        p.write_text("a b 7\n")
        code, _, err = run(capsys, "check", "figure3_union", "--x", "a,b,c,e,f,g",
                           "--y", "b,c,d,f,g,h", "--x-superset", p)
        assert code == 1

    def test_check_unknown_vertex(self, capsys):
        code, _, err = run(capsys, "check", "example3_4", "--x", "a,q", "--y", "b,c")
        assert code == 1 and "unknown vertex" in err

    def test_certify_text(self, capsys):
        code, out, _ = run(capsys, "certify-tits", "figure3_union")
        assert code == 0 and "complete, depth 1" in out.splitlines()[0]

    def test_certify_json(self, capsys):
        code, out, _ = run(capsys, "certify-tits", "example3_4", "--json")
        d = json.loads(out)
        assert d["status"] == "base" and d["base_class"] == "fc_type"

    def test_certify_bases(self, capsys):
        code, out, _ = run(capsys, "certify-tits", "example3_4", "--bases",
                           "two_dimensional,fc_type", "--json")
        assert json.loads(out)["base_class"] == "two_dimensional"
        code, _, err = run(capsys, "certify-tits", "example3_4", "--bases", "tame")
        assert code == 1 and "unknown base class" in err

    def test_certify_depth(self, capsys):
        code, out, _ = run(capsys, "certify-tits", "O3", "--bases", "spherical",
                           "--max-depth", "1")
        assert code == 0 and "depth limit reached" in out

    def test_classify(self, capsys):
        code, out, _ = run(capsys, "classify", "example3_4")
        assert code == 0
        assert "even             no   witness: ('b', 'c', 3)" in out
        code, out, _ = run(capsys, "classify", "example3_4", "--json")
        assert json.loads(out)["classes"]["fc_type"] == {"holds": True}

    def test_export_dot(self, capsys):
        code, out, _ = run(capsys, "export-dot", "example3_4", "--highlight-odd")
        assert code == 0 and "color=red" in out

    def test_odd_classes(self, capsys):
        code, out, _ = run(capsys, "odd-classes", "figure3_union")
        assert out.split() == ["{a}", "{b}", "{c,d,g,h}", "{e}", "{f}"]

    def test_file_input(self, capsys, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("a b 2\nb c 3\n")
        _, out, _ = run(capsys, "splittings", p, "--json")
        assert json.loads(out)["graph"]["name"] == "g"

    def test_bad_file(self, capsys, tmp_path):
        p = tmp_path / "g.txt"
        p.write_text("a b 3\nb c 1\n")
        code, _, err = run(capsys, "classify", p)
        assert code == 1 and "line 2: label must be ≥ 2" in err

    def test_unknown_reference(self, capsys):
        code, _, err = run(capsys, "classify", "no_such_graph")
        assert code == 1 and "neither a file" in err

    def test_internal_error_exit_code(self, capsys, monkeypatch):
        def boom(*a, **k):
            raise InvariantError("ambient graphs differ")
        monkeypatch.setattr(cli, "theorem_verdict", boom)
        code, _, err = run(capsys, "check", "example3_4", "--x", "a,b", "--y", "b,c")
        assert code == 2 and err.startswith("internal error:")


def test_text_declarations():
    g = io.parse("v a\nv b\na b 3").graph
    assert g.vertices == ("a", "b") and g.edges() == [("a", "b", 3)]


def test_splittings_on_complete_graph(capsys):
    code, out, _ = run(capsys, "splittings", "K4", "--json")
    assert code == 0 and json.loads(out)["splittings"] == []


# -- golden files -----------------------------------------------------------------------
# Set ARTINSPLIT_REGEN_GOLDEN=1 to rewrite them after an intended output change.

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_COMMANDS = {
    "classify": ["classify", "--json"],
    "splittings": ["splittings", "--json"],
    "certify": ["certify-tits", "--json"],
    "dot": ["export-dot", "--highlight-odd"],
}


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("tag", sorted(GOLDEN_COMMANDS))
def test_golden(capsys, name, tag):
    cmd, *flags = GOLDEN_COMMANDS[tag]
    code, out, _ = run(capsys, cmd, name, *flags)
    assert code == 0
    path = GOLDEN / f"{name}.{tag}.{'dot' if tag == 'dot' else 'json'}"
    if os.environ.get("ARTINSPLIT_REGEN_GOLDEN"):
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


@pytest.mark.parametrize("name", NAMES)
def test_json_outputs_reparse(capsys, name):
    g = load_corpus(name)
    for cmd in ("classify", "splittings"):
        _, out, _ = run(capsys, cmd, name, "--json")
        assert io.graph_from_json(json.loads(out)["graph"]) == g
    _, out, _ = run(capsys, "certify-tits", name, "--json")
    assert render_certificate(parse_certificate(out), "json") == out
    assert parse_certificate(out).graph == g

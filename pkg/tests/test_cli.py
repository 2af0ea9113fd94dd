import json

import pytest

from ocograph.cli import InputError, format_edge_list, main, parse_edge_list
from ocograph.cotree import evaluate, parse_named
from ocograph.digraph import Digraph, relabel


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_recognize_tournament_file(capsys, edge_file):
    code, out, _ = run(capsys, "recognize", edge_file("3 3\na b\na c\nb c\n"))
    assert (code, out.strip()) == (0, "a > b > c")


def test_recognize_triangle_file(capsys, edge_file):
    code, out, _ = run(capsys, "recognize", edge_file("3 3\na b\nb c\nc a\n"))
    assert (code, out.strip()) == (1, "witness D5: a,b,c")


def test_recognize_empty_file(capsys, edge_file):
    code, _, err = run(capsys, "recognize", edge_file(""))
    assert code == 2 and "empty" in err


@pytest.mark.parametrize(
    "text, line",
    [("3 2\na b\n", 1), ("2 1\na b c\n", 2), ("2 2\na b\na b\n", 3), ("x y\n", 1), ("2 1\na a\n", 2)],
)
def test_malformed_edge_lists_report_line(capsys, edge_file, text, line):
    code, _, err = run(capsys, "recognize", "--format", "edges", edge_file(text))
    assert code == 2
    assert f"line {line}" in err


def test_recognize_json(capsys, edge_file):
    code, out, _ = run(capsys, "recognize", "--json", edge_file("3 2\nx y\ny z\n"))
    report = json.loads(out)
    assert code == 1
    assert report["witness"] == {"pattern": "D1", "vertices": ["x", "y", "z"]}
    assert report["command"] == "recognize"


def test_header_count_must_match():
    with pytest.raises(InputError):
        parse_edge_list("2 1\na b\nc\n")


def test_recognize_non_transitive_file(capsys, edge_file):
    text = "7 8\nq p\nq r\np r\ns r\ns p\ns q\nt u\nt q\nlonely\n"
    assert run(capsys, "recognize", edge_file(text))[0] == 1


def test_recognize_output_round_trips(capsys, edge_file):
    text = "4 6\nq p\nq r\np r\ns q\ns p\ns r\n"
    code, out, _ = run(capsys, "recognize", edge_file(text))
    assert (code, out.strip()) == (0, "s > q > p > r")
    g, names = parse_edge_list(text)
    tree, tree_names = parse_named(out.strip())
    perm = [names.index(tree_names[v]) for v in range(g.n)]
    assert relabel(evaluate(tree), perm) == g


def test_isolated_vertices_in_edge_list():
    g, names = parse_edge_list("3 1\na b\nc\n")
    assert g == Digraph(3, [(0, 1)]) and names == ["a", "b", "c"]
    assert parse_edge_list(format_edge_list(g, names)) == (g, names)


def test_color_commands(capsys):
    assert run(capsys, "color", "a > b > c")[1].strip() == "chi_o = 3"
    code, out, _ = run(capsys, "color", "(a>b)+(c>d)", "--oracle")
    assert code == 0 and out.splitlines() == ["chi_o = 2", "oracle chi_o = 2 (agree)"]
    code, out, _ = run(capsys, "color", "a + b", "--assignment")
    assert out.splitlines() == ["chi_o = 1", "a 1", "b 1"]
    code, out, _ = run(capsys, "color", "(a>b)+c", "--verify", "--json")
    report = json.loads(out)
    assert report["verified"] is True and report["numbers"]["chi_o"] == 2


def test_color_non_cograph(capsys, edge_file):
    path = edge_file("4 4\na b\nb c\nc d\nd a\n")
    code, _, err = run(capsys, "color", path)
    assert code == 2 and "--oracle" in err
    code, out, _ = run(capsys, "color", path, "--oracle", "--verify")
    assert code == 0 and out.splitlines()[0] == "chi_o = 4 (oracle)"


def test_color_oracle_budget(capsys):
    code, _, err = run(capsys, "color", "a > b > c", "--oracle", "--budget", "2")
    assert code == 2 and "budget" in err


def test_longest_path(capsys):
    assert run(capsys, "longest-path", "a > b > c")[1].strip() == "2"


def test_isomorphic(capsys):
    assert run(capsys, "isomorphic", "(a>b)+c", "f+(d>e)")[:2] == (0, "yes\n")
    assert run(capsys, "isomorphic", "(a+b)>c", "f>(d+e)")[:2] == (1, "no\n")


def test_oriented_clique(capsys):
    assert run(capsys, "oriented-clique", "a>b>c>d")[:2] == (0, "yes\n")
    assert run(capsys, "oriented-clique", "(a+b)>c")[:2] == (1, "no\n")


def test_hom(capsys):
    assert run(capsys, "hom", "a>b>c", "2")[:2] == (1, "none\n")
    code, out, _ = run(capsys, "hom", "a>b>c", "3")
    assert code == 0 and out.splitlines() == ["a 1", "b 2", "c 3"]


def test_generate_is_deterministic(capsys):
    first = run(capsys, "generate", "--n", "9", "--seed", "5")[1]
    assert first == run(capsys, "generate", "--n", "9", "--seed", "5")[1]
    code, out, _ = run(capsys, "generate", "--n", "5", "--seed", "2", "--edges")
    g, names = parse_edge_list(out)
    assert code == 0 and g.n == 5 and sorted(names) == [f"v{i}" for i in range(5)]


def test_generated_edges_recognized(capsys, edge_file):
    out = run(capsys, "generate", "--n", "12", "--seed", "8", "--edges")[1]
    assert run(capsys, "recognize", edge_file(out))[0] == 0


def test_expression_file(capsys, edge_file):
    path = edge_file("# a comment\n(a > b)\n + c\n", name="e.expr")
    assert run(capsys, "color", path)[1].strip() == "chi_o = 2"


def test_bad_expression_and_usage(capsys):
    assert run(capsys, "recognize", "a > a")[0] == 2
    assert run(capsys, "recognize", "a x b")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2
    assert run(capsys, "recognize", "--format", "edges", "missing.txt")[0] == 2


def test_check_command(capsys):
    code, out, _ = run(capsys, "check", "--n-max", "6", "--cases", "20")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "check", "--n-max", "1", "--cases", "5", "--json")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "pass"


def test_scaling_command_writes_figure(capsys, tmp_path):
    fig = tmp_path / "scaling.png"
    code, out, _ = run(capsys, "scaling", "--sizes", "200", "2000", "--plot", str(fig))
    assert code == 0
    header, *rows = out.strip().splitlines()
    assert header.startswith("operation,leaves")
    assert len(rows) == 4
    assert fig.stat().st_size > 0

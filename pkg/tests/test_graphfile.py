import pytest
from hypothesis import given

from cubewalk.graphfile import GraphSpecError, format_graph_spec, load_graph, parse_graph_spec
from cubewalk.group import WeightFunction

from conftest import weight_functions

TEXT = """# weighted example
n 3

101 3   # trailing comment
001 4
011 8
"""


def test_parse():
    f = parse_graph_spec(TEXT)
    assert f == WeightFunction.from_dict({"001": 4, "011": 8, "101": 3})


def test_canonical_form():
    assert format_graph_spec(parse_graph_spec(TEXT)) == "n 3\n001 4\n011 8\n101 3\n"


@given(weight_functions())
def test_parse_emit_idempotent(f):
    text = format_graph_spec(f)
    assert parse_graph_spec(text) == f
    assert format_graph_spec(parse_graph_spec(text)) == text


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("n 3\n000 5\n", 2, "loop weight not allowed"),
        ("n 3\n001 1\n001 2\n", 3, "duplicate"),
        ("n 3\n# c\n01 1\n", 3, "bit string"),
        ("n 3\n001 1.5\n", 2, "integer"),
        ("n 3\n001 0\n", 2, "non-zero"),
        ("3\n", 1, "header"),
        ("n 0\n", 1, "dimension"),
        ("", 1, "missing header"),
        ("n 2\n01 1 2\n", 2, "expected"),
    ],
)
def test_parse_errors(text, lineno, fragment):
    with pytest.raises(GraphSpecError, match=fragment) as info:
        parse_graph_spec(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_load_graph(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(TEXT)
    assert load_graph(p).delta == 3


def test_bundled_graph_files_parse():
    from pathlib import Path

    files = sorted((Path(__file__).resolve().parent.parent / "graphs").glob("*.txt"))
    assert len(files) >= 6
    for path in files:
        assert load_graph(path).delta > 0

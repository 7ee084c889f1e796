import pytest
from hypothesis import given

from dikroma.digraph import Digraph, directed_cycle, empty, enumerate_digraphs
from dikroma.errors import ParseError
from dikroma.formats import (
    parse_digraph,
    parse_digraph6,
    parse_edge_list,
    read_digraph,
    to_digraph6,
    to_edge_list,
)

from strategies import digraphs


def hand_digraph6(n, matrix):
    """Encode by hand: row-major bits, 6-bit big-endian groups, +63 offset."""
    bits = "".join("1" if matrix[u][v] else "0" for u in range(n) for v in range(n))
    bits += "0" * (-len(bits) % 6)
    return "&" + chr(n + 63) + "".join(chr(int(bits[i:i + 6], 2) + 63)
                                       for i in range(0, len(bits), 6))


def test_edge_list_parses_c3():
    assert parse_edge_list("3 3\n0 1\n1 2\n2 0\n") == directed_cycle(3)


def test_edge_list_comments_and_blank_lines():
    text = "# a comment\n\n3 1\n# arc next\n0 2\n"
    assert set(parse_edge_list(text).arcs()) == {(0, 2)}


def test_edge_list_canonical_roundtrip():
    text = "3 3\n0 1\n1 2\n2 0\n"
    assert to_edge_list(parse_edge_list(text)) == text


def test_empty_two_vertex_digraph6():
    assert to_digraph6(empty(2)) == "&A?"
    assert hand_digraph6(2, [[0, 0], [0, 0]]) == "&A?"


@given(digraphs(max_n=8))
def test_digraph6_matches_hand_encoding(d):
    assert to_digraph6(d) == hand_digraph6(d.n, d.matrix())


@given(digraphs(max_n=8))
def test_roundtrips(d):
    assert parse_digraph6(to_digraph6(d)) == d
    assert parse_edge_list(to_edge_list(d)) == d
    assert parse_digraph(to_digraph6(d)) == d


@pytest.mark.parametrize("text, where", [
    ("", "line 1"),
    ("3\n", "line 1"),
    ("x y\n", "line 1"),
    ("3 1\n0 3\n", "line 2"),
    ("3 1\n1 1\n", "line 2"),
    ("3 2\n0 1\n0 1\n", "line 3"),
    ("3 2\n0 1\n", "line 2"),
    ("3 1\n0 1\n1 2\n", "line 3"),
    ("3 1\n0 1 2\n", "line 2"),
])
def test_edge_list_errors_name_the_line(text, where):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.location == where
    assert where in str(exc.value)


@pytest.mark.parametrize("text, where", [
    ("A?", "byte 0"),
    ("&", "byte 1"),
    ("&A", "byte 2"),
    ("&A??", "byte 3"),
    ("&A?\x01", "byte 3"),
    ("&A@", "byte 2"),
    ("&A_", "byte 2"),
])
def test_digraph6_errors_name_the_byte(text, where):
    with pytest.raises(ParseError) as exc:
        parse_digraph6(text)
    assert exc.value.location == where


def test_read_digraph_inline_and_file(tmp_path):
    assert read_digraph("&A?") == empty(2)
    path = tmp_path / "c3.txt"
    path.write_text("3 3\n0 1\n1 2\n2 0\n")
    assert read_digraph(path) == directed_cycle(3)
    path.write_text(to_digraph6(directed_cycle(3)) + "\n")
    assert read_digraph(str(path)) == directed_cycle(3)


def test_family_roundtrip_n4_bit_exact():
    for d in enumerate_digraphs(4):
        s6 = to_digraph6(d)
        assert to_digraph6(parse_digraph6(s6)) == s6
        el = to_edge_list(d)
        assert to_edge_list(parse_edge_list(el)) == el
        assert parse_digraph6(s6) == d == parse_edge_list(el)


def test_digon_digraph6():
    # digon on 2 vertices: bits 0110 + 00 -> 011000 = 24
    assert to_digraph6(Digraph(2, [0b10, 0b01])) == "&A" + chr(24 + 63)

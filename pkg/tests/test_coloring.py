import pytest
from hypothesis import given

from dikroma.coloring import (
    Coloring,
    PairMode,
    coverage_matrix,
    format_coloring,
    is_acyclic_coloring,
    is_complete_coloring,
    is_digrundy_coloring,
    parse_coloring,
)
from dikroma.digraph import complete_symmetric, empty, enumerate_digraphs
from dikroma.errors import ContractError, ParseError

from oracles import first_fit_colorings
from strategies import digraphs


def test_acyclic_coloring_examples(c3):
    assert not is_acyclic_coloring(c3, (1, 1, 1))
    assert is_acyclic_coloring(complete_symmetric(2), (1, 2))
    assert is_acyclic_coloring(c3, (1, 1, 2))


def test_complete_coloring_examples(p3, c3):
    assert is_complete_coloring(p3, (1, 2, 1), PairMode.ORDERED)
    assert not is_complete_coloring(c3, (1, 2, 3), "ordered")
    assert is_complete_coloring(c3, (1, 2, 3), "unordered")
    assert is_complete_coloring(c3, (1, 1, 1))
    assert is_complete_coloring(empty(3), (1, 1, 1))


def test_digrundy_coloring_examples(c3, p3):
    assert is_digrundy_coloring(c3, (1, 1, 2))
    assert not is_digrundy_coloring(p3, (1, 2, 1))
    assert is_digrundy_coloring(p3, (1, 1, 1))
    assert not is_digrundy_coloring(c3, (1, 1, 1))


def test_coverage_matrix_examples(p3, k3):
    assert coverage_matrix(empty(1), (1,)) == [[False]]
    cov = coverage_matrix(p3, (1, 2, 1))
    assert cov[0][1] and cov[1][0]
    cov = coverage_matrix(k3, (1, 2, 3))
    assert all(cov[i][j] for i in range(3) for j in range(3) if i != j)


def test_vertex_count_mismatch(c3):
    with pytest.raises(ContractError):
        is_acyclic_coloring(c3, (1, 2))


def test_coloring_requires_contiguous_colors():
    with pytest.raises(ContractError):
        Coloring((1, 3))
    c, relabel = Coloring.normalize((5, 2, 5, 9))
    assert c.colors == (2, 1, 2, 3)
    assert relabel == {2: 1, 5: 2, 9: 3}
    assert c.classes() == [0b0010, 0b0101, 0b1000]


def test_coloring_text_roundtrip():
    c = Coloring((2, 1, 3, 1))
    assert parse_coloring(format_coloring(c)) == c
    with pytest.raises(ParseError):
        parse_coloring("2\n0 1\n1 1\n")
    with pytest.raises(ParseError):
        parse_coloring("2\n0 1\n0 2\n")


@pytest.mark.parametrize("n, stride", [(1, 1), (2, 1), (3, 1), (4, 17)])
def test_digrundy_colorings_are_exactly_first_fit_outputs(n, stride):
    """A coloring is digrundy iff some ordering makes First-Fit produce it."""
    from itertools import product
    for i, d in enumerate(enumerate_digraphs(n)):
        if i % stride:
            continue
        reachable = first_fit_colorings(d)
        for colors in product(range(1, n + 1), repeat=n):
            used = set(colors)
            if used != set(range(1, len(used) + 1)):
                continue
            assert is_digrundy_coloring(d, colors) == (colors in reachable), (d, colors)


@given(digraphs(max_n=5))
def test_unordered_completeness_is_weaker(d):
    from itertools import product
    for colors in product((1, 2, 3), repeat=d.n):
        used = set(colors)
        if used != set(range(1, len(used) + 1)):
            continue
        if is_complete_coloring(d, colors, PairMode.ORDERED):
            assert is_complete_coloring(d, colors, PairMode.UNORDERED)

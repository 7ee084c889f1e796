from itertools import combinations

import pytest
from hypothesis import given

from dikroma.digraph import (
    Digraph,
    complement,
    complement_index,
    complete_symmetric,
    degrees,
    digraph_at,
    directed_cycle,
    empty,
    enumerate_digraphs,
    family_size,
    has_cycle_through,
    index_of,
    induced,
    is_acyclic,
    random_digraph,
)
from dikroma.errors import ContractError

from oracles import arcs_of, has_cycle
from strategies import digraphs


def test_complement_examples(c3, k3):
    assert complement(k3) == empty(3)
    assert set(complement(c3).arcs()) == {(1, 0), (2, 1), (0, 2)}


@given(digraphs())
def test_complement_is_involution(d):
    assert complement(complement(d)) == d
    assert d.m + complement(d).m == d.n * (d.n - 1)


def test_is_acyclic_examples(c3):
    assert not is_acyclic(c3)
    assert not is_acyclic(complete_symmetric(2), [0, 1])
    assert is_acyclic(c3, [0, 1])
    assert is_acyclic(empty(5))


@given(digraphs(max_n=6))
def test_is_acyclic_matches_closed_walks(d):
    arcs = arcs_of(d)
    for mask in range(1 << d.n):
        verts = [v for v in range(d.n) if mask >> v & 1]
        assert is_acyclic(d, mask) == (not has_cycle(d.n, arcs, verts))


def test_has_cycle_through_examples(c3, p3):
    assert has_cycle_through(c3, {0, 1}, 2)
    assert not has_cycle_through(p3, {0, 2}, 1)
    assert has_cycle_through(complete_symmetric(2), {0}, 1)


@given(digraphs(max_n=6))
def test_has_cycle_through_is_incremental_acyclicity(d):
    for mask in range(1 << d.n):
        if not is_acyclic(d, mask):
            continue
        for v in range(d.n):
            if not mask >> v & 1:
                assert has_cycle_through(d, mask, v) == (not is_acyclic(d, mask | 1 << v))


def test_has_cycle_through_checked_preconditions(c3):
    with pytest.raises(ContractError):
        has_cycle_through(c3, {0, 1, 2}, 0, check=True)
    with pytest.raises(ContractError):
        has_cycle_through(complete_symmetric(3), {0, 1}, 2, check=True)


def test_degrees(k3, c3, p3):
    assert degrees(k3)[2:] == (2, 2)
    assert degrees(c3).out_degree == (1, 1, 1) and degrees(c3).in_degree == (1, 1, 1)
    deg = degrees(p3)
    assert (deg.max_out, deg.max_in) == (1, 1)
    assert deg.in_degree[0] == 0


@pytest.mark.parametrize("n, size", [(1, 1), (2, 4), (3, 64), (4, 4096)])
def test_enumeration_counts_and_distinct(n, size):
    seen = {d for d in enumerate_digraphs(n)}
    assert len(seen) == size == family_size(n)


def test_enumeration_covers_every_arc_set():
    n = 3
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    expected = {frozenset(s) for r in range(len(pairs) + 1) for s in combinations(pairs, r)}
    assert {frozenset(d.arcs()) for d in enumerate_digraphs(n)} == expected


def test_enumeration_refuses_above_cap():
    with pytest.raises(ContractError, match="limited"):
        next(enumerate_digraphs(6))


@given(digraphs(max_n=5))
def test_index_roundtrip_and_complement_index(d):
    i = index_of(d)
    assert digraph_at(d.n, i) == d
    assert digraph_at(d.n, complement_index(d.n, i)) == complement(d)


def test_random_digraph():
    assert random_digraph(6, 0.0, 1) == empty(6)
    assert random_digraph(6, 1.0, 1) == complete_symmetric(6)
    assert random_digraph(5, 0.5, 42) == random_digraph(5, 0.5, 42)
    with pytest.raises(ContractError):
        random_digraph(4, 1.5, 0)


def test_construction_errors():
    with pytest.raises(ContractError):
        Digraph(2, [0b01, 0])
    with pytest.raises(ContractError):
        Digraph.from_arcs(2, [(0, 2)])
    with pytest.raises(ContractError):
        Digraph(0, [])


def test_induced_relabels(c3):
    sub, labels = induced(directed_cycle(4), [1, 2, 3])
    assert labels == [1, 2, 3]
    assert set(sub.arcs()) == {(0, 1), (1, 2)}

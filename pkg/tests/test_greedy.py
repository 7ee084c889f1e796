from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from dikroma.coloring import is_acyclic_coloring, is_digrundy_coloring
from dikroma.digraph import complete_symmetric
from dikroma.errors import ContractError, TraceError
from dikroma.greedy import (
    ParsimoniousRun,
    greedy_color,
    greedy_run,
    parsimonious_min_colors,
    replay_run,
)

from oracles import arcs_of, first_fit, parsimonious_counts
from strategies import digraphs


def test_greedy_examples(c3, p3):
    assert greedy_color(complete_symmetric(2), (0, 1)).colors == (1, 2)
    for order in permutations(range(3)):
        assert greedy_color(p3, order).colors == (1, 1, 1)
    assert greedy_color(c3, (0, 1, 2)).colors == (1, 1, 2)


def test_greedy_rejects_bad_orderings(c3):
    with pytest.raises(ContractError):
        greedy_color(c3, (0, 1))
    with pytest.raises(ContractError):
        greedy_color(c3, (0, 0, 1))


@given(digraphs(max_n=6), st.randoms(use_true_random=False))
def test_greedy_matches_oracle_and_is_digrundy(backend, d, rnd):
    order = list(range(d.n))
    rnd.shuffle(order)
    col = greedy_color(d, order)
    assert list(col.colors) == first_fit(d.n, arcs_of(d), order)
    assert is_digrundy_coloring(d, col)


def test_parsimonious_examples(p3):
    assert parsimonious_min_colors(complete_symmetric(2), (0, 1))[0] == 2
    assert parsimonious_min_colors(p3, (0, 1, 2))[0] == 1


def test_parsimonious_beats_smallest_color_policy(d_star, backend):
    k, run = parsimonious_min_colors(d_star, (0, 1, 2, 3))
    assert k == 2
    assert run.trace == (1, 2, 2, 1)  # c takes 2 so d can reuse 1
    assert greedy_color(d_star, (0, 1, 2, 3)).k == 3
    assert replay_run(d_star, run).colors == (1, 2, 2, 1)


@given(digraphs(max_n=6), st.randoms(use_true_random=False))
def test_parsimonious_matches_run_enumeration(backend, d, rnd):
    order = list(range(d.n))
    rnd.shuffle(order)
    k, run = parsimonious_min_colors(d, order)
    assert k == min(parsimonious_counts(d.n, arcs_of(d), order))
    col = replay_run(d, run)
    assert col.k == k and is_acyclic_coloring(d, col)
    assert k <= greedy_color(d, order).k


@given(digraphs(max_n=6))
def test_greedy_run_replays(d):
    run = greedy_run(d, range(d.n))
    assert replay_run(d, run) == greedy_color(d, range(d.n))


def test_replay_rejects_needless_new_color(d_star):
    with pytest.raises(TraceError) as exc:
        replay_run(d_star, ParsimoniousRun((0, 1, 2, 3), (1, 2, 3, 1)))
    assert exc.value.step == 2


def test_replay_rejects_cycle_and_bad_color(c3):
    with pytest.raises(TraceError) as exc:
        replay_run(c3, ParsimoniousRun((0, 1, 2), (1, 1, 1)))
    assert exc.value.step == 2
    with pytest.raises(TraceError) as exc:
        replay_run(c3, ParsimoniousRun((0, 1, 2), (1, 3, 1)))
    assert exc.value.step == 1
    with pytest.raises(TraceError):
        replay_run(c3, ParsimoniousRun((0, 1, 2), (1, 1)))

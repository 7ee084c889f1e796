"""Ordering-driven colorings: First-Fit (greedy) and parsimonious runs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from dikroma import _backend
from dikroma.coloring import Coloring
from dikroma.digraph import Digraph, check_ordering
from dikroma.errors import TraceError


@dataclass(frozen=True)
class ParsimoniousRun:
    """One parsimonious run: ``trace[i]`` is the color given to ``ordering[i]``."""

    ordering: tuple[int, ...]
    trace: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.trace)

    def coloring(self) -> Coloring:
        colors = [0] * len(self.ordering)
        for v, c in zip(self.ordering, self.trace):
            colors[v] = c
        return Coloring(tuple(colors))


def greedy_color(d: Digraph, order: Sequence[int]) -> Coloring:
    """First-Fit: each vertex takes the smallest color whose class stays acyclic."""
    order = check_ordering(order, d.n)
    return Coloring(tuple(_backend.kernels.greedy(d.n, d.out, order)))


def greedy_run(d: Digraph, order: Sequence[int]) -> ParsimoniousRun:
    """The greedy coloring as a parsimonious run (always the smallest admissible color)."""
    order = check_ordering(order, d.n)
    colors = _backend.kernels.greedy(d.n, d.out, order)
    return ParsimoniousRun(order, tuple(colors[v] for v in order))


def parsimonious_min_colors(d: Digraph, order: Sequence[int],
                            deadline: float = 0.0) -> tuple[int, ParsimoniousRun]:
    """Fewest colors over every parsimonious run along ``order``.

    At each step the vertex must reuse some existing color whose class stays
    acyclic, if one exists, and may pick any of them; only when none exists
    does it open the next color. The minimum is over all such runs, and the
    witness is the lexicographically least optimal trace.
    """
    order = check_ordering(order, d.n)
    k, trace = _backend.kernels.parsimonious(d.n, d.out, order, deadline)
    return k, ParsimoniousRun(order, tuple(trace))


def replay_run(d: Digraph, run: ParsimoniousRun) -> Coloring:
    """Replay ``run`` step by step, raising TraceError at the first illegal step."""
    order = check_ordering(run.ordering, d.n)
    if len(run.trace) != d.n:
        raise TraceError(f"trace has {len(run.trace)} entries for {d.n} vertices",
                         min(len(run.trace), d.n))
    kern = _backend.kernels
    classes: list[int] = []
    for step, (v, color) in enumerate(zip(order, run.trace)):
        admissible = [c + 1 for c, cls in enumerate(classes)
                      if not kern.cycle_through(d.n, d.out, cls, v)]
        if color == len(classes) + 1:
            if admissible:
                raise TraceError(
                    f"vertex {v} opened color {color} although colors {admissible} "
                    "were admissible", step)
            classes.append(1 << v)
        elif 1 <= color <= len(classes):
            if color not in admissible:
                raise TraceError(
                    f"vertex {v} closes a directed cycle in class {color}", step)
            classes[color - 1] |= 1 << v
        else:
            raise TraceError(
                f"color {color} is neither in use nor the next new color "
                f"{len(classes) + 1}", step)
    return run.coloring()

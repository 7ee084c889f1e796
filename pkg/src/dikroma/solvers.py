"""Exact dc, dac, dG and dc-o solvers, brute-force oracles, interpolation witnesses.

The digrundy search works on ordered partitions rather than orderings. A
coloring with classes V_1..V_k is digrundy exactly when each V_i is a
maximal acyclic set of D[V_i + ... + V_k]; listing the classes one after
another as a vertex ordering makes First-Fit reproduce the partition, and
every First-Fit run yields such a partition. The search therefore recurses
on the set R of still uncolored vertices: pick a maximal acyclic subset of
D[R] as the next class. Memoizing on R gives every achievable class count
in O(3^n) table steps, independent of n!.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Any

from dikroma import _backend
from dikroma.coloring import (
    Coloring,
    PairMode,
    is_acyclic_coloring,
    is_complete_coloring,
    is_digrundy_coloring,
)
from dikroma.digraph import Digraph, degrees
from dikroma.errors import CapExceeded, DikromaError
from dikroma.greedy import greedy_color

EXACT_CAP = 16
ORDERINGS_CAP = 8
DCO_CAP = 7
TIME_BUDGET_ENV = "DIKROMA_TIME_BUDGET_MS"


class TheoremViolation(DikromaError):
    """A proven inequality failed; this can only be an implementation defect."""


def deadline_from_env(budget_ms: float | None = None) -> float:
    """Absolute ``time.monotonic()`` deadline, or 0.0 for no limit."""
    if budget_ms is None:
        raw = os.environ.get(TIME_BUDGET_ENV)
        if not raw:
            return 0.0
        budget_ms = float(raw)
    if budget_ms <= 0:
        return 0.0
    return time.monotonic() + budget_ms / 1000.0


def _cap(d: Digraph, cap: int, what: str) -> None:
    if d.n > cap:
        raise CapExceeded(f"{what} is limited to n <= {cap}, got n={d.n}")


def _ordered(mode: PairMode | str) -> bool:
    return PairMode(mode) is PairMode.ORDERED


def dichromatic_number(d: Digraph, deadline: float | None = None) -> tuple[int, Coloring]:
    """Least k with an acyclic k-coloring; witness is the lexicographically
    least optimal color vector."""
    _cap(d, EXACT_CAP, "dichromatic_number")
    deadline = deadline_from_env() if deadline is None else deadline
    k, colors = _backend.kernels.dichromatic(d.n, d.out, deadline)
    return k, Coloring(tuple(colors))


def diachromatic_number(d: Digraph, mode: PairMode | str = PairMode.ORDERED,
                        deadline: float | None = None) -> tuple[int, Coloring]:
    """Largest k with an acyclic complete k-coloring.

    Searches k downward from an upper bound: at most n classes; at most
    omega singleton classes (they are pairwise joined, so they span a
    complete symmetric subdigraph in ordered mode) with every other class
    holding two or more vertices; and k(k-1) <= m since each arc runs from
    one class to one other class and so covers a single ordered pair.
    """
    _cap(d, EXACT_CAP, "diachromatic_number")
    deadline = deadline_from_env() if deadline is None else deadline
    k, colors = _backend.kernels.diachromatic(d.n, d.out, _ordered(mode), 1, deadline)
    return k, Coloring(tuple(colors))


def complete_coloring(d: Digraph, k: int, mode: PairMode | str = PairMode.ORDERED,
                      deadline: float | None = None) -> Coloring | None:
    """An acyclic complete coloring with exactly k colors, or None."""
    _cap(d, EXACT_CAP, "complete_coloring")
    deadline = deadline_from_env() if deadline is None else deadline
    colors = _backend.kernels.complete_coloring(d.n, d.out, k, _ordered(mode), deadline)
    return None if colors is None else Coloring(tuple(colors))


def digrundy_spectrum(d: Digraph, deadline: float | None = None) -> dict[int, Coloring]:
    """Every color count some digrundy coloring attains, with a witness each."""
    _cap(d, EXACT_CAP, "digrundy_spectrum")
    deadline = deadline_from_env() if deadline is None else deadline
    found = _backend.kernels.digrundy_spectrum(d.n, d.out, deadline)
    return {k: Coloring(tuple(colors)) for k, colors in sorted(found.items())}


def digrundy_number(d: Digraph, deadline: float | None = None) -> tuple[int, Coloring]:
    spectrum = digrundy_spectrum(d, deadline)
    k = max(spectrum)
    return k, spectrum[k]


def digrundy_by_orderings(d: Digraph) -> int:
    """Most colors First-Fit uses over all n! orderings (independent oracle)."""
    _cap(d, ORDERINGS_CAP, "digrundy_by_orderings")
    return _backend.kernels.greedy_max(d.n, d.out)


def diochromatic_number(d: Digraph, deadline: float | None = None) -> int:
    """Maximum over all orderings of the parsimonious minimum color count."""
    _cap(d, DCO_CAP, "diochromatic_number")
    deadline = deadline_from_env() if deadline is None else deadline
    return _backend.kernels.diochromatic(d.n, d.out, deadline)


def ordering_achieving_dc(d: Digraph) -> tuple[int, ...]:
    """An ordering on which First-Fit uses exactly dc(D) colors.

    Lists an optimal acyclic coloring class by class; First-Fit then never
    needs a color beyond the class index.
    """
    k, witness = dichromatic_number(d)
    order = tuple(v for color in range(1, k + 1)
                  for v in range(d.n) if witness[v] == color)
    got = greedy_color(d, order).k
    if got != k:
        raise DikromaError(f"class-by-class ordering gave {got} colors, expected {k}")
    return order


@dataclass
class InterpolationResult:
    """Witnesses for every k in ``[low, high]``; ``missing`` should stay empty."""

    kind: str
    low: int
    high: int
    witnesses: dict[int, Coloring] = field(default_factory=dict)
    missing: list[int] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.missing


def greedy_interpolation_witnesses(d: Digraph,
                                   deadline: float | None = None) -> InterpolationResult:
    dc, _ = dichromatic_number(d, deadline)
    spectrum = digrundy_spectrum(d, deadline)
    dg = max(spectrum)
    result = InterpolationResult("greedy", dc, dg)
    for k in range(dc, dg + 1):
        witness = spectrum.get(k)
        if witness is not None and witness.k == k and is_digrundy_coloring(d, witness):
            result.witnesses[k] = witness
        else:
            result.missing.append(k)
    return result


def complete_interpolation_witnesses(d: Digraph, mode: PairMode | str = PairMode.ORDERED,
                                     deadline: float | None = None) -> InterpolationResult:
    dc, _ = dichromatic_number(d, deadline)
    dac, _ = diachromatic_number(d, mode, deadline)
    result = InterpolationResult("complete", dc, dac)
    for k in range(dc, dac + 1):
        witness = complete_coloring(d, k, mode, deadline)
        if (witness is not None and witness.k == k and is_acyclic_coloring(d, witness)
                and is_complete_coloring(d, witness, mode)):
            result.witnesses[k] = witness
        else:
            result.missing.append(k)
    return result


@dataclass
class ParameterReport:
    n: int
    m: int
    dc: int
    dc_witness: Coloring
    dac: int
    dac_witness: Coloring
    dg: int
    dg_witness: Coloring
    delta_out: int
    delta_in: int
    pair_mode: PairMode
    dco: int | None = None

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "dc": self.dc,
            "dac": self.dac,
            "dg": self.dg,
        }
        if self.dco is not None:
            data["dco"] = self.dco
        data.update({
            "delta_in": self.delta_in,
            "delta_out": self.delta_out,
            "witnesses": {
                "dc": list(self.dc_witness.colors),
                "dac": list(self.dac_witness.colors),
                "dg": list(self.dg_witness.colors),
            },
            "pair_mode": self.pair_mode.value,
        })
        return data


def parameter_report(d: Digraph, mode: PairMode | str = PairMode.ORDERED,
                     with_dco: bool = False,
                     deadline: float | None = None) -> ParameterReport:
    """All parameters with witnesses, each re-checked by the coloring predicates."""
    mode = PairMode(mode)
    deadline = deadline_from_env() if deadline is None else deadline
    dc, dc_w = dichromatic_number(d, deadline)
    dg, dg_w = digrundy_number(d, deadline)
    dac, dac_w = diachromatic_number(d, mode, deadline)
    dco = diochromatic_number(d, deadline) if with_dco else None

    if dc_w.k != dc or not is_acyclic_coloring(d, dc_w):
        raise DikromaError("dc witness failed validation")
    if dg_w.k != dg or not is_digrundy_coloring(d, dg_w):
        raise DikromaError("dG witness failed validation")
    if dac_w.k != dac or not (is_acyclic_coloring(d, dac_w)
                              and is_complete_coloring(d, dac_w, mode)):
        raise DikromaError("dac witness failed validation")
    if not dc <= dg <= dac:
        raise TheoremViolation(f"chain dc <= dG <= dac fails: {dc}, {dg}, {dac}")

    deg = degrees(d)
    return ParameterReport(
        n=d.n, m=d.m,
        dc=dc, dc_witness=dc_w,
        dac=dac, dac_witness=dac_w,
        dg=dg, dg_witness=dg_w,
        delta_out=deg.max_out, delta_in=deg.max_in,
        pair_mode=mode, dco=dco,
    )

"""Exact acyclic-coloring parameters of small digraphs.

Computes the dichromatic (dc), diachromatic (dac), digrundy (dG) and
diochromatic (dc-o) numbers with witness colorings, and sweeps digraph
families to verify Nordhaus-Gaddum bounds and interpolation properties.
"""

from dikroma._backend import BACKEND
from dikroma.coloring import (
    Coloring,
    PairMode,
    coverage_matrix,
    is_acyclic_coloring,
    is_complete_coloring,
    is_digrundy_coloring,
)
from dikroma.digraph import (
    Digraph,
    complement,
    degrees,
    enumerate_digraphs,
    has_cycle_through,
    is_acyclic,
    random_digraph,
)
from dikroma.formats import parse_digraph, to_digraph6, to_edge_list
from dikroma.greedy import ParsimoniousRun, greedy_color, parsimonious_min_colors, replay_run
from dikroma.solvers import (
    ParameterReport,
    complete_interpolation_witnesses,
    diachromatic_number,
    dichromatic_number,
    digrundy_by_orderings,
    digrundy_number,
    diochromatic_number,
    greedy_interpolation_witnesses,
    ordering_achieving_dc,
    parameter_report,
)
from dikroma.sweep import Family, find_extremal, ng_bound_dG, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Coloring",
    "Digraph",
    "Family",
    "PairMode",
    "ParameterReport",
    "ParsimoniousRun",
    "complement",
    "complete_interpolation_witnesses",
    "coverage_matrix",
    "degrees",
    "diachromatic_number",
    "dichromatic_number",
    "digrundy_by_orderings",
    "digrundy_number",
    "diochromatic_number",
    "enumerate_digraphs",
    "find_extremal",
    "greedy_color",
    "greedy_interpolation_witnesses",
    "has_cycle_through",
    "is_acyclic",
    "is_acyclic_coloring",
    "is_complete_coloring",
    "is_digrundy_coloring",
    "ng_bound_dG",
    "ordering_achieving_dc",
    "parameter_report",
    "parse_digraph",
    "parsimonious_min_colors",
    "random_digraph",
    "replay_run",
    "run_sweep",
    "to_digraph6",
    "to_edge_list",
]

"""Colorings and the acyclic / complete / digrundy validity predicates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from dikroma.digraph import Digraph, has_cycle_through, is_acyclic
from dikroma.errors import ContractError, ParseError


class PairMode(str, enum.Enum):
    """Which class pairs a complete coloring must join.

    ``ORDERED`` wants an arc from every class to every other class;
    ``UNORDERED`` wants an arc in at least one direction.
    """

    ORDERED = "ordered"
    UNORDERED = "unordered"


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k`` per vertex, every color used at least once."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if not colors:
            raise ContractError("a coloring needs at least one vertex")
        used = set(colors)
        if used != set(range(1, len(used) + 1)):
            raise ContractError(
                f"colors must be exactly 1..k with no gaps, got {sorted(used)}; "
                "use Coloring.normalize")

    @classmethod
    def normalize(cls, colors: Sequence[int]) -> tuple["Coloring", dict[int, int]]:
        """Relabel arbitrary color values onto 1..k, keeping their order.

        Returns the coloring and the old -> new relabeling.
        """
        relabel = {c: i for i, c in enumerate(sorted(set(colors)), start=1)}
        return cls(tuple(relabel[c] for c in colors)), relabel

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        return max(self.colors)

    def classes(self) -> list[int]:
        """Bitmask of chromatic class i at position i - 1."""
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c - 1] |= 1 << v
        return masks

    def __iter__(self):
        return iter(self.colors)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]


ColoringLike = Union[Coloring, Sequence[int]]


def as_coloring(c: ColoringLike) -> Coloring:
    if isinstance(c, Coloring):
        return c
    return Coloring.normalize(c)[0]


def _checked(d: Digraph, c: ColoringLike) -> Coloring:
    c = as_coloring(c)
    if c.n != d.n:
        raise ContractError(f"coloring covers {c.n} vertices but the digraph has {d.n}")
    return c


def is_acyclic_coloring(d: Digraph, c: ColoringLike) -> bool:
    c = _checked(d, c)
    return all(is_acyclic(d, cls) for cls in c.classes())


def coverage_matrix(d: Digraph, c: ColoringLike) -> list[list[bool]]:
    """Entry (i, j) (0-based) is True iff some arc runs from class i+1 to class j+1."""
    c = _checked(d, c)
    cov = [[False] * c.k for _ in range(c.k)]
    for u, v in d.arcs():
        cov[c[u] - 1][c[v] - 1] = True
    return cov


def is_complete_coloring(d: Digraph, c: ColoringLike,
                         mode: PairMode | str = PairMode.ORDERED) -> bool:
    mode = PairMode(mode)
    cov = coverage_matrix(d, c)
    k = len(cov)
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            if mode is PairMode.ORDERED:
                if not cov[i][j]:
                    return False
            elif not (cov[i][j] or cov[j][i]):
                return False
    return True


def is_digrundy_coloring(d: Digraph, c: ColoringLike) -> bool:
    """Acyclic, and every vertex of color j closes a directed cycle with
    each lower class V_i (i < j).
    """
    c = _checked(d, c)
    if not is_acyclic_coloring(d, c):
        return False
    classes = c.classes()
    for v, color in enumerate(c.colors):
        for i in range(color - 1):
            if not has_cycle_through(d, classes[i], v):
                return False
    return True


def format_coloring(c: Coloring) -> str:
    lines = [str(c.k)] + [f"{v} {col}" for v, col in enumerate(c.colors)]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    """Parse ``k`` followed by one ``vertex color`` line per vertex."""
    rows = [(no, line.split()) for no, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise ParseError("missing color count", "line 1")
    no, head = rows[0]
    if len(head) != 1 or not head[0].isdigit():
        raise ParseError("first line must be the color count k", f"line {no}")
    k = int(head[0])
    assigned: dict[int, int] = {}
    for no, parts in rows[1:]:
        if len(parts) != 2:
            raise ParseError("expected 'vertex color'", f"line {no}")
        try:
            v, col = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("expected 'vertex color'", f"line {no}") from None
        if v in assigned:
            raise ParseError(f"vertex {v} colored twice", f"line {no}")
        if not 1 <= col <= k:
            raise ParseError(f"color {col} outside 1..{k}", f"line {no}")
        assigned[v] = col
    n = len(assigned)
    if sorted(assigned) != list(range(n)):
        raise ParseError("vertices must be exactly 0..n-1", f"line {rows[-1][0]}")
    colors = tuple(assigned[v] for v in range(n))
    if max(colors) != k or len(set(colors)) != k:
        raise ParseError(f"declared {k} colors but {len(set(colors))} are used",
                         f"line {rows[0][0]}")
    return Coloring(colors)

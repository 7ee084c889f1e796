"""Loop-free digraphs on at most 64 vertices stored as bit rows.

Vertex ``v`` is bit ``1 << v``. Vertex subsets are accepted either as an
``int`` bitmask or as any iterable of vertex labels.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from dikroma import _backend
from dikroma.errors import ContractError

MAX_VERTICES = 64
ENUMERATION_CAP = 5

VertexSet = Union[int, Iterable[int]]


class Digraph:
    """Immutable labeled digraph; digons allowed, loops forbidden."""

    __slots__ = ("_n", "_out", "_in")

    def __init__(self, n: int, out: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ContractError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(out) != n:
            raise ContractError(f"expected {n} adjacency rows, got {len(out)}")
        full = (1 << n) - 1
        rows = []
        for u, row in enumerate(out):
            row = int(row)
            if row & ~full or row < 0:
                raise ContractError(f"row {u} names a vertex outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ContractError(f"loop at vertex {u}")
            rows.append(row)
        self._n = n
        self._out = tuple(rows)
        inn = [0] * n
        for u, row in enumerate(rows):
            for v in _iter_bits(row):
                inn[v] |= 1 << u
        self._in = tuple(inn)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"loop at vertex {u}")
            out[u] |= 1 << v
        return cls(n, out)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "Digraph":
        n = len(matrix)
        return cls(n, [sum(1 << v for v, bit in enumerate(row) if bit) for row in matrix])

    @property
    def n(self) -> int:
        return self._n

    @property
    def out(self) -> tuple[int, ...]:
        """Out-neighbour bitmask per vertex (row of the bit matrix)."""
        return self._out

    @property
    def inn(self) -> tuple[int, ...]:
        """In-neighbour bitmask per vertex (column of the bit matrix)."""
        return self._in

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self._out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self._out[u] >> v) & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self._out):
            for v in _iter_bits(row):
                yield u, v

    def matrix(self) -> list[list[bool]]:
        return [[bool((row >> v) & 1) for v in range(self._n)] for row in self._out]

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._out == other._out

    def __hash__(self):
        return hash((self._n, self._out))

    def __repr__(self):
        return f"Digraph(n={self._n}, arcs={list(self.arcs())})"


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def as_mask(vertices: VertexSet, n: int) -> int:
    if isinstance(vertices, int):
        mask = vertices
        if mask < 0 or mask >> n:
            raise ContractError(f"vertex mask {mask:#x} exceeds n={n}")
        return mask
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ContractError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def mask_vertices(mask: int) -> list[int]:
    return list(_iter_bits(mask))


def check_ordering(order: Sequence[int], n: int) -> tuple[int, ...]:
    """Validate a vertex ordering (a permutation of 0..n-1)."""
    order = tuple(int(v) for v in order)
    if sorted(order) != list(range(n)):
        raise ContractError(f"ordering {list(order)} is not a permutation of 0..{n - 1}")
    return order


# -- structural queries ---------------------------------------------------------

def complement(d: Digraph) -> Digraph:
    full = (1 << d.n) - 1
    return Digraph(d.n, [full & ~row & ~(1 << u) for u, row in enumerate(d.out)])


def induced(d: Digraph, vertices: VertexSet) -> tuple[Digraph, list[int]]:
    """Induced subdigraph relabeled 0..|S|-1, plus the original labels."""
    keep = mask_vertices(as_mask(vertices, d.n))
    if not keep:
        raise ContractError("induced subdigraph needs at least one vertex")
    pos = {v: i for i, v in enumerate(keep)}
    out = [0] * len(keep)
    for u in keep:
        for v in _iter_bits(d.out[u]):
            if v in pos:
                out[pos[u]] |= 1 << pos[v]
    return Digraph(len(keep), out), keep


def is_acyclic(d: Digraph, vertices: VertexSet | None = None) -> bool:
    """True iff the subdigraph induced by ``vertices`` has no directed cycle.

    A digon counts as a cycle of length two.
    """
    mask = (1 << d.n) - 1 if vertices is None else as_mask(vertices, d.n)
    return _backend.kernels.is_acyclic(d.n, d.out, mask)


def has_cycle_through(d: Digraph, vertices: VertexSet, v: int, check: bool = False) -> bool:
    """True iff D[S + v] has a directed cycle, for an acyclic S not containing v.

    ``check=True`` verifies the preconditions first.
    """
    mask = as_mask(vertices, d.n)
    if not 0 <= v < d.n:
        raise ContractError(f"vertex {v} out of range for n={d.n}")
    if check:
        if (mask >> v) & 1:
            raise ContractError(f"vertex {v} already belongs to the set")
        if not is_acyclic(d, mask):
            raise ContractError("the set must induce an acyclic subdigraph")
    return _backend.kernels.cycle_through(d.n, d.out, mask, v)


class Degrees(NamedTuple):
    out_degree: tuple[int, ...]
    in_degree: tuple[int, ...]
    max_out: int
    max_in: int


def degrees(d: Digraph) -> Degrees:
    outd = tuple(row.bit_count() for row in d.out)
    ind = tuple(col.bit_count() for col in d.inn)
    return Degrees(outd, ind, max(outd), max(ind))


# -- families -------------------------------------------------------------------

def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def family_size(n: int) -> int:
    """Number of labeled loop-free digraphs on n vertices: 4^C(n,2)."""
    return 4 ** pair_count(n)


def digraph_at(n: int, index: int) -> Digraph:
    """The ``index``-th digraph of :func:`enumerate_digraphs`.

    Pairs (u, v) with u < v are numbered lexicographically; pair p is base-4
    digit p of ``index`` (least significant first) with state 0 = no arc,
    1 = u->v, 2 = v->u, 3 = digon.
    """
    if not 0 <= index < family_size(n):
        raise ContractError(f"index {index} outside the n={n} family")
    out = [0] * n
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            state = (index >> (2 * p)) & 3
            if state & 1:
                out[u] |= 1 << v
            if state & 2:
                out[v] |= 1 << u
            p += 1
    return Digraph(n, out)


def index_of(d: Digraph) -> int:
    """Inverse of :func:`digraph_at`."""
    index = 0
    p = 0
    for u in range(d.n):
        for v in range(u + 1, d.n):
            state = ((d.out[u] >> v) & 1) | (((d.out[v] >> u) & 1) << 1)
            index |= state << (2 * p)
            p += 1
    return index


def complement_index(n: int, index: int) -> int:
    """Index of the complement: every pair state s maps to 3 - s."""
    return family_size(n) - 1 - index


def enumerate_digraphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Digraph]:
    """Every labeled digraph on n vertices, in index order, once each."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ContractError(
            f"exhaustive enumeration is limited to 1 <= n <= {ENUMERATION_CAP} "
            f"(n={n} would yield {family_size(n) if n > 0 else 0} digraphs)")
    total = family_size(n)
    stop = total if stop is None else min(stop, total)
    for index in range(start, stop):
        yield digraph_at(n, index)


def random_digraph(n: int, p: float, seed) -> Digraph:
    """Each ordered pair (u, v), u != v, in row-major order gets an arc when
    ``random.Random(seed).random() < p``. Mersenne Twister output for a given
    seed is the same on every platform.
    """
    if not 0.0 <= p <= 1.0:
        raise ContractError(f"arc probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    out = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                out[u] |= 1 << v
    return Digraph(n, out)


# -- named digraphs ----------------------------------------------------------------

def empty(n: int) -> Digraph:
    return Digraph(n, [0] * n)


def complete_symmetric(n: int) -> Digraph:
    full = (1 << n) - 1
    return Digraph(n, [full & ~(1 << u) for u in range(n)])


def directed_cycle(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(u, (u + 1) % n) for u in range(n)])


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(u, u + 1) for u in range(n - 1)])


def symmetric(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Embed an undirected graph by replacing each edge with a digon."""
    arcs = []
    for u, v in edges:
        arcs += [(u, v), (v, u)]
    return Digraph.from_arcs(n, arcs)

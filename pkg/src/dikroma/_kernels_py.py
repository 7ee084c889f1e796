"""Pure-Python bitmask kernels.

Every function here has a twin of the same name and signature in the
compiled ``_kernels`` extension; ``dikroma._backend`` picks one at import.

A digraph is passed as ``(n, out)`` where ``out[u]`` is the bitmask of
out-neighbours of ``u``. Vertex sets are bitmasks. Colorings are lists of
1-based colors indexed by vertex.
"""

from __future__ import annotations

import time
from itertools import permutations

from dikroma.errors import SolverTimeout

_CHECK_EVERY = 1 << 12


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def in_masks(n, out):
    inn = [0] * n
    for u in range(n):
        for v in _bits(out[u]):
            inn[v] |= 1 << u
    return inn


def is_acyclic(n, out, mask):
    """Topological elimination: strip in-degree-zero vertices until stuck."""
    inn = in_masks(n, out)
    rem = mask
    while rem:
        sources = 0
        for u in _bits(rem):
            if not inn[u] & rem:
                sources |= 1 << u
        if not sources:
            return False
        rem &= ~sources
    return True


def cycle_through(n, out, mask, v):
    """True iff some directed walk leaves ``v``, stays inside ``mask`` and returns."""
    mask &= ~(1 << v)
    seen = 0
    stack = out[v] & mask
    while stack:
        low = stack & -stack
        stack ^= low
        if seen & low:
            continue
        seen |= low
        u = low.bit_length() - 1
        if (out[u] >> v) & 1:
            return True
        stack |= out[u] & mask & ~seen
    return False


def acyclic_table(n, out):
    """``tab[S]`` is 1 iff the subdigraph induced by ``S`` has no directed cycle.

    A set with a source is acyclic iff it is acyclic without that source;
    a nonempty set with no source contains a cycle.
    """
    inn = in_masks(n, out)
    tab = bytearray(1 << n)
    tab[0] = 1
    for s in range(1, 1 << n):
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if not inn[low.bit_length() - 1] & s:
                tab[s] = tab[s ^ low]
                break
    return tab


def decode_index(n, idx):
    """Out-masks of the ``idx``-th labeled digraph on ``n`` vertices.

    Pair ``p`` (lexicographic over ``u < v``) owns base-4 digit ``p``:
    bit 0 is the arc u->v, bit 1 the arc v->u.
    """
    out = [0] * n
    p = 0
    for u in range(n):
        for v in range(u + 1, n):
            state = (idx >> (2 * p)) & 3
            if state & 1:
                out[u] |= 1 << v
            if state & 2:
                out[v] |= 1 << u
            p += 1
    return out


class _Clock:
    __slots__ = ("deadline", "ticks")

    def __init__(self, deadline):
        self.deadline = deadline
        self.ticks = 0

    def tick(self):
        self.ticks += 1
        if self.deadline and not self.ticks % _CHECK_EVERY:
            if time.monotonic() > self.deadline:
                raise SolverTimeout("time budget exhausted")


def greedy(n, out, order):
    classes = []
    colors = [0] * n
    for v in order:
        for i, cls in enumerate(classes):
            if not cycle_through(n, out, cls, v):
                classes[i] = cls | (1 << v)
                colors[v] = i + 1
                break
        else:
            classes.append(1 << v)
            colors[v] = len(classes)
    return colors


def greedy_max(n, out):
    """Most colors any ordering gives First-Fit (brute force over n! orders)."""
    best = 0
    for order in permutations(range(n)):
        best = max(best, max(greedy(n, out, order)))
    return best


# -- dichromatic number ------------------------------------------------------

def _dc_fixed(n, tab, k, clock):
    classes = [0] * k
    colors = [0] * n

    def rec(v, used):
        clock.tick()
        if v == n:
            return True
        bit = 1 << v
        for c in range(used):
            grown = classes[c] | bit
            if tab[grown]:
                classes[c] = grown
                colors[v] = c + 1
                if rec(v + 1, used):
                    return True
                classes[c] ^= bit
        if used < k:
            classes[used] = bit
            colors[v] = used + 1
            if rec(v + 1, used + 1):
                return True
            classes[used] = 0
        return False

    return colors if rec(0, 0) else None


def dichromatic(n, out, deadline=0.0):
    tab = acyclic_table(n, out)
    return _dichromatic(n, tab, _Clock(deadline))


def _dichromatic(n, tab, clock):
    for k in range(1, n + 1):
        colors = _dc_fixed(n, tab, k, clock)
        if colors is not None:
            return k, colors
    raise AssertionError("unreachable: n colors always suffice")


# -- complete colorings ------------------------------------------------------

def _popcount(x):
    return bin(x).count("1")


def _complete_fixed(n, out, tab, k, ordered, clock):
    m = sum(_popcount(o) for o in out)
    need = k * (k - 1) if ordered else k * (k - 1) // 2
    if k < 1 or k > n or need > m:
        return None
    # arcs with both ends among the first v vertices
    prefix = [0] * (n + 1)
    for v in range(n):
        low = (1 << v) - 1
        prefix[v + 1] = prefix[v] + _popcount(out[v] & low) + sum(
            (out[u] >> v) & 1 for u in range(v))
    classes = [0] * k
    reach = [0] * k
    colors = [0] * n

    def covered(used):
        cnt = 0
        if ordered:
            for i in range(used):
                r = reach[i]
                for j in range(used):
                    if i != j and r & classes[j]:
                        cnt += 1
        else:
            for i in range(used):
                for j in range(i + 1, used):
                    if reach[i] & classes[j] or reach[j] & classes[i]:
                        cnt += 1
        return cnt

    def rec(v, used):
        clock.tick()
        if used + (n - v) < k:
            return False
        # each missing class pair needs its own arc, and that arc must touch
        # a vertex not yet placed
        if need - covered(used) > m - prefix[v]:
            return False
        if v == n:
            return True
        bit = 1 << v
        for c in range(used):
            grown = classes[c] | bit
            if tab[grown]:
                saved = reach[c]
                classes[c] = grown
                reach[c] = saved | out[v]
                colors[v] = c + 1
                if rec(v + 1, used):
                    return True
                classes[c] ^= bit
                reach[c] = saved
        if used < k:
            classes[used] = bit
            reach[used] = out[v]
            colors[v] = used + 1
            if rec(v + 1, used + 1):
                return True
            classes[used] = 0
            reach[used] = 0
        return False

    return colors if rec(0, 0) else None


def complete_coloring(n, out, k, ordered=True, deadline=0.0):
    """Lexicographically least acyclic complete coloring with exactly k colors."""
    tab = acyclic_table(n, out)
    return _complete_fixed(n, out, tab, k, ordered, _Clock(deadline))


def _clique_number(n, adj):
    best = 0

    def grow(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _popcount(cand) <= best:
            return
        while cand:
            if size + _popcount(cand) <= best:
                return
            low = cand & -cand
            cand ^= low
            grow(size + 1, cand & adj[low.bit_length() - 1])

    grow(0, (1 << n) - 1)
    return best


def dac_upper_bound(n, out, ordered=True):
    """Upper bound on the number of classes of any acyclic complete coloring.

    Singleton classes are pairwise joined (by a digon in ordered mode, by
    some arc otherwise) so there are at most omega of them and every other
    class has two or more vertices. Every arc joins one ordered pair of
    classes, so k(k-1) <= m (ordered) or k(k-1)/2 <= m (unordered).
    """
    inn = in_masks(n, out)
    if ordered:
        adj = [out[u] & inn[u] for u in range(n)]
    else:
        adj = [out[u] | inn[u] for u in range(n)]
    omega = _clique_number(n, adj)
    m = sum(_popcount(o) for o in out)
    ub = min(n, (n + omega) // 2)
    while ub > 1 and (ub * (ub - 1) if ordered else ub * (ub - 1) // 2) > m:
        ub -= 1
    return ub


def diachromatic(n, out, ordered=True, lower=1, deadline=0.0):
    tab = acyclic_table(n, out)
    return _diachromatic(n, out, tab, ordered, lower, _Clock(deadline))


def _diachromatic(n, out, tab, ordered, lower, clock):
    for k in range(dac_upper_bound(n, out, ordered), max(lower, 1) - 1, -1):
        colors = _complete_fixed(n, out, tab, k, ordered, clock)
        if colors is not None:
            return k, colors
    raise AssertionError(f"no complete coloring with >= {lower} colors")


# -- digrundy colorings --------------------------------------------------------

def _grundy_memo(n, tab, clock):
    """Map each visited vertex set R to the bitmask of class counts achievable
    by digrundy partitions of D[R] (bit k set <=> k classes possible).

    A digrundy partition of D[R] is a maximal acyclic subset A of D[R]
    followed by a digrundy partition of D[R - A].
    """
    memo = {}

    def maximal(a, r):
        rest = r ^ a
        while rest:
            low = rest & -rest
            rest ^= low
            if tab[a | low]:
                return False
        return True

    def h(r):
        got = memo.get(r)
        if got is not None:
            return got
        if tab[r]:
            res = 2
        else:
            res = 0
            a = (r - 1) & r
            while a:
                clock.tick()
                if tab[a] and maximal(a, r):
                    res |= h(r ^ a) << 1
                a = (a - 1) & r
        memo[r] = res
        return res

    h((1 << n) - 1)
    return memo, maximal


def digrundy_spectrum(n, out, deadline=0.0):
    """Every k admitting a digrundy coloring, with one witness each."""
    tab = acyclic_table(n, out)
    memo, maximal = _grundy_memo(n, tab, _Clock(deadline))
    full = (1 << n) - 1
    spectrum = memo[full]
    result = {}
    for k in range(1, n + 1):
        if not (spectrum >> k) & 1:
            continue
        colors = [0] * n
        r, need, color = full, k, 1
        while r:
            if need == 1 and tab[r]:
                a = r
            else:
                a = (r - 1) & r
                while a:
                    if tab[a] and maximal(a, r) and (memo[r ^ a] >> (need - 1)) & 1:
                        break
                    a = (a - 1) & r
            for v in _bits(a):
                colors[v] = color
            r ^= a
            need -= 1
            color += 1
        result[k] = colors
    return result


def digrundy_mask(n, out, deadline=0.0):
    tab = acyclic_table(n, out)
    memo, _ = _grundy_memo(n, tab, _Clock(deadline))
    return memo[(1 << n) - 1]


# -- parsimonious colorings ----------------------------------------------------

def parsimonious(n, out, order, deadline=0.0):
    """Fewest colors over all parsimonious runs along ``order``.

    Returns ``(k, trace)`` where ``trace[i]`` is the color chosen at step i;
    the trace is the lexicographically least optimal one.
    """
    clock = _Clock(deadline)
    best = n + 1
    best_trace = None
    trace = [0] * n
    classes = []

    def rec(i):
        nonlocal best, best_trace
        clock.tick()
        used = len(classes)
        if used >= best:
            return
        if i == n:
            best = used
            best_trace = list(trace)
            return
        v = order[i]
        bit = 1 << v
        admissible = [c for c in range(used)
                      if not cycle_through(n, out, classes[c], v)]
        if admissible:
            for c in admissible:
                classes[c] |= bit
                trace[i] = c + 1
                rec(i + 1)
                classes[c] ^= bit
        else:
            classes.append(bit)
            trace[i] = used + 1
            rec(i + 1)
            classes.pop()

    rec(0)
    return best, best_trace


def diochromatic(n, out, deadline=0.0):
    best = 0
    for order in permutations(range(n)):
        k, _ = parsimonious(n, out, order, deadline)
        best = max(best, k)
    return best


# -- batch drivers -------------------------------------------------------------

def params(n, out, ordered=True, deadline=0.0):
    """``(dc, dg, dac, spectrum)`` for one digraph."""
    clock = _Clock(deadline)
    tab = acyclic_table(n, out)
    dc, _ = _dichromatic(n, tab, clock)
    memo, _ = _grundy_memo(n, tab, clock)
    spectrum = memo[(1 << n) - 1]
    dg = spectrum.bit_length() - 1
    dac, _ = _diachromatic(n, out, tab, ordered, 1, clock)
    return dc, dg, dac, spectrum


def degree_cap(n, out):
    """min(max out-degree, max in-degree) + 1."""
    inn = in_masks(n, out)
    return min(max(_popcount(o) for o in out), max(_popcount(c) for c in inn)) + 1


def exhaustive_params(n, start, stop, ordered=True):
    """Columns ``(dc, dg, dac, spectrum, degree_cap)`` for indices in [start, stop)."""
    return batch_params(n, (decode_index(n, idx) for idx in range(start, stop)), ordered)


def batch_params(n, outs, ordered=True):
    cols = ([], [], [], [], [])
    for out in outs:
        out = list(out)
        row = params(n, out, ordered) + (degree_cap(n, out),)
        for col, value in zip(cols, row):
            col.append(value)
    return cols

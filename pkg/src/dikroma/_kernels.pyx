# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same API as ``dikroma._kernels_py``."""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, calloc, free

import time
from itertools import permutations

from dikroma.errors import SolverTimeout

cdef enum:
    MAXN = 64
    CHECK_EVERY = 65536


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef struct Clock:
    double deadline
    long long ticks


cdef int clock_tick(Clock* clk) except -1:
    clk.ticks += 1
    if clk.deadline > 0 and (clk.ticks % CHECK_EVERY) == 0:
        if time.monotonic() > clk.deadline:
            raise SolverTimeout("time budget exhausted")
    return 0


cdef int load(int n, out, uint64_t* buf) except -1:
    cdef int u
    if n < 1 or n > MAXN:
        raise ValueError("n out of range")
    for u in range(n):
        buf[u] = <uint64_t>int(out[u])
    return 0


cdef inline uint64_t full_mask(int n) nogil:
    if n == 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef void make_in(int n, const uint64_t* out, uint64_t* inn) nogil:
    cdef int u
    cdef uint64_t rest, low
    for u in range(n):
        inn[u] = 0
    for u in range(n):
        rest = out[u]
        while rest:
            low = rest & (~rest + 1)
            rest ^= low
            inn[ctz(low)] |= (<uint64_t>1) << u


cdef bint c_cycle_through(int n, const uint64_t* out, uint64_t mask, int v) nogil:
    cdef uint64_t seen = 0, stack, low
    cdef int u
    mask &= ~((<uint64_t>1) << v)
    stack = out[v] & mask
    while stack:
        low = stack & (~stack + 1)
        stack ^= low
        if seen & low:
            continue
        seen |= low
        u = ctz(low)
        if (out[u] >> v) & 1:
            return True
        stack |= out[u] & mask & ~seen
    return False


cdef uint8_t* c_table(int n, const uint64_t* out) except NULL:
    cdef uint64_t inn[MAXN]
    cdef uint64_t s, rest, low, size
    cdef uint8_t* tab
    if n > 26:
        raise ValueError("acyclic table limited to n <= 26")
    make_in(n, out, inn)
    size = (<uint64_t>1) << n
    tab = <uint8_t*>malloc(size)
    if tab == NULL:
        raise MemoryError()
    tab[0] = 1
    for s in range(1, size):
        tab[s] = 0
        rest = s
        while rest:
            low = rest & (~rest + 1)
            rest ^= low
            if not (inn[ctz(low)] & s):
                tab[s] = tab[s ^ low]
                break
    return tab


def in_masks(int n, out):
    cdef uint64_t buf[MAXN]
    cdef uint64_t inn[MAXN]
    load(n, out, buf)
    make_in(n, buf, inn)
    return [inn[u] for u in range(n)]


def is_acyclic(int n, out, mask):
    cdef uint64_t buf[MAXN]
    cdef uint64_t inn[MAXN]
    cdef uint64_t rem = <uint64_t>int(mask), sources, rest, low
    load(n, out, buf)
    make_in(n, buf, inn)
    while rem:
        sources = 0
        rest = rem
        while rest:
            low = rest & (~rest + 1)
            rest ^= low
            if not (inn[ctz(low)] & rem):
                sources |= low
        if not sources:
            return False
        rem &= ~sources
    return True


def cycle_through(int n, out, mask, int v):
    cdef uint64_t buf[MAXN]
    load(n, out, buf)
    return c_cycle_through(n, buf, <uint64_t>int(mask), v)


def acyclic_table(int n, out):
    cdef uint64_t buf[MAXN]
    cdef uint8_t* tab
    load(n, out, buf)
    tab = c_table(n, buf)
    try:
        return bytearray((<char*>tab)[:(<uint64_t>1) << n])
    finally:
        free(tab)


cdef void c_decode(int n, uint64_t idx, uint64_t* out) nogil:
    cdef int u, v, p = 0
    cdef uint64_t state
    for u in range(n):
        out[u] = 0
    for u in range(n):
        for v in range(u + 1, n):
            state = (idx >> (2 * p)) & 3
            if state & 1:
                out[u] |= (<uint64_t>1) << v
            if state & 2:
                out[v] |= (<uint64_t>1) << u
            p += 1


def decode_index(int n, idx):
    cdef uint64_t buf[MAXN]
    if n > 8:
        raise ValueError("index decoding limited to n <= 8")
    c_decode(n, <uint64_t>int(idx), buf)
    return [buf[u] for u in range(n)]


# -- greedy ------------------------------------------------------------------

def greedy(int n, out, order):
    cdef uint64_t buf[MAXN]
    cdef uint64_t classes[MAXN]
    cdef int used = 0, i, v
    load(n, out, buf)
    colors = [0] * n
    for v in order:
        for i in range(used):
            if not c_cycle_through(n, buf, classes[i], v):
                classes[i] |= (<uint64_t>1) << v
                colors[v] = i + 1
                break
        else:
            classes[used] = (<uint64_t>1) << v
            used += 1
            colors[v] = used
    return colors


cdef int c_greedy_count(int n, const uint64_t* out, const int* order) nogil:
    cdef uint64_t classes[MAXN]
    cdef int used = 0, i, j, v
    cdef bint placed
    for j in range(n):
        v = order[j]
        placed = False
        for i in range(used):
            if not c_cycle_through(n, out, classes[i], v):
                classes[i] |= (<uint64_t>1) << v
                placed = True
                break
        if not placed:
            classes[used] = (<uint64_t>1) << v
            used += 1
    return used


def greedy_max(int n, out):
    cdef uint64_t buf[MAXN]
    cdef int order[MAXN]
    cdef int best = 0, got, i
    load(n, out, buf)
    for perm in permutations(range(n)):
        for i in range(n):
            order[i] = perm[i]
        got = c_greedy_count(n, buf, order)
        if got > best:
            best = got
    return best


# -- dichromatic number ----------------------------------------------------

cdef struct DcState:
    int n
    int k
    const uint8_t* tab
    uint64_t classes[MAXN]
    int colors[MAXN]
    Clock* clk


cdef int dc_rec(DcState* st, int v, int used) except -1:
    cdef uint64_t bit, grown
    cdef int c
    clock_tick(st.clk)
    if v == st.n:
        return 1
    bit = (<uint64_t>1) << v
    for c in range(used):
        grown = st.classes[c] | bit
        if st.tab[grown]:
            st.classes[c] = grown
            st.colors[v] = c + 1
            if dc_rec(st, v + 1, used):
                return 1
            st.classes[c] ^= bit
    if used < st.k:
        st.classes[used] = bit
        st.colors[v] = used + 1
        if dc_rec(st, v + 1, used + 1):
            return 1
        st.classes[used] = 0
    return 0


cdef int c_dichromatic(int n, const uint8_t* tab, Clock* clk, int* colors) except -1:
    cdef DcState st
    cdef int k, i
    st.n = n
    st.tab = tab
    st.clk = clk
    for k in range(1, n + 1):
        st.k = k
        for i in range(n):
            st.classes[i] = 0
        if dc_rec(&st, 0, 0):
            if colors != NULL:
                for i in range(n):
                    colors[i] = st.colors[i]
            return k
    return -1


def dichromatic(int n, out, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef int colors[MAXN]
    cdef Clock clk
    cdef uint8_t* tab
    cdef int k
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    tab = c_table(n, buf)
    try:
        k = c_dichromatic(n, tab, &clk, colors)
    finally:
        free(tab)
    return k, [colors[i] for i in range(n)]


# -- complete colorings -----------------------------------------------------

cdef struct CompState:
    int n
    int k
    int need
    int m
    bint ordered
    const uint64_t* out
    const uint8_t* tab
    int prefix[MAXN + 1]
    uint64_t classes[MAXN]
    uint64_t reach[MAXN]
    int colors[MAXN]
    Clock* clk


cdef int comp_covered(CompState* st, int used) nogil:
    cdef int i, j, cnt = 0
    cdef uint64_t r
    if st.ordered:
        for i in range(used):
            r = st.reach[i]
            for j in range(used):
                if i != j and (r & st.classes[j]):
                    cnt += 1
    else:
        for i in range(used):
            for j in range(i + 1, used):
                if (st.reach[i] & st.classes[j]) or (st.reach[j] & st.classes[i]):
                    cnt += 1
    return cnt


cdef int comp_rec(CompState* st, int v, int used) except -1:
    cdef uint64_t bit, grown, saved
    cdef int c
    clock_tick(st.clk)
    if used + (st.n - v) < st.k:
        return 0
    # each missing class pair needs its own arc, and that arc must touch a
    # vertex not yet placed
    if st.need - comp_covered(st, used) > st.m - st.prefix[v]:
        return 0
    if v == st.n:
        return 1
    bit = (<uint64_t>1) << v
    for c in range(used):
        grown = st.classes[c] | bit
        if st.tab[grown]:
            saved = st.reach[c]
            st.classes[c] = grown
            st.reach[c] = saved | st.out[v]
            st.colors[v] = c + 1
            if comp_rec(st, v + 1, used):
                return 1
            st.classes[c] ^= bit
            st.reach[c] = saved
    if used < st.k:
        st.classes[used] = bit
        st.reach[used] = st.out[v]
        st.colors[v] = used + 1
        if comp_rec(st, v + 1, used + 1):
            return 1
        st.classes[used] = 0
        st.reach[used] = 0
    return 0


cdef int c_complete_fixed(int n, const uint64_t* out, const uint8_t* tab, int k,
                          bint ordered, Clock* clk, int* colors) except -1:
    cdef CompState st
    cdef int v, u, i
    cdef uint64_t low
    st.m = 0
    for u in range(n):
        st.m += popc(out[u])
    st.need = k * (k - 1) if ordered else k * (k - 1) // 2
    if k < 1 or k > n or st.need > st.m:
        return 0
    st.n = n
    st.k = k
    st.ordered = ordered
    st.out = out
    st.tab = tab
    st.clk = clk
    st.prefix[0] = 0
    for v in range(n):
        low = ((<uint64_t>1) << v) - 1
        st.prefix[v + 1] = st.prefix[v] + popc(out[v] & low)
        for u in range(v):
            st.prefix[v + 1] += <int>((out[u] >> v) & 1)
    for i in range(n):
        st.classes[i] = 0
        st.reach[i] = 0
    if comp_rec(&st, 0, 0):
        if colors != NULL:
            for i in range(n):
                colors[i] = st.colors[i]
        return 1
    return 0


def complete_coloring(int n, out, int k, bint ordered=True, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef int colors[MAXN]
    cdef Clock clk
    cdef uint8_t* tab
    cdef int found
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    tab = c_table(n, buf)
    try:
        found = c_complete_fixed(n, buf, tab, k, ordered, &clk, colors)
    finally:
        free(tab)
    if not found:
        return None
    return [colors[i] for i in range(n)]


cdef void clique_grow(const uint64_t* adj, int size, uint64_t cand, int* best) nogil:
    cdef uint64_t low
    if not cand:
        if size > best[0]:
            best[0] = size
        return
    while cand:
        if size + popc(cand) <= best[0]:
            return
        low = cand & (~cand + 1)
        cand ^= low
        clique_grow(adj, size + 1, cand & adj[ctz(low)], best)


cdef int c_dac_upper(int n, const uint64_t* out, bint ordered) nogil:
    cdef uint64_t inn[MAXN]
    cdef uint64_t adj[MAXN]
    cdef int u, omega = 0, m = 0, ub
    make_in(n, out, inn)
    for u in range(n):
        adj[u] = (out[u] & inn[u]) if ordered else (out[u] | inn[u])
        m += popc(out[u])
    clique_grow(adj, 0, full_mask(n), &omega)
    ub = (n + omega) // 2
    if ub > n:
        ub = n
    while ub > 1 and (ub * (ub - 1) if ordered else ub * (ub - 1) // 2) > m:
        ub -= 1
    return ub


def dac_upper_bound(int n, out, bint ordered=True):
    cdef uint64_t buf[MAXN]
    load(n, out, buf)
    return c_dac_upper(n, buf, ordered)


cdef int c_diachromatic(int n, const uint64_t* out, const uint8_t* tab, bint ordered,
                        int lower, Clock* clk, int* colors) except -1:
    cdef int k
    if lower < 1:
        lower = 1
    k = c_dac_upper(n, out, ordered)
    while k >= lower:
        if c_complete_fixed(n, out, tab, k, ordered, clk, colors):
            return k
        k -= 1
    raise AssertionError(f"no complete coloring with >= {lower} colors")


def diachromatic(int n, out, bint ordered=True, int lower=1, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef int colors[MAXN]
    cdef Clock clk
    cdef uint8_t* tab
    cdef int k
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    tab = c_table(n, buf)
    try:
        k = c_diachromatic(n, buf, tab, ordered, lower, &clk, colors)
    finally:
        free(tab)
    return k, [colors[i] for i in range(n)]


# -- digrundy colorings ------------------------------------------------------

cdef inline bint is_maximal(const uint8_t* tab, uint64_t a, uint64_t r) nogil:
    cdef uint64_t rest = r ^ a, low
    while rest:
        low = rest & (~rest + 1)
        rest ^= low
        if tab[a | low]:
            return False
    return True


cdef uint64_t grundy_h(const uint8_t* tab, uint64_t* memo, uint64_t r,
                       Clock* clk) except? 0:
    # memo[r] == 0 means "not computed": every nonempty set has a partition
    cdef uint64_t res, a
    if memo[r]:
        return memo[r]
    if tab[r]:
        res = 2
    else:
        res = 0
        a = (r - 1) & r
        while a:
            clock_tick(clk)
            if tab[a] and is_maximal(tab, a, r):
                res |= grundy_h(tab, memo, r ^ a, clk) << 1
            a = (a - 1) & r
    memo[r] = res
    return res


cdef uint64_t* c_grundy(int n, const uint8_t* tab, Clock* clk) except NULL:
    cdef uint64_t* memo
    if n > 24:
        raise ValueError("digrundy search limited to n <= 24")
    memo = <uint64_t*>calloc((<uint64_t>1) << n, sizeof(uint64_t))
    if memo == NULL:
        raise MemoryError()
    try:
        grundy_h(tab, memo, full_mask(n), clk)
    except BaseException:
        free(memo)
        raise
    return memo


def digrundy_mask(int n, out, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef Clock clk
    cdef uint8_t* tab
    cdef uint64_t* memo
    cdef uint64_t res
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    tab = c_table(n, buf)
    try:
        memo = c_grundy(n, tab, &clk)
        res = memo[full_mask(n)]
        free(memo)
    finally:
        free(tab)
    return res


def digrundy_spectrum(int n, out, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef Clock clk
    cdef uint8_t* tab
    cdef uint64_t* memo = NULL
    cdef uint64_t full, spectrum, r, a, rest, low
    cdef int k, need, color
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    tab = c_table(n, buf)
    result = {}
    try:
        memo = c_grundy(n, tab, &clk)
        full = full_mask(n)
        spectrum = memo[full]
        for k in range(1, n + 1):
            if not ((spectrum >> k) & 1):
                continue
            colors = [0] * n
            r = full
            need = k
            color = 1
            while r:
                if need == 1 and tab[r]:
                    a = r
                else:
                    a = (r - 1) & r
                    while a:
                        if (tab[a] and is_maximal(tab, a, r)
                                and (grundy_h(tab, memo, r ^ a, &clk) >> (need - 1)) & 1):
                            break
                        a = (a - 1) & r
                rest = a
                while rest:
                    low = rest & (~rest + 1)
                    rest ^= low
                    colors[ctz(low)] = color
                r ^= a
                need -= 1
                color += 1
            result[k] = colors
    finally:
        free(tab)
        if memo != NULL:
            free(memo)
    return result


# -- parsimonious colorings --------------------------------------------------

cdef struct ParsState:
    int n
    const uint64_t* out
    const int* order
    uint64_t classes[MAXN]
    int trace[MAXN]
    int best_trace[MAXN]
    int best
    Clock* clk


cdef int pars_rec(ParsState* st, int i, int used) except -1:
    cdef int v, c
    cdef uint64_t bit
    cdef bint any_adm = False
    clock_tick(st.clk)
    if used >= st.best:
        return 0
    if i == st.n:
        st.best = used
        for c in range(st.n):
            st.best_trace[c] = st.trace[c]
        return 0
    v = st.order[i]
    bit = (<uint64_t>1) << v
    for c in range(used):
        if not c_cycle_through(st.n, st.out, st.classes[c], v):
            any_adm = True
            st.classes[c] |= bit
            st.trace[i] = c + 1
            pars_rec(st, i + 1, used)
            st.classes[c] ^= bit
    if not any_adm:
        st.classes[used] = bit
        st.trace[i] = used + 1
        pars_rec(st, i + 1, used + 1)
        st.classes[used] = 0
    return 0


cdef int c_parsimonious(int n, const uint64_t* out, const int* order, Clock* clk,
                        int* trace) except -1:
    cdef ParsState st
    cdef int i
    st.n = n
    st.out = out
    st.order = order
    st.best = n + 1
    st.clk = clk
    for i in range(n):
        st.classes[i] = 0
    pars_rec(&st, 0, 0)
    if trace != NULL:
        for i in range(n):
            trace[i] = st.best_trace[i]
    return st.best


def parsimonious(int n, out, order, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef int corder[MAXN]
    cdef int trace[MAXN]
    cdef Clock clk
    cdef int k, i
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    for i in range(n):
        corder[i] = order[i]
    k = c_parsimonious(n, buf, corder, &clk, trace)
    return k, [trace[i] for i in range(n)]


def diochromatic(int n, out, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef int corder[MAXN]
    cdef Clock clk
    cdef int best = 0, k, i
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    for perm in permutations(range(n)):
        for i in range(n):
            corder[i] = perm[i]
        k = c_parsimonious(n, buf, corder, &clk, NULL)
        if k > best:
            best = k
    return best


# -- batch drivers -------------------------------------------------------------

cdef int c_params(int n, const uint64_t* out, bint ordered, Clock* clk,
                  int* dc, int* dg, int* dac, uint64_t* spectrum) except -1:
    cdef uint8_t* tab = c_table(n, out)
    cdef uint64_t* memo = NULL
    try:
        dc[0] = c_dichromatic(n, tab, clk, NULL)
        memo = c_grundy(n, tab, clk)
        spectrum[0] = memo[full_mask(n)]
        dg[0] = 63 - __builtin_clzll(spectrum[0])
        dac[0] = c_diachromatic(n, out, tab, ordered, 1, clk, NULL)
    finally:
        free(tab)
        if memo != NULL:
            free(memo)
    return 0


def params(int n, out, bint ordered=True, double deadline=0.0):
    cdef uint64_t buf[MAXN]
    cdef Clock clk
    cdef int dc, dg, dac
    cdef uint64_t spectrum
    clk.deadline = deadline
    clk.ticks = 0
    load(n, out, buf)
    c_params(n, buf, ordered, &clk, &dc, &dg, &dac, &spectrum)
    return dc, dg, dac, spectrum


cdef int c_degree_cap(int n, const uint64_t* out) nogil:
    cdef uint64_t inn[MAXN]
    cdef int u, dout = 0, din = 0
    make_in(n, out, inn)
    for u in range(n):
        if popc(out[u]) > dout:
            dout = popc(out[u])
        if popc(inn[u]) > din:
            din = popc(inn[u])
    return (dout if dout < din else din) + 1


def degree_cap(int n, out):
    cdef uint64_t buf[MAXN]
    load(n, out, buf)
    return c_degree_cap(n, buf)


cdef _append_row(tuple cols, int n, const uint64_t* buf, bint ordered, Clock* clk):
    cdef int dc, dg, dac
    cdef uint64_t spectrum
    c_params(n, buf, ordered, clk, &dc, &dg, &dac, &spectrum)
    (<list>cols[0]).append(dc)
    (<list>cols[1]).append(dg)
    (<list>cols[2]).append(dac)
    (<list>cols[3]).append(spectrum)
    (<list>cols[4]).append(c_degree_cap(n, buf))


def exhaustive_params(int n, start, stop, bint ordered=True):
    cdef uint64_t buf[MAXN]
    cdef Clock clk
    cdef uint64_t idx
    cdef uint64_t lo = <uint64_t>int(start), hi = <uint64_t>int(stop)
    if n > 8:
        raise ValueError("index decoding limited to n <= 8")
    clk.deadline = 0
    clk.ticks = 0
    cols = ([], [], [], [], [])
    idx = lo
    while idx < hi:
        c_decode(n, idx, buf)
        _append_row(cols, n, buf, ordered, &clk)
        idx += 1
    return cols


def batch_params(int n, outs, bint ordered=True):
    cdef uint64_t buf[MAXN]
    cdef Clock clk
    clk.deadline = 0
    clk.ticks = 0
    cols = ([], [], [], [], [])
    for out in outs:
        load(n, out, buf)
        _append_row(cols, n, buf, ordered, &clk)
    return cols

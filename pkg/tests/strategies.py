from hypothesis import strategies as st

from dikroma.digraph import Digraph


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    rows = []
    for u in range(n):
        row = draw(st.integers(0, (1 << n) - 1))
        rows.append(row & ~(1 << u))
    return Digraph(n, rows)

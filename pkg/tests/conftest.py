import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from wellcovered import build_graph


@st.composite
def graphs(draw, min_order=0, max_order=8):
    """Random simple graphs as edge subsets of the complete graph."""
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    return build_graph(n, edges)

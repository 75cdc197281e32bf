from itertools import combinations

from hypothesis import strategies as st

from eoram.core import EdgeOrderedGraph


@st.composite
def edge_ordered_graphs(draw, min_n=1, max_n=5, min_m=0):
    n = draw(st.integers(min_n, max_n))
    allpairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(allpairs), unique=True, min_size=min(min_m, len(allpairs))) if allpairs else st.just([]))
    chosen = draw(st.permutations(chosen))
    return EdgeOrderedGraph.from_edge_order(n, chosen)

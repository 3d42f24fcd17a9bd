"""
Depth bounds and how far apart they can drift
=============================================

Every graph gets a combinatorial lower bound and, when it is connected and
not complete, an upper bound from its vertex connectivity. This walk-through
compares the two on cycles, triangle chains and one graph where neither is
attained.
"""

from gbei import SimpleGraph, report
from gbei.fixtures import FIGURES, triangle_chain_graph

# %%
# Even cycles: the exact depth sits on the upper bound, and the gap to the
# lower bound grows by one with every extra pair of vertices.

for k in (2, 3, 4, 5):
    rep = report(2, SimpleGraph.cycle(2 * k))
    print(f"C_{2 * k:<2d} lower={rep.lower} upper={rep.upper} exact={rep.exact} ({rep.exact_source})")

# %%
# Alternating triangle chains go the other way: the lower bound is exact and
# the upper bound drifts away.

for k in (2, 3, 4):
    rep = report(3, triangle_chain_graph(2 * k))
    print(f"chain of {2 * k} triangles: {rep.gap_notes}")

# %%
# The seven-vertex graph ``fig5`` has no closed form. The exact value comes
# from the oracle and lands strictly between the bounds.

rep = report(2, FIGURES["fig5"], oracle=True)
print(rep.lower, rep.exact, rep.upper, rep.gap_notes)

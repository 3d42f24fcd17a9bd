"""
Recognising the solved graph classes
====================================

The closed forms only apply once a graph is known to belong to one of a few
families. ``classify`` runs every recognizer and returns witnesses.
"""

import json

from gbei import classify, complete_at_set, is_in_h2, strongly_unmixed_certificate
from gbei.fixtures import FIGURES
from gbei.graph import SimpleGraph

# %%
# Two 4-cliques glued along a triangle: every pair of maximal cliques meets
# in the same clique, and that clique is the witness.

print(classify(FIGURES["fig1"]).witnesses["H1"])

# %%
# Completing the hexagon at a few vertices keeps it in the cycle family.
# The recognizer recovers a Hamiltonian cycle and a completion set.

g = complete_at_set(SimpleGraph.cycle(6), {1, 2, 4}).result
print(g == FIGURES["fig2"], is_in_h2(g).as_dict())

# %%
# Strong unmixedness is recursive; the certificate records the cut vertex
# chosen at every level.

print(json.dumps(strongly_unmixed_certificate(SimpleGraph.path(4)), indent=1))

"""
Checking a depth by brute force
===============================

For small ``m * n`` the oracle computes the depth from scratch: a reduced
Gröbner basis, its squarefree initial ideal, the Stanley-Reisner complex,
and a homology scan for the projective dimension.
"""

from gbei import depth_oracle
from gbei.fixtures import FIGURES
from gbei.symbolic import build_ideal, export_cas

# %%
# The certificate names the vertex subset and homology dimension that
# realise the projective dimension.

cert = depth_oracle(2, FIGURES["fig4"])
print(cert.depth, cert.pd, cert.maximizing_subset, cert.homology_dim)
print(len(cert.leading_terms), "leading terms, e.g.", cert.leading_terms[:3])

# %%
# Anything larger can be handed to a computer algebra system.

ideal = build_ideal(3, FIGURES["fig1"])
print(export_cas(ideal.generators, ideal.ring, "macaulay2", title="fig1, m = 3"))

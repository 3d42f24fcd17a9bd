"""Exact depth of ``S/J_{K_m,G}`` for small instances.

Pipeline: reduced Gröbner basis -> squarefree initial ideal ->
Stanley–Reisner complex -> projective dimension from induced-subcomplex
homology -> depth = m*n - pd (Auslander–Buchsbaum).
"""

from dataclasses import dataclass, field

from .caps import check_cap, get_caps
from .graph import bits
from .simplicial import projective_dimension, stanley_reisner
from .errors import NotSquarefree
from .symbolic import build_ideal, default_order, groebner_basis

ASSUMPTIONS = (
    "depth(S/J) = depth(S/in(J)) when in(J) is squarefree (Conca-Varbaro)",
    "homology computed over QQ (characteristic 0 only)",
)


@dataclass
class OracleCertificate:
    m: int
    n: int
    depth: int
    pd: int
    order: str
    leading_terms: list
    maximizing_subset: list  # variable names
    homology_dim: int
    subsets_examined: int
    assumptions: tuple = field(default=ASSUMPTIONS)

    def as_dict(self):
        return {
            "depth": self.depth, "pd": self.pd, "order": self.order,
            "maximizingSubset": self.maximizing_subset, "homologyDim": self.homology_dim,
            "leadingTerms": self.leading_terms, "subsetsExamined": self.subsets_examined,
            "assumptionFlags": list(self.assumptions),
        }


def depth_oracle(m, g, order=None, caps=None):
    """Depth of ``S/J_{K_m,G}`` with a certificate.

    Raises ``NotSquarefree`` when the chosen order gives a non-squarefree
    initial ideal; there is no silent fallback to another order.
    """
    caps = caps or get_caps()
    order = order or default_order()
    nvars = m * g.n
    check_cap("oracle variables (m*n)", nvars, caps.oracle_vars)
    ideal = build_ideal(m, g, order)
    ring = ideal.ring
    gb = groebner_basis(ideal.generators, order, caps=caps)
    lead = [p.leading_monomial(order) for p in gb]
    if any(e > 1 for lm in lead for e in lm):
        raise NotSquarefree(f"initial ideal under {order.name} is not squarefree")
    cx = stanley_reisner(lead, nvars)
    res = projective_dimension(cx, cap=caps.oracle_vars)
    lead_text = ["*".join(ring.name(i) for i, e in enumerate(lm) if e) for lm in lead]
    return OracleCertificate(
        m=m, n=g.n, depth=nvars - res.pd, pd=res.pd, order=order.name,
        leading_terms=lead_text,
        maximizing_subset=[ring.name(i) for i in bits(res.subset)],
        homology_dim=res.dim, subsets_examined=res.subsets_examined,
    )


def oracle_depth(m, g, **kw):
    return depth_oracle(m, g, **kw).depth

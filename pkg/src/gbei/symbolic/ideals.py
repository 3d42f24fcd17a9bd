"""Generalized binomial edge ideals, their prime components, intersections
and initial ideals, in the polynomial ring on an ``m x n`` matrix of
variables ``x[i,j]``."""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..cutsets import prime_component_support
from .groebner import groebner_basis
from .polynomial import EliminationOrder, MonomialOrder, Polynomial


class MatrixRing:
    """Variables ``x[i,j]``, ``1 <= i <= m``, ``1 <= j <= n``, row-major."""

    def __init__(self, m, n):
        self.m = m
        self.n = n
        self.nvars = m * n

    def index(self, i, j):
        return (i - 1) * self.n + (j - 1)

    def position(self, idx):
        return idx // self.n + 1, idx % self.n + 1

    def name(self, idx):
        i, j = self.position(idx)
        return f"x[{i},{j}]"

    def var(self, i, j):
        return Polynomial.variable(self.nvars, self.index(i, j))

    def minor(self, i, j, k, l):
        """``x[i,k] x[j,l] - x[i,l] x[j,k]`` (rows i<j, columns k<l)."""
        return self.var(i, k) * self.var(j, l) - self.var(i, l) * self.var(j, k)

    def __eq__(self, other):
        return isinstance(other, MatrixRing) and (self.m, self.n) == (other.m, other.n)

    def __hash__(self):
        return hash((self.m, self.n))


def default_order():
    """Degrevlex with ``x[1,1] > x[1,2] > ... > x[m,n]``.

    Under this order the anti-diagonal term ``x[i,l] x[j,k]`` of each 2-minor
    leads (it avoids the smallest variable ``x[j,l]``); ``MonomialOrder("lex")``
    makes the diagonal lead instead.
    """
    return MonomialOrder("degrevlex")


@dataclass
class BinomialIdeal:
    ring: MatrixRing
    generators: list
    provenance: str = "derived"

    def __len__(self):
        return len(self.generators)


def build_ideal(m, g, order=None):
    """``J_{K_m,G}``: one 2-minor per pair (row pair of K_m, edge of G)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    order = order or default_order()
    ring = MatrixRing(m, g.n)
    gens = [ring.minor(i, j, k, l).monic(order)
            for i, j in combinations(range(1, m + 1), 2)
            for k, l in g.sorted_edges()]
    return BinomialIdeal(ring, gens, "J(K_m,G)")


@dataclass
class PrimeComponent:
    T: frozenset
    ring: MatrixRing
    linear_generators: list
    minor_blocks: list  # one list of 2-minors per component of G - T
    blocks: list  # the column sets of those components

    @property
    def generators(self):
        return self.linear_generators + [p for block in self.minor_blocks for p in block]

    def ideal(self):
        return BinomialIdeal(self.ring, self.generators, "P_T")


def build_prime_component(m, g, T, order=None):
    """``P_T``: the variables of columns in ``T`` plus all 2-minors on the
    column set of each component of ``G - T``."""
    order = order or default_order()
    blocks = prime_component_support(g, T)
    ring = MatrixRing(m, g.n)
    linear = [ring.var(i, v) for v in sorted(T) for i in range(1, m + 1)]
    minors = []
    for block in blocks:
        cols = sorted(block)
        minors.append([ring.minor(i, j, k, l).monic(order)
                       for i, j in combinations(range(1, m + 1), 2)
                       for k, l in combinations(cols, 2)])
    return PrimeComponent(frozenset(T), ring, linear, minors, [sorted(b) for b in blocks])


def intersect(gens_a, gens_b, order=None, **kw):
    """Generators (a Gröbner basis) of ``A ∩ B`` by eliminating ``t`` from
    ``t A + (1 - t) B``."""
    order = order or default_order()
    a = [p for p in gens_a if p]
    b = [p for p in gens_b if p]
    if not a or not b:
        return []
    nvars = a[0].nvars
    t = Polynomial.variable(nvars + 1, 0)
    one = Polynomial.monomial((0,) * (nvars + 1))
    lifted = [t * p.extend(front=1) for p in a] + [(one - t) * p.extend(front=1) for p in b]
    elim = EliminationOrder(1, order)
    gb = groebner_basis(lifted, elim, **kw)
    return [p.drop_front(1) for p in gb if not any(e[0] for e in p.terms)]


def intersect_all(ideals, order=None, **kw):
    order = order or default_order()
    current = groebner_basis(ideals[0], order, **kw)
    for nxt in ideals[1:]:
        current = groebner_basis(intersect(current, nxt, order, **kw), order, **kw)
    return current


@dataclass(frozen=True)
class InitialIdeal:
    generators: tuple  # exponent vectors of the reduced basis' leading monomials
    squarefree: bool


def initial_ideal(gens, order=None, **kw):
    order = order or default_order()
    gb = groebner_basis(gens, order, **kw)
    lms = tuple(p.leading_monomial(order) for p in gb)
    return InitialIdeal(lms, all(e <= 1 for lm in lms for e in lm))


# -- text format ------------------------------------------------------------

def _coeff_text(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def polynomial_to_text(p, ring, order=None):
    """``+c*x[i,j]*x[k,l] -c*...`` in descending term order; powers as ``^e``."""
    order = order or default_order()
    if not p:
        return "0"
    parts = []
    for exp, c in p.sorted_terms(order):
        sign = "+" if c > 0 else "-"
        factors = [_coeff_text(abs(c))]
        for idx, e in enumerate(exp):
            if e:
                factors.append(ring.name(idx) + (f"^{e}" if e > 1 else ""))
        parts.append(sign + "*".join(factors))
    return " ".join(parts)


def ideal_to_text(gens, ring, order=None):
    return "".join(polynomial_to_text(p, ring, order) + "\n" for p in gens)


_TERM = re.compile(r"([+-])\s*([0-9]+(?:/[0-9]+)?)((?:\s*\*\s*x\[\d+,\d+\](?:\^\d+)?)*)")
_FACTOR = re.compile(r"x\[(\d+),(\d+)\](?:\^(\d+))?")


def polynomial_from_text(line, ring):
    line = line.strip()
    if line == "0":
        return Polynomial.zero(ring.nvars)
    terms = {}
    pos = 0
    for mt in _TERM.finditer(line):
        if line[pos:mt.start()].strip():
            raise ValueError(f"cannot parse polynomial near {line[pos:mt.start()]!r}")
        pos = mt.end()
        exp = [0] * ring.nvars
        for i, j, e in _FACTOR.findall(mt.group(3)):
            exp[ring.index(int(i), int(j))] += int(e or 1)
        c = Fraction(mt.group(2)) * (1 if mt.group(1) == "+" else -1)
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + c
    if line[pos:].strip():
        raise ValueError(f"trailing text {line[pos:]!r}")
    return Polynomial(terms, ring.nvars)


def ideal_from_text(text, ring):
    return [polynomial_from_text(ln, ring) for ln in text.splitlines() if ln.strip()]

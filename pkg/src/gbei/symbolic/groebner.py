"""Buchberger's algorithm with the coprime and chain criteria.

Pairs are processed by smallest lcm degree, ties broken by the pair
indices, so bases are reproducible. The result is the reduced basis: monic,
minimal, tails fully reduced, sorted by leading monomial descending.
"""

import heapq
import time
from fractions import Fraction

from ..caps import check_cap, get_caps
from ..errors import GBTimeout
from .polynomial import Polynomial, coprime, divides, lcm, mono_div, mono_mul


def _normal_form_terms(terms, basis, key):
    """Fully reduce a term dict against ``basis`` = [(lm, poly)], polys monic."""
    p = dict(terms)
    rem = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for lm, g in basis:
            if divides(lm, e):
                shift = mono_div(e, lm)
                for ge, gc in g.terms.items():
                    t = mono_mul(ge, shift)
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[e] = c
            del p[e]
    return rem


def normal_form(f, basis, order):
    """Remainder of ``f`` on division by ``basis`` (a list of polynomials)."""
    prepared = [(g.leading_monomial(order), g.monic(order)) for g in basis if g]
    out = Polynomial.zero(f.nvars)
    out.terms = _normal_form_terms(f.terms, prepared, order.key)
    return out


def s_polynomial(f, g, order):
    ef, cf = f.leading_term(order)
    eg, cg = g.leading_term(order)
    m = lcm(ef, eg)
    return f.scale(Fraction(1) / cf, mono_div(m, ef)) - g.scale(Fraction(1) / cg, mono_div(m, eg))


def groebner_basis(generators, order, timeout=None, caps=None):
    """Reduced Gröbner basis of the ideal generated by ``generators``."""
    caps = caps or get_caps()
    gens = [g for g in generators if g]
    if not gens:
        return []
    nvars = gens[0].nvars
    check_cap("Gröbner generators", len(gens), caps.gb_generators)
    check_cap("Gröbner variables", nvars, caps.gb_variables)
    timeout = caps.gb_timeout if timeout is None else timeout
    deadline = time.monotonic() + timeout
    key = order.key

    basis = []  # list of (lm, monic poly)
    seen = set()
    for g in gens:
        g = g.monic(order)
        fs = frozenset(g.terms.items())
        if fs not in seen:
            seen.add(fs)
            basis.append((g.leading_monomial(order), g))

    heap = []
    pending = set()

    def push(i, j):
        m = lcm(basis[i][0], basis[j][0])
        heapq.heappush(heap, (sum(m), i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while heap:
        if time.monotonic() > deadline:
            raise GBTimeout(f"Gröbner basis exceeded {timeout} s")
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        lm_i, gi = basis[i]
        lm_j, gj = basis[j]
        if coprime(lm_i, lm_j):
            continue
        m = lcm(lm_i, lm_j)
        chain = False
        for k, (lm_k, _) in enumerate(basis):
            if k in (i, j) or not divides(lm_k, m):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        s = gi.scale(1, mono_div(m, lm_i)) - gj.scale(1, mono_div(m, lm_j))
        rem = _normal_form_terms(s.terms, basis, key)
        if rem:
            h = Polynomial(rem, nvars).monic(order)
            basis.append((h.leading_monomial(order), h))
            new = len(basis) - 1
            for k in range(new):
                push(k, new)

    return _reduce_basis(basis, order)


def _reduce_basis(basis, order):
    key = order.key
    # minimal: drop elements whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda t: key(t[0]))
    minimal = []
    for lm, g in basis:
        # a proper divisor of lm is smaller in every term order, so it came first
        if not any(divides(lm2, lm) for lm2, _ in minimal):
            minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = {e: c for e, c in g.terms.items() if e != lm}
        rem = _normal_form_terms(tail, others, key)
        rem[lm] = g.terms[lm]
        reduced.append(Polynomial(rem, g.nvars).monic(order))
    reduced.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return reduced


def is_groebner_basis(basis, order):
    """Every S-polynomial reduces to zero (Buchberger's test)."""
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if normal_form(s_polynomial(basis[a], basis[b], order), basis, order):
                return False
    return True


def same_ideal(gens_a, gens_b, order, **kw):
    return groebner_basis(gens_a, order, **kw) == groebner_basis(gens_b, order, **kw)


def in_ideal(f, gb, order):
    return not normal_form(f, gb, order)

from fractions import Fraction

import pytest
import sympy

from gbei.cutsets import enumerate_cutsets
from gbei.errors import CapExceeded, GBTimeout
from gbei.caps import parse_caps
from gbei.fixtures import FIGURES
from gbei.graph import SimpleGraph
from gbei.symbolic import (MatrixRing, MonomialOrder, Polynomial, build_ideal, build_prime_component,
                           default_order, export_cas, groebner_basis, ideal_from_text, ideal_to_text,
                           in_ideal, initial_ideal, intersect, intersect_all, is_groebner_basis,
                           normal_form, polynomial_from_text, polynomial_to_text, same_ideal)

from conftest import random_graph

DEG = default_order()
LEX = MonomialOrder("lex")


def random_poly(rng, nvars, terms=4, deg=3):
    out = {}
    for _ in range(terms):
        exp = [0] * nvars
        for _ in range(rng.randint(0, deg)):
            exp[rng.randrange(nvars)] += 1
        out[tuple(exp)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(out, nvars)


def to_sympy(p, syms):
    return sum(c * sympy.Mul(*[s ** e for s, e in zip(syms, exp)]) for exp, c in p.terms.items())


def test_build_ideal_shapes():
    ring = MatrixRing(2, 2)
    (gen,) = build_ideal(2, SimpleGraph.complete(2)).generators
    assert {gen, -gen} & {ring.var(1, 1) * ring.var(2, 2) - ring.var(1, 2) * ring.var(2, 1)}
    assert len(build_ideal(3, SimpleGraph.cycle(4))) == 12
    assert len(build_ideal(2, SimpleGraph(3))) == 0
    with pytest.raises(ValueError):
        build_ideal(1, SimpleGraph.path(2))


def test_prime_components():
    ring = MatrixRing(2, 3)
    pc = build_prime_component(2, SimpleGraph.path(3), {2})
    assert pc.generators == [ring.var(1, 2), ring.var(2, 2)]
    assert len(build_prime_component(2, SimpleGraph.path(3), set()).generators) == 3
    pc = build_prime_component(2, SimpleGraph.cycle(4), {1, 3})
    assert len(pc.generators) == 4 and all(p.degree() == 1 for p in pc.generators)


def test_generic_2x3_minors_already_a_basis():
    gens = build_ideal(2, SimpleGraph.complete(3)).generators
    gb = groebner_basis(gens, DEG)
    assert sorted(map(repr, gb)) == sorted(map(repr, [g.monic(DEG) for g in gens]))


def test_fixed_point_and_buchberger_criterion(rng):
    for _ in range(15):
        g = random_graph(rng, rng.randint(3, 5), 0.5)
        gens = build_ideal(2, g).generators
        for order in (DEG, LEX):
            gb = groebner_basis(gens, order)
            assert groebner_basis(gb, order) == gb
            assert is_groebner_basis(gb, order)
            assert all(in_ideal(p, gb, order) for p in gens)


def test_reduced_basis_is_unique_under_generator_permutation(rng):
    gens = build_ideal(2, FIGURES["fig4"]).generators
    ref = groebner_basis(gens, DEG)
    for _ in range(5):
        perm = gens[:]
        rng.shuffle(perm)
        scaled = [p.scale(rng.choice([-3, 2, Fraction(1, 7)])) for p in perm]
        assert groebner_basis(scaled, DEG) == ref


def test_normal_form_is_linear(rng):
    gb = groebner_basis(build_ideal(2, SimpleGraph.cycle(4)).generators, DEG)
    for _ in range(30):
        f, g = random_poly(rng, 8), random_poly(rng, 8)
        c = Fraction(rng.randint(-4, 4))
        lhs = normal_form(f + g.scale(c), gb, DEG)
        rhs = normal_form(f, gb, DEG) + normal_form(g, gb, DEG).scale(c)
        assert lhs == rhs


def from_sympy(expr, syms):
    terms = {exp: Fraction(int(c.p), int(c.q)) for exp, c in sympy.Poly(expr, *syms).terms()}
    return Polynomial(terms, len(syms))


@pytest.mark.parametrize("name", ["fig4", "fig1", "cycle5"])
def test_matches_sympy(name):
    from gbei.fixtures import get
    g = get(name)
    ideal = build_ideal(2, g)
    syms = sympy.symbols(f"v0:{ideal.ring.nvars}")
    for ours_order, sym_order in ((DEG, "grevlex"), (LEX, "lex")):
        ours = groebner_basis(ideal.generators, ours_order)
        theirs = sympy.groebner([to_sympy(p, syms) for p in ideal.generators], *syms, order=sym_order)
        want = {from_sympy(e, syms).monic(ours_order) for e in theirs.exprs}
        assert set(ours) == want


def test_containment_in_every_prime_component(rng):
    for _ in range(8):
        g = random_graph(rng, rng.randint(3, 5), 0.5)
        ideal = build_ideal(2, g)
        for T in enumerate_cutsets(g).sets():
            gb = groebner_basis(build_prime_component(2, g, T).generators, DEG)
            assert all(in_ideal(p, gb, DEG) for p in ideal.generators)


def test_intersections():
    ring = MatrixRing(2, 2)
    a, b = [ring.var(1, 1)], [ring.var(2, 2)]
    assert intersect(a, b) == [ring.var(1, 1) * ring.var(2, 2)]
    gens = build_ideal(2, SimpleGraph.cycle(4)).generators
    assert same_ideal(intersect(gens, gens), gens, DEG)
    g = SimpleGraph.path(3)
    comps = [build_prime_component(2, g, T).generators for T in enumerate_cutsets(g).sets()]
    assert intersect_all(comps) == groebner_basis(build_ideal(2, g).generators, DEG)


def test_initial_ideal_squarefree():
    ini = initial_ideal(build_ideal(2, SimpleGraph.complete(2)).generators)
    assert ini.squarefree and len(ini.generators) == 1
    assert initial_ideal(build_ideal(2, SimpleGraph.path(3)).generators, LEX).squarefree
    x = MatrixRing(1, 1).var(1, 1)
    assert not initial_ideal([x * x]).squarefree


def test_text_round_trip(rng):
    ring = MatrixRing(2, 4)
    for _ in range(30):
        p = random_poly(rng, ring.nvars)
        assert polynomial_from_text(polynomial_to_text(p, ring), ring) == p
    gens = build_ideal(2, SimpleGraph.cycle(4)).generators
    assert ideal_from_text(ideal_to_text(gens, ring), ring) == gens
    assert polynomial_to_text(gens[0], ring) == "+1*x[1,2]*x[2,1] -1*x[1,1]*x[2,2]"
    with pytest.raises(ValueError):
        polynomial_from_text("+1*y", ring)


M2_K2 = (
    '-- K2\nneedsPackage "Depth";\nR = QQ[x_(1,1)..x_(2,2)];\nI = ideal(\n'
    '    x_(1,2)*x_(2,1) - x_(1,1)*x_(2,2)\n);\n'
    'print("depth: " | toString depth(R^1/I));\nprint("pd: " | toString pdim(R^1/I));\n'
    'print("minimal primes:");\nprint toString minimalPrimes I;\n'
)


def test_cas_export_golden():
    ideal = build_ideal(2, SimpleGraph.complete(2))
    assert export_cas(ideal.generators, ideal.ring, "macaulay2", title="K2") == M2_K2
    sing = export_cas(ideal.generators, ideal.ring, "singular", title="K2")
    assert "ring R = 0, (x(1..2)(1..2)), dp;" in sing and "x(1)(2)*x(2)(1) - x(1)(1)*x(2)(2)" in sing
    zero = export_cas([], MatrixRing(2, 3), "macaulay2")
    assert "ideal(\n    0_R\n)" in zero
    with pytest.raises(ValueError):
        export_cas([], MatrixRing(2, 2), "maple")


def test_caps_and_timeout():
    gens = build_ideal(3, SimpleGraph.complete(6)).generators
    with pytest.raises(CapExceeded):
        groebner_basis(gens, DEG)
    with pytest.raises(GBTimeout):
        groebner_basis(build_ideal(2, FIGURES["fig5"]).generators, LEX, timeout=0.0)
    small = parse_caps("gb_generators=2")
    with pytest.raises(CapExceeded):
        groebner_basis(build_ideal(2, SimpleGraph.path(4)).generators, DEG, caps=small)

from .polynomial import EliminationOrder, MonomialOrder, Polynomial
from .groebner import groebner_basis, in_ideal, is_groebner_basis, normal_form, same_ideal
from .ideals import (BinomialIdeal, InitialIdeal, MatrixRing, PrimeComponent, build_ideal,
                     build_prime_component, default_order, ideal_from_text, ideal_to_text,
                     initial_ideal, intersect, intersect_all, polynomial_from_text,
                     polynomial_to_text)
from .export import export_cas

__all__ = [
    "BinomialIdeal",
    "EliminationOrder",
    "InitialIdeal",
    "MatrixRing",
    "MonomialOrder",
    "Polynomial",
    "PrimeComponent",
    "build_ideal",
    "build_prime_component",
    "default_order",
    "export_cas",
    "groebner_basis",
    "ideal_from_text",
    "ideal_to_text",
    "in_ideal",
    "initial_ideal",
    "intersect",
    "intersect_all",
    "is_groebner_basis",
    "normal_form",
    "polynomial_from_text",
    "polynomial_to_text",
    "same_ideal",
]

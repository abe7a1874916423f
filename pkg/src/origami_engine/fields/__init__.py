"""Classifiers for the Thalian, Pythagorean and origami number hierarchy."""

from origami_engine.fields.degree import origami_degree_check, totally_real_quadratic
from origami_engine.fields.polygons import NgonVerdict, ngon_constructible
from origami_engine.fields.primes import factorize, format_factors, is_pierpont_prime, is_prime
from origami_engine.fields.thalian import rational_sqrt, root_of_unity_thalian, thalian_classify
from origami_engine.fields.verdict import FieldClass, Verdict

__all__ = [
    "FieldClass",
    "NgonVerdict",
    "Verdict",
    "factorize",
    "format_factors",
    "is_pierpont_prime",
    "is_prime",
    "ngon_constructible",
    "origami_degree_check",
    "rational_sqrt",
    "root_of_unity_thalian",
    "thalian_classify",
    "totally_real_quadratic",
]

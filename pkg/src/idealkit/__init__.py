"""Exact multiplicity computations for m-primary monomial and semigroup ideals."""

__version__ = "0.1.0"

from . import binomfit, bounds, groebner, instances, invariants, monomial, semigroup

__all__ = ["binomfit", "bounds", "groebner", "instances", "invariants",
           "monomial", "semigroup", "__version__"]

"""Exact-arithmetic origami construction engine.

This package provides exact real arithmetic, the six fold axioms as
geometric solvers, conic pencils and duality, cubic/quartic construction
procedures, constructibility classifiers and a small construction DSL.
"""

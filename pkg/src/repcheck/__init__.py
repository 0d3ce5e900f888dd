"""Exact representation-theoretic computations for finite groups.

Character tables over cyclotomic fields, Frobenius-Schur indicators,
real-degree uniqueness checks, orbit counting of matrix groups on
finite modules, and the arithmetic bounds that drive those counts.
"""

__version__ = "0.1.0"

"""Exact-arithmetic invariants of orbifold Riemann surfaces and rank-2 Higgs V-bundle moduli"""

__version__ = '1.0.0'

"""
fermicat: the categorified one-mode fermion algebra.

Sign words name 1-morphisms, crossingless matchings name 2-morphisms, and
every categorical computation is checked against the 2x2 Fock
representation and a matrix-bimodule 2-representation.
"""

__version__ = "1.0.0"

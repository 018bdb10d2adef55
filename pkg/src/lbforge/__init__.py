"""lbforge: exact spectral-parameter r-matrices for Lie bialgebra
structures on polynomial Lie algebras, with machine verification of the
defining identities."""

__version__ = "0.1.0"

"""Structure-preserving linearizations of matrix polynomials."""

from .polycore import BlockShape, MatPoly

__all__ = ["BlockShape", "MatPoly"]
__version__ = "0.1.0"

"""Exact Pólya-type positivity certificates for sparse polynomials."""

__version__ = "0.1.0"

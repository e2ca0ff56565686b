"""Affine Hecke algebras and related structures."""

__version__ = "0.1.0"

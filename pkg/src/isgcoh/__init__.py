"""Inverse-semigroup cohomology and crossed module extensions at desk scale."""

__version__ = "0.1.0"

"""Exact arithmetic for Chern numbers of products of projective spaces,
their virtual Chern submanifolds, and the relations between them."""

__version__ = "0.1.0"

"""Exact sheaf-cohomology calculator for Grassmannians and quadrics, with a
mechanized exact-sequence chase engine."""

__version__ = "0.1.0"

"""Exact-arithmetic construction and verification of a stably Z/3-graded
E8 Lie algebra built from Heisenberg-group data, together with the cusp
certificate tables and small-field genus-2 section arithmetic that sit
alongside it."""

__version__ = "0.1.0"

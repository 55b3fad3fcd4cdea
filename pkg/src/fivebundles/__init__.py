"""Invariants of closed 5-manifolds for classifying quaternionic line bundles."""

__version__ = "0.1.0"

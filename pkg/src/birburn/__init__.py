"""Equivariant and orbifold Burnside invariants of birational maps of toric surfaces."""

__version__ = "0.1.0"

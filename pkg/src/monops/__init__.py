"""Exact Riordan arrays, Sheffer families and monop posets of species."""

__version__ = "0.1.0"

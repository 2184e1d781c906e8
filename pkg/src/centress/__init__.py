"""Constructions and decision procedures for centrally essential rings."""

__version__ = "0.1.0"

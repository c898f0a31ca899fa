"""Exact torsion of rational elliptic curves over cyclotomic fields."""

__version__ = "0.1.0"

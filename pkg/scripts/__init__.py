"""Turán workbench: clique counts in graphs without k disjoint copies of a small pattern."""

__version__ = "1.0.0"

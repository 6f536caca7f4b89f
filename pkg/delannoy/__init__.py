"""Delannoy lattice paths, their swap classes and weighted counts."""

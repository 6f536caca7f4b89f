"""Riordan matrices: construction, group operations, diagonals and palindromic families."""

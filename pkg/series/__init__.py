"""Truncated formal power series over the rationals and the closed-form parser."""

"""Command-line surface over the series, riordan and delannoy packages."""

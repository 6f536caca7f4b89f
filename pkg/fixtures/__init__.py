"""Golden tables regenerated from closed forms."""

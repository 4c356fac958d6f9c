"""Exact computer algebra for chords of the quartic scroll and their Plücker variety."""
__version__ = "0.1.0"

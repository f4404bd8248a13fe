"""Witness-producing search for three-block oriented paths in digraphs of
large chromatic number."""

__version__ = "0.1.0"

"""Exact symbolic toolkit for the center-focus problem of planar polynomial systems."""

__version__ = "0.1.0"

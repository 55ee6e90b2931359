"""Exact decision and certificate toolkit for regulous functions."""

__version__ = "0.1.0"

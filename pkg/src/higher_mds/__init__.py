"""Exact tools for higher-order MDS codes, generic zero patterns and list decoding."""

__version__ = "0.1.0"

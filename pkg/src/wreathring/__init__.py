"""Exact algebra for limiting Grothendieck rings of wreath-product categories."""

__version__ = "0.1.0"

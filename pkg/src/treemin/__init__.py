"""Comparison-efficient decremental tree minima."""

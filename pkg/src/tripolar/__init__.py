"""Tri-polar RGB colour algebra over triangular coefficients."""

"""Schur functions, shifted Littlewood-Richardson coefficients and box-adding operators."""

"""Numerical toolkit for singular plane curves near singular points."""

"""Exact computations with odd Jucys-Murphy elements, zonal spherical functions,
Jack-Plancherel averages and orthogonal Weingarten functions."""

__version__ = "0.1.0"

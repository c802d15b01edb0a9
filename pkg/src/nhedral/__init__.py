"""Exact computations for the finite data attached to G(M,M,N):
cyclotomic arithmetic, sl_N alcove combinatorics, Chebyshev polynomials,
fusion rings with modular data, Koornwinder varieties, Drinfeld-center
data, pre-Fourier matrices with the comparison check, Nhedral Hecke
algebras, and N-colored graphs."""

__version__ = "0.1.0"

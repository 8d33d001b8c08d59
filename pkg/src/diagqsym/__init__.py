"""Diagonally quasi-symmetric functions: the Hopf algebras DQSym and DNSym,
the diagonal Temperley-Lieb (Hivert) action, and exact Hilbert series of
the associated coinvariant-type quotients."""

__version__ = "0.1.0"

"""Exact Grassmann-algebra engine for chiral-ring checks on simple Lie
algebras: Chevalley bases, the superscheme quotient by the supercommutator
relations, abelian-ideal combinatorics, and the associated invariant-theory
verifications, all over exact rationals."""

__version__ = "0.1.0"

"""Poly-Bernoulli numbers, their GL2 generalization, and the associated zeta integrals."""

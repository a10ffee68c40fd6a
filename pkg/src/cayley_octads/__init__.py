"""Finite and exact computations around real Cayley octads and their spin Hessian quartics."""

__version__ = "0.1.0"

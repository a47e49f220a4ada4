"""Exact-arithmetic tools for minimal-series weight collisions mod p,
Verma-module Gram ranks, and coset-decomposition bookkeeping."""

__version__ = "0.1.0"

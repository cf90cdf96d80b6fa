"""Exact computer algebra for the Heisenberg product."""

from heisenberg.errors import HeisenbergError

__all__ = ["HeisenbergError"]

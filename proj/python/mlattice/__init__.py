"""Finite multiplicative lattices, S-prime elements and S-Ako/S-Oka families."""

from ._core import (
    MlatError,
    MultLattice,
    builtin,
    crosscheck,
    ideal_lattice,
    parse,
    ring_colon,
    search_multiplications,
)

__all__ = [
    "MlatError",
    "MultLattice",
    "builtin",
    "crosscheck",
    "ideal_lattice",
    "parse",
    "ring_colon",
    "search_multiplications",
]

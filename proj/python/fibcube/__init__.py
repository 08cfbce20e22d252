"""Fibonacci (p,r)-cubes: construction, invariant formulas and verification.

Families are spelled "O" and "I"; n is always the codeword length.
"""

from ._fibcube import (
    __version__,
    are_isomorphic,
    best_barrier,
    center_O,
    claims,
    count_vertices,
    decode,
    diameter_I,
    diameter_O,
    distance,
    edges,
    encode,
    invariants,
    is_valid_word,
    max_degree,
    min_degree,
    min_degree_witness,
    phi,
    radius_O,
    run_claim,
    run_grid,
    vertices,
)

__all__ = [
    "__version__",
    "are_isomorphic",
    "best_barrier",
    "center_O",
    "claims",
    "count_vertices",
    "decode",
    "diameter_I",
    "diameter_O",
    "distance",
    "edges",
    "encode",
    "invariants",
    "is_valid_word",
    "max_degree",
    "min_degree",
    "min_degree_witness",
    "phi",
    "radius_O",
    "run_claim",
    "run_grid",
    "vertices",
]

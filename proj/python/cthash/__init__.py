"""Hashing through 3D contingency-table marginals.

H1 maps each padded message block to the binary encoding of the marginals of
two weighted copies of the block; H3 applies MD5 or SHA-256 to that
expansion. Tensors are nested lists indexed ``t[i][j][k]`` (0-based).
"""

from ._cthash import (
    CtHashError,
    ParameterPair,
    build_c,
    build_d,
    collision_search,
    duplic,
    f0,
    g1,
    g2,
    g2_fixed,
    h1,
    h2,
    hash,
    marginals,
    padded_length,
    preimage_search,
    recover,
    repro_simulation,
    sol3dct,
    validate,
)

__all__ = [
    "CtHashError",
    "ParameterPair",
    "build_c",
    "build_d",
    "collision_search",
    "duplic",
    "f0",
    "g1",
    "g2",
    "g2_fixed",
    "h1",
    "h2",
    "hash",
    "marginals",
    "padded_length",
    "preimage_search",
    "recover",
    "repro_simulation",
    "sol3dct",
    "validate",
]

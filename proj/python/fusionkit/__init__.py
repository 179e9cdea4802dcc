"""Weight multiplicities, tensor products and level-k fusion rules."""

from ._fusionkit import (
    AxiomViolation,
    BoundExceeded,
    InvalidAlgebra,
    LevelError,
    ParseError,
    UnsupportedCoefficient,
    dimension,
    fusion,
    fusion_table,
    orbit_count,
    orbit_count_bruteforce,
    ramanujan_sum,
    render_table,
    svg,
    tensor,
    triple_orbits,
    verify,
    weights,
)

__all__ = [
    "AxiomViolation",
    "BoundExceeded",
    "InvalidAlgebra",
    "LevelError",
    "ParseError",
    "UnsupportedCoefficient",
    "dimension",
    "fusion",
    "fusion_table",
    "orbit_count",
    "orbit_count_bruteforce",
    "ramanujan_sum",
    "render_table",
    "svg",
    "tensor",
    "triple_orbits",
    "verify",
    "weights",
]

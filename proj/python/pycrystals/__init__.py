"""Crystal bases, Demazure crystals and characters for finite-type root data.

Weights are lists of fundamental-weight coordinates, Weyl group words are
lists of 1-based letters, and characters are dicts mapping weight tuples
to multiplicities.
"""

from ._core import (
    Crystal,
    ResourceError,
    cartan_matrix,
    demazure_character,
    is_reduced,
    qbinom,
    qbinom_str,
    qint,
    verify,
    weyl_character,
    weyl_dimension,
    weyl_group,
)

__all__ = [
    "Crystal",
    "ResourceError",
    "cartan_matrix",
    "demazure_character",
    "is_reduced",
    "qbinom",
    "qbinom_str",
    "qint",
    "verify",
    "weyl_character",
    "weyl_dimension",
    "weyl_group",
]

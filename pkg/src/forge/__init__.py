"""simplicial-forge: a desk-scale workbench for colored configuration
spaces, discrete Morse certification, integer homology and exact affine
partition search."""

__version__ = "0.1.0"

from .complexes import (  # noqa: F401
    SimplicialComplex,
    alexander_dual,
    bier_sphere,
    chessboard_complex,
    deleted_join,
    join,
    multi_chessboard_complex,
    multipartite_complex,
    skeleton,
)
from .config_space import (  # noqa: F401
    BalancedParams,
    ConfigurationSpace,
    balanced_params,
    build_config_space,
)
from .homology import smith_normal_form  # noqa: F401
from .morse import balanced_matching, connectivity_certificate  # noqa: F401

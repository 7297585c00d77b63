"""Exact computation of the Alexander polynomial, the reduced theta invariant
and Turaev torsion functions of a closed oriented 3-manifold with b1 > 0,
starting from a balanced presentation coming from a Heegaard splitting."""

from .errors import (
    GroupMismatch,
    HeegaardThetaError,
    NormalizationError,
    PresentationError,
    UnsupportedInput,
)
from .group_ring import GroupRingElt
from .homology import AbelianGroup, Homology, cokernel, smith_normal_form
from .laurent import laurent_divide, laurent_gcd, symmetrize
from .presentation import (
    BalancedPresentation,
    BoundaryMatrix,
    boundary_matrix,
    fox_derivative_abelian,
    handle_slide_cols,
    handle_slide_rows,
    parse_presentation,
    random_presentation,
    stabilize,
)
from .theta import (
    ThetaFunction,
    TorsionWindow,
    divisibility_check,
    theta_from_alexander,
    turaev_functions,
    wall_identity_check,
)
from .torsion import AlexanderResult, all_projected_minors, alexander, det_full, minor_det

__version__ = "0.1.0"

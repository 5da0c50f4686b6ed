"""Parallelisation certificates for closed orientable 3-manifolds given by surgery diagrams."""
from .braids import (
    BraidWord,
    FramedLink,
    LinkComponents,
    closure_components,
    linking_matrix,
    linking_parity,
    parse_braid,
    push_off_linking,
    self_linking,
    writhe,
)
from .contact import alpha, d_alpha, frame_at, quaternion_frame, verify_frame_properties
from .framing import (
    ParallelisationCertificate,
    SurfaceClassId,
    SurgeryCurveId,
    TwistState,
    apply_surface_twists,
    base_twists,
    check_even_surgery,
    compute_certificate,
    intersection_parity,
)
from .gf2 import Gf2Matrix, Gf2Vector, LinkingParity, gf2_rank, gf2_solve, solve_framing_system

__version__ = "0.1.0"

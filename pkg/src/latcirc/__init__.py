"""Circumscribed circles of finite sets in the integer lattice."""

__version__ = "0.1.0"

from .arith import primorial
from .certificates import NoCovering, NoDivisibility, Yes, verify_certificate
from .construct import (
    CrtTrace,
    avoid_residues,
    center_for_radius,
    find_unit_center,
    unit_center_crt,
    unit_center_search,
)
from .core import (
    CanonicalAngle,
    Empty,
    IntegerCircle,
    LatticeLine,
    Periodic,
    Point,
    RationalAngle,
    TwoPoints,
    canonical_angle,
    circle_contains,
    int_area,
    int_distance,
    int_length,
    is_tangent,
    isin,
    line_circle_classify,
)
from .errors import (
    CoveringError,
    DegenerateError,
    DomainError,
    LatticeError,
    NoCircleError,
    NotShiftDivisibleError,
    TraceTooLargeError,
)
from .polygons import (
    Polygon,
    farey_starburst,
    ngon_has_circle,
    quadrangle_has_circle,
    segment_triangle_spectrum,
    sine_rule_ratios,
)
from .spectra import (
    RationalSpectrum,
    has_radius,
    has_rational_radius,
    integer_spectrum,
    lcm_closure_check,
    max_radius,
    primorial_member_check,
    rational_spectrum,
)
from .tori import (
    PointSet,
    PrimitiveDecomposition,
    TorusResidue,
    covering_primes,
    divide,
    is_covering,
    is_shift_divisible,
    is_tori_transparent,
    primitive_decomposition,
    project,
    shift_divisor_gcd,
)

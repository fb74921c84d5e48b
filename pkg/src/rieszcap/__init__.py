"""Riesz p-capacities of finite point sets for p < 0, closed-form capacities
of simple shapes, and tools for the capacity ratio cap_q / cap_p."""
from ._kernels import BACKEND
from .closed_forms import (
    BallSpec,
    EllipseSpec,
    EllipsoidSpec,
    ball_capacity,
    ellipse_log_capacity,
    ellipse_newtonian_capacity,
    ellipsoid_cap1,
    ellipsoid_cap2,
    interval_capacity,
    regular_kpoint_capacity,
)
from .errors import (
    DegenerateConfigurationError,
    DomainError,
    ResourceLimitError,
    RieszError,
    SearchFailureError,
    UnsupportedParameterError,
)
from .finite_capacity import (
    CapacityResult,
    Configuration,
    DiscreteMeasure,
    KernelMatrix,
    bjorck_reduce,
    capacity,
    critical_point_on_support,
    finite_capacity,
    finite_energy,
    kernel_matrix,
    kkt_certificate,
)
from .region_map import RegionSample, emit_grid, q_star, sample_region, threshold_p
from .shape_search import SearchProblem, SearchResult, classify_configuration, optimize_ratio
from .specfun import complete_elliptic_k, gamma
from .triangle import TriangleShape, heron_denominator, ratio_R, triangle_capacity

__version__ = "0.1.0"

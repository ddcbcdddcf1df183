"""arclab: geometry lab for convex plane figures sharing a diameter with a circle.

Exact segment/arc boundary kernel, the library of study figures, the
exterior-fraction measure mu, the radial-coordinate area bound, a convex
shape optimizer, and a Monte Carlo oracle cross-checking everything.
"""

from .geometry import (
    Circle,
    DEFAULT_TOL,
    DegenerateFigureError,
    Edge,
    Figure,
    InvalidFigureError,
    Point,
    Tolerance,
    arc,
    area,
    bounding_box,
    circle_figure,
    contains,
    convex_hull,
    diameter,
    discretize,
    figure,
    figure_from_json,
    figure_to_json,
    is_convex,
    perimeter,
    segment,
)
from .littlewood import (
    BoundReport,
    RadialProfile,
    littlewood_bound,
    max_chord_sq,
    profile,
    radial_area,
    radial_area_paired,
)
from .measures import LittlewoodCheck, MuReport, disc_intersection_area, exterior_area, littlewood_check, mu
from .montecarlo import McEstimate, mc_area, mc_mu
from .optimize import (
    Candidate,
    OptConfig,
    OptTrace,
    PerturbationAudit,
    RepairRejected,
    candidate_figure,
    optimize_mu,
    perturbation_audit,
    repair,
)
from .report import VerificationReport, render_svg, save_report_figures, verify
from .shapes import (
    MU_MAX,
    NamedShape,
    REFERENCE_CIRCLE,
    exterior_crescent,
    get_shape,
    isosceles,
    lens,
    library,
    mixed_triangle,
    radial_figure,
    reuleaux,
    shape_names,
    unit_circle,
)

__version__ = "0.1.0"

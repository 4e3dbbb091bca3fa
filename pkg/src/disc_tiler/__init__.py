"""Arc-chain geometry and validators for monohedral tilings of the unit disc."""

from .catalog import (NAMES, ArcEquationHit, GeneratorCurve, build_named, build_rotgen,
                      random_generator, scan_arc_equation)
from .congruence import Signature, find_congruence, signature
from .enclosing import Circle, min_enclosing_circle, region_circumcircle
from .errors import CatalogError, DiscTilerError, DocumentError, GeometryError, PreconditionError
from .isometry import Isometry, apply_isometry
from .kernel import (ORIGIN, Arc, Chain, Location, Point, Region, Segment, chain_area,
                     edge_intersect, point_in_region, spindle, unit_disc)
from .multicurve import Multicurve, equidecomposable, length_profile, subtract_decomposition
from .tolerance import DEFAULT_TOL, Tolerance
from .validate import (Tiling, ValidationReport, boundary_arcs, center_containment,
                       circumdisc_separation, convexity_profile, symmetry_order, triple_points,
                       validate)

__version__ = "0.1.0"

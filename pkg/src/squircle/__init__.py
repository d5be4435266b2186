"""The FG-squircle, the sphube and their relatives."""
from .arclength import (ArcMethod, arclength, arclength_cartesian, arclength_parametric,
                        arclength_polar, perimeter)
from .core import (MIDWAY_SQUARENESS, RectellipseParams, SquircleParams, blend_corner,
                   blend_from_squareness, contains, implicit_residual, rectellipse_residual, squareness_from_blend,
                   squareness_from_point)
from .curves import CurveForm, param_point, polar_radius, sample_curve
from .elliptic import (area_complete, area_incomplete, ellip_E, ellip_E_inc, ellip_F, ellip_K,
                       reciprocal_modulus_check)
from .errors import DivergenceError, DomainError, NumericalFailure, SingularInputError
from .map2d import Direction, Mapping2D, disc_to_square, remap_grid, square_to_disc
from .montecarlo import MonteCarloArea, area_monte_carlo
from .pixmap import Pixmap, PixmapFormatError, read_ppm, remap_image, write_ppm
from .map3d import CubicCoeffs, cube_to_sphere, solve_even_sextic, sphere_to_cube
from .surfaces import (NonUniformCone, NonUniformCylinder, Sphube, Sqellipsoid, Sqone, Sqylinder,
                       TriMesh, export_obj, extract_mesh, nd_residual, surface_residual)

__version__ = "0.1.0"

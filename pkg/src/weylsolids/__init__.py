"""Platonic, Archimedean and Catalan solids from quaternion group orbits."""

from .quat import (E1, E2, E3, ONE, SIGMA, SQRT2_INV, TAU, InvalidElementError,
                   Quaternion, apply, conjugate, dot, mul, pure)
from .groups import (GroupConstructionError, GroupElement, WeylGroup,
                     action_matrix, binary_icosahedral, binary_tetrahedral,
                     stabilizer_order, t_prime, weyl_group)
from .orbits import (ARCHIMEDEAN, PLATONIC, SOLIDS, Orbit, UnknownSolidError,
                     Weight, fundamental_orbits, named_solid, orbit,
                     weight_vector)
from .mesh import (MeshError, Polyhedron, SymmetryError, build_mesh,
                   edge_classes, euler_characteristic, face_classes,
                   vertex_classes)
from .catalan import (ARCH_TO_CATALAN, CATALAN_NAMES, CATALAN_TO_ARCH,
                      DualConstructionError, DualityViolationError, DualReport,
                      FaceClassificationError, SingularConfigurationError,
                      dihedral_angle, dual, dual_from_points, format_dms,
                      incident_face_centers, polygon_shape, solid_mesh,
                      solve_scale, sphere_radii)
from .cli_io import export_obj, export_off, run_cli

__version__ = "0.1.0"

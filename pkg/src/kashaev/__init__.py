"""Kashaev's region-matrix signature for link diagrams, with exact
arithmetic throughout."""

from .diagram import (Diagram, DiagramError, checkerboard, corner_frame, parse_braid,
                      parse_diagram, parse_pd, r1_move, r2_move, random_rewrite,
                      regions, unknot, writhe)
from .invariants import (ConjectureReport, SignatureProfile, alexander_kauffman,
                         alexander_squared_kashaev, applicability_predicate,
                         classical_signature_gl, conjecture_report, jump_bound_check,
                         kashaev_invariant, signature_profile)
from .linalg import Inertia, bareiss_det, signature_symmetric
from .matrices import (delete_adjacent_pair, factorization_check, goeritz,
                       kashaev_matrix, kauffman_matrix)
from .polys import IntPoly, LaurentPoly
from .seifert import (CirclePoint, alexander_from_seifert, lt_signature,
                      pythagorean_points, seifert_from_braid)

__version__ = "0.1.0"

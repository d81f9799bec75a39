"""Branched double covers of Dehn surgeries.

Slopes and their SL(2, Z) words, rational tangles and two-bridge branch
loci, framed-link surgery calculus, Seifert invariants of torus-knot
quotients, involution extension rules, a symmetry census of small knots,
and numerics for the Dehn filling space of the torus.
"""

from .slopes import Slope, SL2Word, slope_to_word, matrix_to_slope
from .tangles import TwistVector, PlanarDiagram, slope_to_twist_vector, two_bridge_diagram, diagram_determinant, branch_locus
from .surgery import INFINITE, Component, FramedLink, h1_order, rolfsen_twist, blow_down
from .seifert import SeifertInvariants, bezout, quotient_invariants, quotient_h1_order, sfs_h1_order, euler_number
from .involution import SymmetryType, QuotientKind, QuotientDescriptor, ExtensionResult, extend_involution
from .census import load_census, lookup, quotient_report
from .hyperbolic import MobiusMap, filling_family, classify, complex_length, core_geodesic_length, conjugation_residual

__version__ = "0.1.0"

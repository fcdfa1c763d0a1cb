"""Mod 2 characteristic classes of quadric bundles.

Exact computations in H*(BO(r)), H*(BGL(r)) and the classifying-space
cohomology of the group GO(r) of orthogonal similitudes, all over F2: the
generator-and-relation model, pullbacks and Chern maps, the coaction that
detects quadric invariants, Gysin boundaries for degenerating families,
and Toda's primitive-ring machinery.
"""

from .errors import (
    ContextMismatch, DegreeCapExceeded, ExprSyntaxError, InternalInvariantViolation,
    MathDomainError, NoSolution, NotInImage, QuadInvError, UnboundVariable,
    UnknownGenerator, UnsupportedRank,
)
from .expr import eval_expr, format_poly, parse_expr, parse_poly
from .generators import GeneratorSet
from .gf2 import GF2Solver, LinearSystemGF2, solve_gf2
from .gysin import (
    MonomialFactorization, boundary_even_to_odd, boundary_odd_to_even,
    derivation_s, gysin_d_even, gysin_d_odd,
)
from .maps import (
    action_even, action_odd, chern_to_go_even, chern_to_go_odd, phi_map,
    pistar_even, pistar_odd, theta_compat_check, w_to_what, what_to_w,
)
from .poly import HomMap, Polynomial, Ring, Var, binom_mod2, degree_cap, set_degree_cap, substitute
from .primitive import (
    construct_rank_4m2_generators, ph_generators, primitive_check, primitive_witness,
)
from .rings import (
    eq_go_even, express_in_generators, make_ring, normal_form, psi_embed, relation_generators,
)
from .toda import (
    TodaContext, coaction_phi, d_i_op, hat_elements, is_in_B, primitive_check_A,
    psi_inverse, star_product, toda_context, toda_generators, toda_generators_N4,
)

__version__ = "0.1.0"

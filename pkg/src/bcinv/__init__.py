"""Exact one-sided (b,c)-inverses and related generalized inverses over finite rings."""

from .errors import (
    InconsistencyError, PreconditionError, RingError, RingMismatchError, TheoremViolation,
)
from .ideals import (
    AnnihilatorIdeal, PrincipalIdeal, ideal_eq_cr_cabr, ideal_eq_rb_rcab, solve_left_factor,
    solve_right_factor, unit_sum_decomposition, unit_sum_decomposition_right,
)
from .inverses import (
    InverseKind, Witness, ann_bc, delta_inverses, drazin, drazin_index, group, hybrid_bc,
    inverse_along, is_regular, is_witness, left_ann_bc, left_bc, moore_penrose, pi_regular,
    right_ann_bc, right_bc, solve, star_regular, two_sided_bc, witness_set,
)
from .kernels import BACKEND
from .perturbation import (
    PerturbationResult, jacobson_inverse, jacobson_left, jacobson_right, perturbed_one_sided,
)
from .products import mixed_transfer, split_left, split_right, transfer
from .ring import (
    Element, RingHandle, build_ring, invertible, left_invertible, parse_ring_spec, right_invertible,
)
from .smith import smith_normal_form, solve_linear_mod

__version__ = "0.1.0"

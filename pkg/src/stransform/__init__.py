"""Exact number-theoretic S-transforms over arbitrary-precision residue rings."""

from .bigring import (
    RingElement,
    RingModulus,
    exponent_reduce,
    geometric_modulus,
    inverse_mod,
    ring_add,
    ring_inv,
    ring_mul,
    ring_pow,
    ring_sub,
)
from .duality import complement, de_morgan_product, dual_product, dual_sum, dual_theorem_suite
from .errors import (
    ConsistencyViolation,
    ExistenceConditionFailed,
    InvalidParameter,
    LengthMismatch,
    ModulusMismatch,
    NoPlanFound,
    NotInvertible,
    OrderMismatch,
    STransformError,
    TheoremViolation,
)
from .gaussian import GaussianElement, GaussianPlan, gauss_forward, gauss_inverse, make_gaussian_plan
from .pairs import PairElement, PairPlan, pair_cross, pair_diagnostic, pair_plan, pair_pow
from .plan import Regime, RegimeKind, TransformPlan, make_plan, plan_search, smallest_plan
from .rebase import RebasePair, build_kernel, make_pair, rebase_image, rebase_original
from .theorems import (
    autocorrelation,
    convolve_exact_integers,
    cyclic_convolve,
    image_autocorrelation,
    parseval_check,
    shift_image,
    shift_original,
)
from .transform import Sequence, forward, inverse, matrices

__version__ = "0.1.0"

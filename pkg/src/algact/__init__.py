"""Exact computations with actions, split extensions and weak actors of
finite-dimensional nonassociative algebras over Q and odd prime fields."""

from .fields import Field, GF, PrimeField, Q, Rationals, make_field, scalar_arith
from .algebra import (
    Algebra,
    BilinearOp,
    Centers,
    IdentityReport,
    annihilator,
    centers,
    check_identity,
    is_homomorphism,
    leibniz_kernel,
    multiply,
    product_subspace,
)
from .opspace import (
    LinearSystem,
    OperatorSpace,
    anti_derivations,
    biderivations,
    bimultipliers,
    check_bim_commutation,
    comm_poisson_usga,
    cpoisson_diagonal_report,
    der_module_action,
    derivations,
    inner_embedding,
    multipliers,
    nullspace,
    poisson_usga,
    space_of_kind,
)
from .actions import (
    ActionData,
    ActorMorphism,
    SplitExtension,
    ValidationReport,
    action_to_morphism,
    enumerate_actions,
    enumerate_acting_morphisms,
    extract_action,
    is_acting_morphism,
    morphism_to_action,
    semidirect,
    validate_action,
    weak_actor,
    zero_action,
)
from .catalog import (
    MorphismData,
    builtin,
    open_problem_search,
    repro_suite,
)
from . import errors

__version__ = "0.1.0"

"""Exact kernel for Z/2-graded linear algebra and affine supergeometry."""

from .errors import (
    ContextMismatch,
    KernelError,
    NeitherBlockInvertible,
    NonConstantBody,
    NotInvertible,
    ParityError,
    PointNotOnVariety,
    ReservedGeneratorCollision,
    ScriptError,
)
from .poly import (
    Context,
    Monomial,
    Parity,
    RationalPoint,
    SuperPoly,
    normalize_odd_word,
)
from .derivation import SuperDerivation, TangentVector, bracket
from .matrix import SuperDim, SuperMatrix, pi_reverse, superbracket
from .morphism import (
    MapClass,
    Morphism,
    classify_at,
    compose,
    differential_at,
    pullback,
)
from .variety import (
    LinearForm,
    PointedVariety,
    TangentSpaceResult,
    differential_of_function,
    tangent_space,
    value_at,
)
from .distribution import Distribution, Involutivity, involutive
from .groups import (
    AxiomResult,
    GroupLaw,
    check_group_axioms,
    infinitesimal_action,
    is_left_invariant,
    left_invariant_field,
    product_context,
)
from .liealg import (
    LieAlgebraResult,
    MatrixGroupSpec,
    adjoint_bracket,
    commutator_bracket,
    lie_algebra,
)

__all__ = [
    "AxiomResult",
    "Context",
    "ContextMismatch",
    "Distribution",
    "GroupLaw",
    "Involutivity",
    "KernelError",
    "LieAlgebraResult",
    "LinearForm",
    "MapClass",
    "MatrixGroupSpec",
    "Monomial",
    "Morphism",
    "NeitherBlockInvertible",
    "NonConstantBody",
    "NotInvertible",
    "Parity",
    "ParityError",
    "PointNotOnVariety",
    "PointedVariety",
    "RationalPoint",
    "ReservedGeneratorCollision",
    "ScriptError",
    "SuperDerivation",
    "SuperDim",
    "SuperMatrix",
    "SuperPoly",
    "TangentSpaceResult",
    "TangentVector",
    "adjoint_bracket",
    "bracket",
    "check_group_axioms",
    "classify_at",
    "commutator_bracket",
    "compose",
    "differential_at",
    "differential_of_function",
    "infinitesimal_action",
    "involutive",
    "is_left_invariant",
    "left_invariant_field",
    "lie_algebra",
    "normalize_odd_word",
    "pi_reverse",
    "product_context",
    "pullback",
    "superbracket",
    "tangent_space",
    "value_at",
]

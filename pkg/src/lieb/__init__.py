"""Exact Grassmann-algebra computations on finite-dimensional real Lie algebras.

Structure constants, Schouten brackets, invariant multivectors, extended Killing-type
forms, graded decompositions and Yang-Baxter certificates, all over the rationals.
"""

from __future__ import annotations

from .algebra import (
    EndoMap,
    LieAlgebra,
    adjoint,
    center,
    derivation_algebra,
    ideal_report,
    is_automorphism,
    is_derivation,
    killing_form,
    load_algebra,
    structure_report,
    trace_form,
)
from .catalog import expected_results, get_algebra, list_names
from .errors import InputError, LiebError, MathFailure
from .exterior import (
    MultiVector,
    ad_power,
    format_multivector,
    lambda_power,
    parse_multivector,
    schouten,
    wedge,
)
from .forms import MultiLinearForm, extend_form, invariant_forms, is_invariant_form
from .gradation import Gradation, induced_decomposition, limit_degrees, load_gradation, make_gradation, root_check
from .invariants import (
    ideal_invariant_bridge,
    invariant_subspace,
    is_invariant,
    nilpotent_invariant_generators,
    reduced_invariant_forms,
    reduced_schouten,
    reduced_space,
)
from .linalg import Subspace
from .ybe import (
    Cochain,
    ce_differential,
    certify_r,
    cocommutator,
    is_cocommutator,
    mcybe_residual,
    orbit_dimension,
    quadratic_separator,
    reduced_orbit_dimension,
    same_coproduct,
)

__version__ = "0.1.0"

__all__ = [
    "Cochain",
    "EndoMap",
    "Gradation",
    "InputError",
    "LieAlgebra",
    "LiebError",
    "MathFailure",
    "MultiLinearForm",
    "MultiVector",
    "Subspace",
    "ad_power",
    "adjoint",
    "ce_differential",
    "center",
    "certify_r",
    "cocommutator",
    "derivation_algebra",
    "expected_results",
    "extend_form",
    "format_multivector",
    "get_algebra",
    "ideal_invariant_bridge",
    "ideal_report",
    "induced_decomposition",
    "invariant_forms",
    "invariant_subspace",
    "is_automorphism",
    "is_cocommutator",
    "is_derivation",
    "is_invariant",
    "is_invariant_form",
    "killing_form",
    "lambda_power",
    "limit_degrees",
    "list_names",
    "load_algebra",
    "load_gradation",
    "make_gradation",
    "mcybe_residual",
    "nilpotent_invariant_generators",
    "orbit_dimension",
    "parse_multivector",
    "quadratic_separator",
    "reduced_invariant_forms",
    "reduced_orbit_dimension",
    "reduced_schouten",
    "reduced_space",
    "root_check",
    "same_coproduct",
    "schouten",
    "structure_report",
    "trace_form",
    "wedge",
]

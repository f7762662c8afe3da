"""Crisp, fuzzy and quantum sets on a square lattice, with simulated registers and projector logic."""
from .errors import ConsistencyError, DegenerateSetError, DomainError, ParseError, QulogicError
from .lattice import Dot, GridSpec, flatten, unflatten
from .fuzzysets import (
    CrispSet, FuzzySet, StandardizedFuzzySet, crisp_and, crisp_not, crisp_or, crisp_to_fuzzy,
    fuzzy_and, fuzzy_not, fuzzy_or, likelihood_fuzzy, standardize,
)
from .qusets import QuSet, basis, from_fuzzy_sqrt, inner, normalize, overlap_probability, probabilities
from .registers import (
    OverlapEstimate, QuantumRegister, StochasticRegister, empirical_distribution, estimate_overlap,
)
from .operators import (
    MixedState, OrthogonalFamily, Projector, QuMap, UnsupportedFamilyError, apply, commutator,
    compose, diagonal_operator, diagonalize_family, family_from_orthonormal, identity, is_projector,
    logic_and, logic_not, logic_or, mixed_state, project_set, projector_from_quset,
)

__version__ = "0.1.0"

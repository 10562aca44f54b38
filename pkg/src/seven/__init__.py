"""Regular circle actions on 2-connected 7-manifolds, by exact invariant arithmetic."""

from .actions import (
    ActionCount,
    ActionWitness,
    admits_action,
    count_actions,
    family_diffeo,
    family_homeo,
    sphere_action_set,
    tangent_bundle_action_set,
)
from .classify import (
    ClassificationResult,
    certify_period,
    classify_diffeo,
    classify_homeo,
    same_invariants,
)
from .errors import DomainError
from .exact import RatModZ, ResidueModK, ratmodz_add, ratmodz_normalize, residue_reduce
from .invariants import (
    Category,
    CoreManifold,
    InvariantTuple,
    ManifoldDescriptor,
    circle_bundle_invariants,
    core_invariants,
    descriptor_invariants,
    exotic_mu,
)
from .theta import ThetaClass, ThetaError, enumerate_theta, validate_theta

__version__ = "0.1.0"

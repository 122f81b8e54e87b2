"""Registry of hypergeometric identities and their multi-route verification."""
from .registry import HGF_IDS, IDENTITY_IDS, STOKES_IDS, BoundaryTerm, Identity, TrigTerm, lookup, registry
from .verify import (
    Validity,
    VerificationRecord,
    calibrate,
    closed_form,
    permutation_reduction,
    sample_parameters,
    validity,
    verify,
)

__all__ = [
    "Identity",
    "BoundaryTerm",
    "TrigTerm",
    "registry",
    "lookup",
    "IDENTITY_IDS",
    "HGF_IDS",
    "STOKES_IDS",
    "Validity",
    "VerificationRecord",
    "validity",
    "verify",
    "closed_form",
    "permutation_reduction",
    "calibrate",
    "sample_parameters",
]

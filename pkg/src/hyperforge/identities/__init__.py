"""Catalog of weighted hypergeometric summation and transformation
identities, each with an exact sampler, a printed right-hand side, and
(where one exists) a derivation record tying it to a base argument
transformation and a summation rule."""

from .master import (
    ExpansionBasis,
    MasterExpansion,
    SummationPatternMismatch,
    basis_from_transform,
    master_lemma_expand,
    regenerate_rhs,
)
from .model import Derivation, IdentityEntry, SecondaryCheck
from .catalog import (
    ADJUDICATIONS,
    catalog_identities,
    entry_by_id,
)
from .verify import verify_identity

__all__ = [
    "ADJUDICATIONS",
    "Derivation",
    "ExpansionBasis",
    "IdentityEntry",
    "MasterExpansion",
    "SecondaryCheck",
    "SummationPatternMismatch",
    "basis_from_transform",
    "catalog_identities",
    "entry_by_id",
    "master_lemma_expand",
    "regenerate_rhs",
    "verify_identity",
]

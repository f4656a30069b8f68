"""
Mimir - finite groupoids, meromorphisms and the simplified calculus of fractions.

This package holds the mathematics; it never reads configuration and never
prints. Searches and constructions take explicit caps.
"""

from .errors import (
    GroupoidError,
    MalformedSpecError,
    NotAFunctorError,
    NotAMeromorphismError,
    PreconditionError,
    QuotientError,
    SizeGuardError,
)
from .groupoid import (
    DEFAULT_MAX_ARROWS,
    DEFAULT_MAX_CONSTRUCTION_ARROWS,
    FiniteGroupoid,
    GroupoidClass,
    SetMap,
    build_standard,
    classify,
    orbits_and_vertex_groups,
    validate_groupoid,
)
from .search import find_isomorphism
from .atlas import OrbitalAtlas, atlases_equivalent, orbital_atlas, refine_atlas
from .functor import (
    Functor,
    FunctorProfile,
    NatTransformation,
    Subgroupoid,
    analyze_functor,
    kernel,
    naturally_isomorphic,
    validate_functor,
)
from .build import (
    fibred_product,
    holograph,
    induce,
    quotient_by_principal,
    square_groupoid,
    subactor_decompose,
    transfer_actor,
    weak_pullback,
)
from .transversal import butterfly, cotransversality, transversality_status
from .fraction import (
    Fraction,
    Meromorphism,
    check_meromorphism,
    compose_meromorphisms,
    fractions_equivalent,
    gamma,
    is_holomorphism,
    is_irreducible,
    is_meriedric_equivalence,
    morita_equivalent,
    reduce,
)
from .bibundle import Bibundle, from_bibundle, to_bibundle, validate_bibundle
from .gzprobe import gz_probe
from .reflect import check_reflection_universal, fundamental_plurigroup

__all__ = [
    'GroupoidError', 'MalformedSpecError', 'NotAFunctorError', 'NotAMeromorphismError',
    'PreconditionError', 'QuotientError', 'SizeGuardError',
    'DEFAULT_MAX_ARROWS', 'DEFAULT_MAX_CONSTRUCTION_ARROWS',
    'FiniteGroupoid', 'GroupoidClass', 'SetMap', 'build_standard', 'classify',
    'orbits_and_vertex_groups', 'validate_groupoid', 'find_isomorphism',
    'OrbitalAtlas', 'atlases_equivalent', 'orbital_atlas', 'refine_atlas',
    'Functor', 'FunctorProfile', 'NatTransformation', 'Subgroupoid', 'analyze_functor',
    'kernel', 'naturally_isomorphic', 'validate_functor',
    'fibred_product', 'holograph', 'induce', 'quotient_by_principal', 'square_groupoid',
    'subactor_decompose', 'transfer_actor', 'weak_pullback',
    'butterfly', 'cotransversality', 'transversality_status',
    'Fraction', 'Meromorphism', 'check_meromorphism', 'compose_meromorphisms',
    'fractions_equivalent', 'gamma', 'is_holomorphism', 'is_irreducible',
    'is_meriedric_equivalence', 'morita_equivalent', 'reduce',
    'Bibundle', 'from_bibundle', 'to_bibundle', 'validate_bibundle',
    'gz_probe', 'check_reflection_universal', 'fundamental_plurigroup',
]

"""Exact combinatorics of string algebras: strings, bands, hom counts,
component verdicts, and a rational-arithmetic matrix oracle to check them.
"""

from .errors import (
    BadDecomposition,
    DimensionMismatch,
    DomainError,
    InvalidWitness,
    NotAComponent,
    NotAString,
    NotBand,
    NotQuadratic,
    NotQuasiBand,
    ParseError,
    SameModuleMismatch,
    SpecMismatch,
    TrivialWord,
    ZeroParameter,
)
from .algebra import (
    AlgebraSpec,
    ArrowDecl,
    ValidationReport,
    gentle_vertices,
    is_gentle_algebra,
    is_member_monomial_ideal,
    load_algebra,
    parse_algebra,
    projective_word,
    validate_algebra,
)
from .words import (
    FacTriple,
    Letter,
    SubTriple,
    Word,
    canonical_word,
    concat,
    count_fac,
    count_sub,
    enumerate_strings,
    iter_strings,
    fac_triples,
    factor_words,
    format_word,
    inverse,
    is_string,
    left_divisors,
    make_word,
    parse_word,
    sub_triples,
    trivial_word,
    word_source,
    word_target,
    word_vertices,
)
from .bands import (
    BandClass,
    QuasiBand,
    are_equivalent,
    band_dimension,
    band_fac_tally,
    band_sub_tally,
    canonical_class,
    class_members,
    dimension_vector,
    enumerate_bands,
    fac_counts,
    is_band,
    is_quasi_band,
    parti_counts,
    sub_counts,
)
from .hom import (
    BandSequence,
    SeparationWitness,
    family_rank,
    find_separating_string,
    hom_band_band,
    hom_band_string,
    hom_string_band,
    hom_string_string,
    make_sequence,
    seq_count_from,
    seq_count_into,
)
from .components import (
    Case1Witness,
    Case2Witness,
    ComponentVerdict,
    ExtendabilityWitness,
    QuadraticWitness,
    component_dimension,
    concat_extension,
    decide_component,
    extendable,
    extendable_quadratic,
    negligible,
    negligible_quadratic,
    reverse_piece,
    split_band,
)
from .oracle import (
    MatrixModule,
    dim_ext1,
    dim_hom,
    direct_sum,
    is_regular,
    orbit_dimension,
    rank_sum,
    realize_band,
    realize_string,
    syzygy,
)

__version__ = "0.1.0"

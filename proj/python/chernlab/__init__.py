"""Hilbert, Chern and irreducible coefficients of graded quotient rings."""

from ._core import (
    ChernError,
    GroebnerBasis,
    Ideal,
    NotStabilized,
    ParseError,
    Polynomial,
    PreconditionError,
    QuotientModule,
    ResourceLimit,
    Ring,
    RingMismatch,
    Unsupported,
    associated_primes,
    cm_test,
    colength,
    colon,
    dimension_filtration,
    eliminate,
    fit_binomial,
    g_predicate,
    groebner,
    h0m,
    hilbert_coeffs,
    hs_series,
    intersect,
    ir_series,
    irreducible_coeffs,
    irreducible_decomposition,
    is_d_sequence,
    is_distinguished,
    is_m_primary,
    is_monomial_ideal,
    krull_dim,
    primary_decomposition,
    sample_sop,
    saturate,
    socle_dim,
    socle_ideal,
    theorem_report,
    unmixed_component,
    vdim,
    verify_sop,
)

__version__ = "0.1.0"

//! Exact evaluation of second-kind Chebyshev polynomials on integer
//! adjacency matrices of Dynkin-type diagrams.
//!
//! The crate covers the recurrence engine, the labeled diagram families,
//! closed forms for the sequences `f_k(X)`, periodicity and linear-growth
//! certificates with extrapolation, a finite/tame/wild classifier, and
//! syzygy traces for the associated radical-cube-zero symmetric algebras.

pub mod chebyshev;
pub mod closed_forms;
pub mod diagrams;
pub mod dynamics;
pub mod error;
pub mod matrix;
pub mod psd;
pub mod resolutions;

pub use chebyshev::{cheb_eval, cheb_seq, ChebContext};
pub use closed_forms::blocks::{
    block_decompose, block_form, hsw_closed, hsw_step, invariants_c_lambda, psi, BlockState, HswInvariants,
};
pub use closed_forms::{corner_matrices, theta_set, type_a_closed, type_l_closed, type_ltilde_closed, ThetaSet};
pub use diagrams::{
    build_diagram, coxeter_number, identify_family, reverse_labeling, DiagramSpec, Family, Identification,
};
pub use dynamics::{
    classify, classify_with, default_scan_bound, detect_growth, detect_growth_of_kind, detect_period, extrapolate,
    promote_certificate, verify_reduction_window, Classification, GrowthCertificate, GrowthKind, PeriodCertificate,
    Promotion, ReductionReport, Verdict, WildEvidence,
};
pub use error::{Error, Result};
pub use matrix::{mat_mul, row_reverse, IntMatrix};
pub use psd::{cartan_definiteness, definiteness, Definiteness};
pub use resolutions::{
    b_matrix, b_power, b_power_blocks, ext_matrix, growth_factor, projective_layers, resolution_period,
    resolution_terms, syzygy_trace, DimVector, GrowthFactor, ResolutionTrace, TraceStep,
};

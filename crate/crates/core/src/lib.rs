//! Birational endomorphisms of the affine plane.
//!
//! A [`PlaneEndo`] is a polynomial map `(x, y) ↦ (P, Q)` over ℚ. The crate
//! computes its contracting curves, fundamental points and missing lines,
//! factors it into simple affine contractions (SACs), and reduces it to the
//! normal forms `α ∘ v ∘ γ ∘ h`, the special family and `𝓥 ∪ 𝓖` with
//! exactly verified automorphism witnesses.

pub mod config;
pub mod endo;
pub mod genword;
pub mod random;
pub mod sacfactor;

pub use bipoly::{BiPoly, Rat, UniPoly};
pub use config::{
    classify_corollary, generate_example, is_admissible, rectify, ConfigClass, CorollaryType,
    LineConfig, Rectification,
};
pub use endo::{
    contracting_curves, fundamental_points, missing_lines, verify_automorphism, Contraction,
    CurveFactor, Line, MissingLines, PlaneEndo, Point,
};
pub use genword::{
    depth_of, pushforward_curve, word_cent, word_contracting_set, word_missing_set, word_n, Alpha,
    GenWord, Generator, MatM, Pushforward,
};
pub use sacfactor::{
    classify, equivalence_witness_check, left_peel, matm_factor, sac_factorize, theorem_c_reduce,
    ClassTag, Factorization, MatLetter, NormalForm, PeelStep, Reduced, SaaVerdict, Variant,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("irrational data: {0}")]
    IrrationalData(String),
    #[error("unresolved factorization: {0}")]
    Unresolved(String),
    #[error("out of class: {0}")]
    OutOfClass(String),
    #[error("stuck: no SAC peels off residual {residual}")]
    Stuck {
        residual: String,
        diagnostics: Vec<String>,
    },
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("configuration not realizable: {0}")]
    NotRealizable(String),
    #[error("admissibility methods disagree: {0}")]
    MethodDisagreement(String),
    #[error("not a missing curve: {0}")]
    NotAMissingCurve(String),
}

impl From<bipoly::PolyError> for Error {
    fn from(e: bipoly::PolyError) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

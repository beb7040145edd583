//! SAC peeling, normal forms and the matrix monoid.

mod classify;
mod matm;
mod peel;
mod reduce;

pub use classify::{
    classify, equivalence_witness_check, ClassTag, NormalForm, SaaVerdict, Variant,
};
pub use matm::{matm_factor, matm_product, MatLetter};
pub use peel::{left_peel, sac_factorize, Factorization, PeelOutcome, PeelStep, RightPeel};
pub use reduce::{theorem_c_reduce, Reduced};

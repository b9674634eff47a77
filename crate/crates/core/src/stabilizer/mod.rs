//! Stabilizer codes and the quantities around the quantum Singleton bound:
//! distance, erasure correctability, `g(M)`, cleaning and the bound itself.

mod bound;
mod code;
mod distance;
mod erasure;

pub use bound::{
    check_cleaning_regions, check_distance_correctability, check_logical_space_dim,
    check_singleton, check_two_disjoint, singleton_witness_sets, verify_code, AnalysisReport,
    Outcome, SetSampling, TwoDisjointCheck, Verdict, VerifyOptions, Witness, CLEANING_IDENTITY,
    DISTANCE_CORRECTABILITY, LEMMAS, LOGICAL_SPACE_DIM, SINGLETON, TWO_DISJOINT,
};
pub use code::{logical_space_dim, make_code, StabilizerCode};
pub use distance::{candidates_at_weight, distance, distance_with, Distance, SearchLimits};
pub use erasure::{
    check_cleaning_identity, clean, g, is_correctable, Cleaned, CleaningCheck, Correctability,
};

//! Cantor-normal-form ordinals and the foundation-rank calculus.
//!
//! Foundation ranks are upper-bound annotations for SU-rank bookkeeping and
//! are never reported as SU-rank itself.

mod ordinal;
mod realize;
mod sequence;

pub use ordinal::{lascar_bounds, LascarInterval, OrdinalCNF};
pub use realize::{b_poly, realize_sequence, ChainGenerator, Realization};
pub use sequence::{degree_sequence_validate, fr_rank, fr_witness, Entry, RankSequence, Shape};

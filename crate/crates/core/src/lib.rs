//! Exact symbolic computation for difference-differential algebra in
//! characteristic zero.
//!
//! The crate is layered. [`kernel`] supplies exact coefficients and sparse
//! polynomials; [`operators`] adds the derivation D and the endomorphism σ;
//! [`groebner`] supplies ideal membership, elimination and dimension. The
//! geometric modules ([`prolong`], [`jets`], [`arcs`]) are built on those,
//! while [`ranks`] and [`groups`] are self-contained calculators.

pub mod arcs;
mod error;
pub mod groebner;
pub mod groups;
pub mod jets;
pub mod kernel;
pub mod operators;
pub mod prolong;
pub mod ranks;

pub use error::{Error, Result};
pub use groebner::{Basis, Budget, IdealPresentation, MonomialOrder};
pub use kernel::{CoeffElem, Context, Monomial, Point, Poly, Rational, Sym, Variable};
pub use ranks::{OrdinalCNF, RankSequence};

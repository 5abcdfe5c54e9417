//! Exact scalars, sparse polynomials, and the linear algebra built on them.

mod coeff;
mod context;
pub mod linalg;
pub mod multiindex;
mod poly;
mod symbol;
mod var;
pub mod zpoly;

pub use coeff::CoeffElem;
pub use context::{Context, Parameter};
pub use multiindex::taylor_row;
pub use poly::{Monomial, Point, Poly};
pub use symbol::Sym;
pub use var::Variable;
pub use zpoly::ZPoly;

/// Exact rationals, the prime field of every coefficient domain here.
pub type Rational = num_rational::BigRational;

/// Ring operations on two polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(op: ArithOp, p: &Poly, q: &Poly) -> Poly {
    match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    }
}

use std::cmp::Ordering;
use std::fmt;

use super::Sym;

/// A polynomial indeterminate.
///
/// Variables are totally ordered, and the order is also their significance
/// in every monomial order: the smaller variable is the more significant
/// one. Arc coordinates come first, then prolongation coordinates, then
/// difference-differential variables, then plain names. Within each kind
/// higher levels, `t` orders, σ-powers and D-orders rank first, so that
/// `σDx > σx > Dx > x` and `x > y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Variable {
    Plain(Sym),
    /// `σ^sigma D^d base`.
    SigmaD { base: Sym, sigma: u32, d: u32 },
    /// Prolongation coordinate `Y_level` attached to `base`.
    Prolong { base: Box<Variable>, level: u32 },
    /// Arc coordinate `x_{base,t}`, the coefficient of `ε^t`.
    Arc { base: Box<Variable>, t: u32 },
}

impl Variable {
    pub fn plain(name: &str) -> Self {
        Variable::Plain(Sym::new(name))
    }

    /// The order-zero difference-differential variable named `name`.
    pub fn base(name: &str) -> Self {
        Variable::SigmaD {
            base: Sym::new(name),
            sigma: 0,
            d: 0,
        }
    }

    pub fn sigma_d(name: &str, sigma: u32, d: u32) -> Self {
        Variable::SigmaD {
            base: Sym::new(name),
            sigma,
            d,
        }
    }

    pub fn prolong(base: &Variable, level: u32) -> Self {
        Variable::Prolong {
            base: Box::new(base.clone()),
            level,
        }
    }

    pub fn arc(base: &Variable, t: u32) -> Self {
        Variable::Arc {
            base: Box::new(base.clone()),
            t,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            Variable::Arc { .. } => 0,
            Variable::Prolong { .. } => 1,
            Variable::SigmaD { .. } => 2,
            Variable::Plain(_) => 3,
        }
    }
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        use Variable::*;
        match (self, other) {
            (Plain(a), Plain(b)) => a.cmp(b),
            (
                SigmaD { base: a, sigma: sa, d: da },
                SigmaD { base: b, sigma: sb, d: db },
            ) => a.cmp(b).then(sb.cmp(sa)).then(db.cmp(da)),
            (Prolong { base: a, level: la }, Prolong { base: b, level: lb }) => {
                lb.cmp(la).then_with(|| a.cmp(b))
            }
            (Arc { base: a, t: ta }, Arc { base: b, t: tb }) => tb.cmp(ta).then_with(|| a.cmp(b)),
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Plain(s) => write!(f, "{s}"),
            Variable::SigmaD { base, sigma: 0, d: 0 } => write!(f, "{base}"),
            Variable::SigmaD { base, sigma, d } => write!(f, "{base}[{sigma},{d}]"),
            Variable::Prolong { base, level } => write!(f, "Y({base},{level})"),
            Variable::Arc { base, t } => write!(f, "A({base},{t})"),
        }
    }
}

impl fmt::Debug for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

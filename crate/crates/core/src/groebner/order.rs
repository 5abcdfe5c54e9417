use std::cmp::Ordering;
use std::fmt;

/// A monomial order over an indexed list of variables, index 0 most
/// significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Elimination order: the first `k` variables compared by grevlex, ties
    /// broken by grevlex on the remaining variables.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            other => Err(format!("unknown monomial order `{other}` (expected lex or grevlex)")),
        }
    }
}

//! Graded-lexicographic multi-index enumeration and Taylor rows.
//!
//! Degrees ascend; within one degree, indices are lex-descending, so for two
//! variables the order-2 frame is `(1,0), (0,1), (2,0), (1,1), (0,2)`.

use super::{CoeffElem, Point, Poly, Variable};
use crate::Result;

/// All multi-indices over `n` variables of total degree exactly `d`.
pub fn of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// The jet frame: multi-indices with `1 ≤ |s| ≤ m`.
pub fn frame(n: usize, m: u32) -> Vec<Vec<u32>> {
    (1..=m).flat_map(|d| of_degree(n, d)).collect()
}

/// Multi-indices with `0 ≤ |s| ≤ d`.
pub fn up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| of_degree(n, k)).collect()
}

/// `(D_s p(a))` for `s` in [`frame`]`(vars.len(), m)`.
pub fn taylor_row(p: &Poly, vars: &[Variable], a: &Point, m: u32) -> Result<Vec<CoeffElem>> {
    frame(vars.len(), m)
        .iter()
        .map(|s| p.scaled_partial(vars, s).evaluate(a))
        .collect()
}

/// `(X - a)^s` over the frame variables.
pub fn shifted_power(vars: &[Variable], a: &Point, s: &[u32]) -> Result<Poly> {
    let mut out = Poly::one();
    for (v, &k) in vars.iter().zip(s) {
        if k == 0 {
            continue;
        }
        let av = a
            .get(v)
            .cloned()
            .ok_or_else(|| crate::Error::MissingBinding(v.clone()))?;
        let lin = &Poly::var(v.clone()) - &Poly::constant(av);
        out = &out * &lin.pow(k);
    }
    Ok(out)
}

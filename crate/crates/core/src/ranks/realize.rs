//! Symbolic generator chains realizing a rank sequence.

use std::fmt;

use num_bigint::BigInt;

use super::sequence::{Entry, RankSequence};
use crate::kernel::{CoeffElem, Poly, Variable};

/// `b_k = Σ_j (−1)^{k−j} C(k,j) σ^j(a)`, differentiated `i` times.
pub fn b_poly(base: &str, k: u64, i: u32) -> Poly {
    let k32 = u32::try_from(k).expect("σ-power fits in u32");
    let mut out = Poly::zero();
    let mut binom = BigInt::from(1);
    for j in 0..=k32 {
        let sign = if (k32 - j) % 2 == 0 { 1 } else { -1 };
        out = &out + &Poly::var(Variable::sigma_d(base, j, i)).scale(&CoeffElem::from_int(&binom * sign));
        binom = binom * (k32 - j) / (j + 1);
    }
    out
}

/// One listed generator `D^i b_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainGenerator {
    pub index: usize,
    pub k: u64,
    pub poly: Poly,
}

/// `{D^i b_{m_i}}`: the listed prefix, then `{D^i b_c : i ≥ from}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub base: String,
    pub listed: Vec<ChainGenerator>,
    /// `(from, c)`; absent when the tail is ∞.
    pub tail: Option<(usize, u64)>,
}

impl Realization {
    /// The `i`-th generator, or `None` when it is trivial.
    pub fn generator(&self, i: usize) -> Option<Poly> {
        if let Some(g) = self.listed.iter().find(|g| g.index == i) {
            return Some(g.poly.clone());
        }
        match self.tail {
            Some((from, c)) if i >= from => Some(b_poly(&self.base, c, i as u32)),
            _ => None,
        }
    }
}

impl fmt::Display for Realization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let listed: Vec<String> = self.listed.iter().map(|g| g.poly.to_string()).collect();
        write!(f, "{{{}}}", listed.join(", "))?;
        if let Some((from, c)) = self.tail {
            write!(f, " + {{D^i({}) : i >= {from}}}", b_poly(&self.base, c, 0))?;
        }
        Ok(())
    }
}

/// Generators `D^i b_{m_i}` for the target sequence, over the base `a`.
/// Infinite entries use `b_∞ = 1` and contribute nothing.
pub fn realize_sequence(target: &RankSequence, base: &str) -> Realization {
    let listed = target
        .prefix()
        .iter()
        .enumerate()
        .filter_map(|(i, e)| match e {
            Entry::Fin(k) => Some(ChainGenerator {
                index: i,
                k: *k,
                poly: b_poly(base, *k, i as u32),
            }),
            Entry::Inf => None,
        })
        .collect();
    let tail = match target.tail() {
        Entry::Fin(c) => Some((target.prefix().len(), c)),
        Entry::Inf => None,
    };
    Realization {
        base: base.to_string(),
        listed,
        tail,
    }
}

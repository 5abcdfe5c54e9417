//! Eventually constant decreasing sequences over ℕ ∪ {∞} and their
//! foundation rank.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;


use super::ordinal::OrdinalCNF;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Fin(u64),
    Inf,
}

impl Entry {
    pub fn finite(self) -> Option<u64> {
        match self {
            Entry::Fin(n) => Some(n),
            Entry::Inf => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Fin(n) => write!(f, "{n}"),
            Entry::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" => Ok(Entry::Inf),
            t => t
                .parse()
                .map(Entry::Fin)
                .map_err(|_| Error::Invalid(format!("bad sequence entry `{t}`"))),
        }
    }
}

/// `m_0 ≥ m_1 ≥ …` given by a finite prefix followed by a constant tail.
///
/// Stored canonically: the prefix never ends with an entry equal to the
/// tail. The all-∞ sequence has tail `Inf` and an empty prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankSequence {
    prefix: Vec<Entry>,
    tail: Entry,
}

/// Infinite entries `A`, exceptional finite entries `B`, tail `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    /// `None` for the all-∞ sequence.
    pub a: Option<usize>,
    pub b: usize,
    pub c: u64,
}

/// Checks that infinite entries form an initial segment and that the
/// sequence never increases.
pub fn degree_sequence_validate(entries: &[Entry], tail: Entry) -> Result<RankSequence> {
    let all: Vec<Entry> = entries.iter().copied().chain(std::iter::once(tail)).collect();
    for i in 1..all.len() {
        if all[i] == Entry::Inf && all[i - 1] != Entry::Inf {
            return Err(Error::InvalidSequence {
                index: i,
                reason: "inf after a finite entry".into(),
            });
        }
        if all[i] > all[i - 1] {
            return Err(Error::InvalidSequence {
                index: i,
                reason: format!("increase from {} to {}", all[i - 1], all[i]),
            });
        }
    }
    let mut prefix = entries.to_vec();
    while prefix.last() == Some(&tail) {
        prefix.pop();
    }
    Ok(RankSequence { prefix, tail })
}

impl RankSequence {
    pub fn new(entries: &[Entry], tail: Entry) -> Result<Self> {
        degree_sequence_validate(entries, tail)
    }

    pub fn all_infinite() -> Self {
        RankSequence {
            prefix: Vec::new(),
            tail: Entry::Inf,
        }
    }

    pub fn constant(c: u64) -> Self {
        RankSequence {
            prefix: Vec::new(),
            tail: Entry::Fin(c),
        }
    }

    pub fn prefix(&self) -> &[Entry] {
        &self.prefix
    }

    pub fn tail(&self) -> Entry {
        self.tail
    }

    pub fn get(&self, n: usize) -> Entry {
        self.prefix.get(n).copied().unwrap_or(self.tail)
    }

    pub fn shape(&self) -> Shape {
        match self.tail {
            Entry::Inf => Shape { a: None, b: 0, c: 0 },
            Entry::Fin(c) => {
                let a = self.prefix.iter().filter(|e| **e == Entry::Inf).count();
                Shape {
                    a: Some(a),
                    b: self.prefix.len() - a,
                    c,
                }
            }
        }
    }

    /// Pointwise comparison; `None` when incomparable.
    pub fn pointwise_cmp(&self, o: &Self) -> Option<Ordering> {
        let n = self.prefix.len().max(o.prefix.len()) + 1;
        let mut le = true;
        let mut ge = true;
        for i in 0..n {
            match self.get(i).cmp(&o.get(i)) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    /// Pointwise `≤` and somewhere `<`.
    pub fn strictly_below(&self, o: &Self) -> bool {
        self.pointwise_cmp(o) == Some(Ordering::Less)
    }
}

impl fmt::Display for RankSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.prefix.iter().map(|e| e.to_string()).collect();
        if p.is_empty() {
            write!(f, "| {}", self.tail)
        } else {
            write!(f, "{} | {}", p.join(","), self.tail)
        }
    }
}

impl FromStr for RankSequence {
    type Err = Error;

    /// `m_0,m_1,… | tail`, with `inf` for ∞.
    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = s
            .split_once('|')
            .ok_or_else(|| Error::Invalid(format!("sequence `{s}` lacks `| tail`")))?;
        let entries = if head.trim().is_empty() {
            Vec::new()
        } else {
            head.split(',').map(str::parse).collect::<Result<Vec<Entry>>>()?
        };
        degree_sequence_validate(&entries, tail.parse()?)
    }
}

/// `ω·(A+C) + Σ_{A ≤ j < A+B} (m_j − C)`, or `ω²` for the all-∞ sequence.
pub fn fr_rank(s: &RankSequence) -> OrdinalCNF {
    let sh = s.shape();
    let Some(a) = sh.a else {
        return OrdinalCNF::term(2, 1u32);
    };
    let sum: u64 = s.prefix[a..].iter().map(|e| e.finite().expect("finite after A") - sh.c).sum();
    OrdinalCNF::term(1, a as u64 + sh.c).add(&OrdinalCNF::finite(sum))
}

fn split_omega(beta: &OrdinalCNF) -> Option<(u64, u64)> {
    let mut k = 0u64;
    let mut n = 0u64;
    for (e, c) in beta.terms() {
        let c: u64 = c.try_into().ok()?;
        match e {
            1 => k = c,
            0 => n = c,
            _ => return None,
        }
    }
    Some((k, n))
}

/// A sequence strictly below `s` whose foundation rank is at least `beta`,
/// following the predecessor constructions of the closed form.
pub fn fr_witness(s: &RankSequence, beta: &OrdinalCNF) -> Result<RankSequence> {
    let rank = fr_rank(s);
    let out_of_range = || Error::OrdinalOutOfRange {
        beta: beta.to_string(),
        bound: rank.to_string(),
    };
    if *beta >= rank {
        return Err(out_of_range());
    }
    let (k, n) = split_omega(beta).ok_or_else(out_of_range)?;
    let sh = s.shape();
    let Some(a) = sh.a else {
        let mut prefix = vec![Entry::Inf; k as usize];
        prefix.push(Entry::Fin(n));
        return degree_sequence_validate(&prefix, Entry::Fin(0));
    };
    if sh.b > 0 {
        let mut prefix = s.prefix.clone();
        let last = prefix.last_mut().expect("b > 0");
        *last = Entry::Fin(last.finite().expect("finite after A") - 1);
        return degree_sequence_validate(&prefix, s.tail);
    }
    if a > 0 {
        let mut prefix = vec![Entry::Inf; a - 1];
        prefix.push(Entry::Fin(sh.c + n));
        return degree_sequence_validate(&prefix, s.tail);
    }
    // s is the constant c > 0 and beta < ω·c
    let prefix = vec![Entry::Fin(sh.c); n as usize];
    degree_sequence_validate(&prefix, Entry::Fin(sh.c - 1))
}


#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> RankSequence {
        s.parse().unwrap()
    }

    fn o(s: &str) -> OrdinalCNF {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        let s = seq("3,2,2 | 2");
        let sh = s.shape();
        assert_eq!((sh.a, sh.b, sh.c), (Some(0), 1, 2));
        assert_eq!(s.to_string(), "3 | 2");
        match "1,2 | 2".parse::<RankSequence>() {
            Err(Error::InvalidSequence { index, .. }) => assert_eq!(index, 1),
            other => panic!("{other:?}"),
        }
        match "inf,3,inf | 3".parse::<RankSequence>() {
            Err(Error::InvalidSequence { index, reason }) => {
                assert_eq!(index, 2);
                assert!(reason.contains("inf"));
            }
            other => panic!("{other:?}"),
        }
        assert!("2 | 3".parse::<RankSequence>().is_err());
    }

    #[test]
    fn closed_form() {
        assert_eq!(fr_rank(&RankSequence::all_infinite()), o("w^2"));
        assert_eq!(fr_rank(&seq("inf,5,3 | 3")), o("w*4 + 2"));
        assert_eq!(fr_rank(&RankSequence::constant(0)), OrdinalCNF::zero());
        assert_eq!(fr_rank(&RankSequence::constant(6)), o("w*6"));
    }

    #[test]
    fn witnesses() {
        let w = fr_witness(&RankSequence::all_infinite(), &o("w*5")).unwrap();
        assert_eq!(w, seq("inf,inf,inf,inf,inf | 0"));
        assert_eq!(fr_rank(&w), o("w*5"));
        let w = fr_witness(&seq("3 | 2"), &o("w*2")).unwrap();
        assert_eq!(w, RankSequence::constant(2));
        let w = fr_witness(&seq("3 | 2"), &OrdinalCNF::zero()).unwrap();
        assert!(w.strictly_below(&seq("3 | 2")));
        assert!(fr_witness(&RankSequence::constant(0), &OrdinalCNF::zero()).is_err());
        assert!(fr_witness(&seq("3 | 2"), &o("w*2 + 1")).is_err());
    }
}

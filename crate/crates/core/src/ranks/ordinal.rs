//! Ordinals below ω^ω in Cantor normal form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `ω^{e_1}·c_1 + … + ω^{e_k}·c_k` with `e_1 > … > e_k` and every `c_i > 0`.
///
/// The derived ordering on the term list is the ordinal ordering: the first
/// differing term decides, by exponent and then coefficient, and a proper
/// prefix is smaller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct OrdinalCNF {
    terms: Vec<(u32, BigUint)>,
}

impl OrdinalCNF {
    pub fn zero() -> Self {
        OrdinalCNF::default()
    }

    pub fn finite(n: u64) -> Self {
        OrdinalCNF::term(0, n)
    }

    pub fn omega() -> Self {
        OrdinalCNF::term(1, 1u32)
    }

    /// `ω^e·c`.
    pub fn term(e: u32, c: impl Into<BigUint>) -> Self {
        let c = c.into();
        if c.is_zero() {
            OrdinalCNF::zero()
        } else {
            OrdinalCNF { terms: vec![(e, c)] }
        }
    }

    /// Accepts terms in any order and merges equal exponents, so the result
    /// is the natural sum of the terms.
    pub fn from_terms(ts: impl IntoIterator<Item = (u32, BigUint)>) -> Self {
        let mut v: Vec<(u32, BigUint)> = ts.into_iter().filter(|t| !t.1.is_zero()).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(u32, BigUint)> = Vec::new();
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        OrdinalCNF { terms: out }
    }

    pub fn terms(&self) -> &[(u32, BigUint)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 0)
    }

    /// Coefficient of `ω^e`.
    pub fn coeff(&self, e: u32) -> BigUint {
        self.terms
            .iter()
            .find(|t| t.0 == e)
            .map(|t| t.1.clone())
            .unwrap_or_default()
    }

    /// Ordinal sum: terms of `self` below the leading exponent of `o` are
    /// absorbed.
    pub fn add(&self, o: &Self) -> Self {
        let Some((e, c)) = o.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<(u32, BigUint)> = self.terms.iter().filter(|t| t.0 > *e).cloned().collect();
        let carry = self.coeff(*e);
        terms.push((*e, &carry + c));
        terms.extend(o.terms[1..].iter().cloned());
        OrdinalCNF { terms }
    }

    /// Hessenberg natural sum.
    pub fn natsum(&self, o: &Self) -> Self {
        OrdinalCNF::from_terms(self.terms.iter().chain(&o.terms).cloned())
    }

    /// `self·n` for a natural number `n`.
    pub fn times(&self, n: u64) -> Self {
        (0..n).fold(OrdinalCNF::zero(), |acc, _| acc.add(self))
    }
}

impl fmt::Display for OrdinalCNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "w*{c}")?,
                _ => write!(f, "w^{e}*{c}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for OrdinalCNF {
    type Err = Error;

    /// Parses `w^k*c` terms joined by `+`. Exponents must strictly decrease.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Invalid(format!("ordinal `{s}`: {why}"));
        let s = s.trim();
        if s == "0" {
            return Ok(OrdinalCNF::zero());
        }
        let mut terms: Vec<(u32, BigUint)> = Vec::new();
        for part in s.split('+') {
            let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            if part.is_empty() {
                return Err(bad("empty term"));
            }
            let (e, c) = if let Some(rest) = part.strip_prefix('w') {
                let (exp, coeff) = match rest.split_once('*') {
                    Some((a, b)) => (a, Some(b)),
                    None => (rest, None),
                };
                let e = match exp.strip_prefix('^') {
                    Some(k) => k.parse::<u32>().map_err(|_| bad("bad exponent"))?,
                    None if exp.is_empty() => 1,
                    None => return Err(bad("expected `^` or `*` after w")),
                };
                let c = match coeff {
                    Some(k) => k.parse::<BigUint>().map_err(|_| bad("bad coefficient"))?,
                    None => BigUint::one(),
                };
                (e, c)
            } else {
                (0, part.parse::<BigUint>().map_err(|_| bad("bad term"))?)
            };
            if c.is_zero() {
                return Err(bad("zero coefficient"));
            }
            if let Some(last) = terms.last() {
                if last.0 <= e {
                    return Err(bad("exponents must strictly decrease"));
                }
            }
            terms.push((e, c));
        }
        Ok(OrdinalCNF { terms })
    }
}

/// `[α + β, α ⊕ β]`, the range allowed for a rank of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LascarInterval {
    pub lower: OrdinalCNF,
    pub upper: OrdinalCNF,
    pub pinned: bool,
}

impl fmt::Display for LascarInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// Bounds for the rank of `ab` given the rank of `a` over `b` and of `b`.
pub fn lascar_bounds(a_given_b: &OrdinalCNF, b: &OrdinalCNF) -> LascarInterval {
    let lower = a_given_b.add(b);
    let upper = a_given_b.natsum(b);
    debug_assert!(lower.cmp(&upper) != Ordering::Greater);
    LascarInterval {
        pinned: lower == upper,
        lower,
        upper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> OrdinalCNF {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(o("1").add(&o("w")), o("w"));
        assert_eq!(o("w").add(&o("1")), o("w + 1"));
        assert_eq!(o("w*2 + 1").add(&o("w^2")), o("w^2"));
        assert_eq!(o("w*2 + 1").add(&o("w*3 + 2")), o("w*5 + 2"));
    }

    #[test]
    fn natural_sum() {
        assert_eq!(o("w").natsum(&o("1")), o("w + 1"));
        assert_eq!(o("w^2 + w").natsum(&o("w*2 + 3")), o("w^2 + w*3 + 3"));
        assert_eq!(OrdinalCNF::zero().natsum(&o("w*7 + 2")), o("w*7 + 2"));
    }

    #[test]
    fn ordering() {
        assert!(o("w") > o("100"));
        assert!(o("w*2") > o("w + 5"));
        assert!(o("w^2") > o("w*9 + 9"));
        assert!(o("w + 1") > o("w"));
    }

    #[test]
    fn printing() {
        assert_eq!(o("w^2*3 + w + 4").to_string(), "w^2*3 + w*1 + 4");
        assert_eq!(o("w*4 + 2").to_string(), "w*4 + 2");
        assert_eq!(OrdinalCNF::zero().to_string(), "0");
        assert!("1 + w".parse::<OrdinalCNF>().is_err());
        assert!("w*0".parse::<OrdinalCNF>().is_err());
    }

    #[test]
    fn lascar() {
        let i = lascar_bounds(&o("1"), &o("w"));
        assert_eq!((i.lower, i.upper, i.pinned), (o("w"), o("w + 1"), false));
        let i = lascar_bounds(&o("w"), &o("w"));
        assert_eq!((i.lower.clone(), i.pinned), (o("w*2"), true));
        let i = lascar_bounds(&OrdinalCNF::zero(), &o("w^2 + 3"));
        assert!(i.pinned);
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;
use super::Sym;

/// An exact scalar: a rational function of the declared parameters with
/// integer coefficients.
///
/// The representation is canonical. `Frac` is used only when a parameter
/// actually occurs; numerator and denominator are coprime in `Z[params]`
/// and the denominator has a positive lex-leading coefficient. Derived
/// equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CoeffElem {
    Rat(BigRational),
    Frac { num: ZPoly, den: ZPoly },
}

impl Default for CoeffElem {
    fn default() -> Self {
        CoeffElem::zero()
    }
}

impl CoeffElem {
    pub fn zero() -> Self {
        CoeffElem::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        CoeffElem::Rat(BigRational::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        CoeffElem::Rat(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        CoeffElem::Rat(BigRational::new(n.into(), d.into()))
    }

    pub fn param(s: Sym) -> Self {
        CoeffElem::Frac {
            num: ZPoly::var(s),
            den: ZPoly::one(),
        }
    }

    /// Builds `num / den` in canonical form; `None` if `den` is zero.
    pub fn from_frac(num: ZPoly, den: ZPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(CoeffElem::zero());
        }
        let g = ZPoly::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.lead_sign_negative() {
            num = num.neg();
            den = den.neg();
        }
        Some(match (num.as_constant(), den.as_constant()) {
            (Some(n), Some(d)) => CoeffElem::Rat(BigRational::new(n, d)),
            _ => CoeffElem::Frac { num, den },
        })
    }

    fn parts(&self) -> (ZPoly, ZPoly) {
        match self {
            CoeffElem::Rat(r) => (
                ZPoly::constant(r.numer().clone()),
                ZPoly::constant(r.denom().clone()),
            ),
            CoeffElem::Frac { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, CoeffElem::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, CoeffElem::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            CoeffElem::Rat(r) => Some(r),
            CoeffElem::Frac { .. } => None,
        }
    }

    /// Parameters occurring in the numerator or denominator.
    pub fn params(&self) -> Vec<Sym> {
        match self {
            CoeffElem::Rat(_) => Vec::new(),
            CoeffElem::Frac { num, den } => {
                let mut v = num.vars();
                v.extend(den.vars());
                v.sort();
                v.dedup();
                v
            }
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            CoeffElem::Rat(r) if r.is_zero() => None,
            CoeffElem::Rat(r) => Some(CoeffElem::Rat(r.recip())),
            CoeffElem::Frac { num, den } => CoeffElem::from_frac(den.clone(), num.clone()),
        }
    }

    pub fn checked_div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self * &i)
    }

    pub fn pow(&self, e: u32) -> Self {
        match self {
            CoeffElem::Rat(r) => CoeffElem::Rat(num_traits::pow(r.clone(), e as usize)),
            CoeffElem::Frac { num, den } => CoeffElem::Frac {
                num: num.pow(e),
                den: den.pow(e),
            },
        }
    }

    /// Substitutes every parameter by the image `f(param)`; `None` if a
    /// denominator vanishes.
    pub fn map_params(&self, f: &dyn Fn(Sym) -> CoeffElem) -> Option<Self> {
        match self {
            CoeffElem::Rat(_) => Some(self.clone()),
            CoeffElem::Frac { num, den } => {
                let n = eval_zpoly(num, f);
                let d = eval_zpoly(den, f);
                n.checked_div(&d)
            }
        }
    }

    /// Applies the derivation determined by the parameter images `d(param)`.
    pub fn derive(&self, d: &dyn Fn(Sym) -> CoeffElem) -> Self {
        match self {
            CoeffElem::Rat(_) => CoeffElem::zero(),
            CoeffElem::Frac { num, den } => {
                let dz = |p: &ZPoly| -> CoeffElem {
                    let mut acc = CoeffElem::zero();
                    for s in p.vars() {
                        let partial = CoeffElem::from_zpoly(p.derivative(s));
                        acc = &acc + &(&partial * &d(s));
                    }
                    acc
                };
                let n = CoeffElem::from_zpoly(num.clone());
                let dn = CoeffElem::from_zpoly(den.clone());
                let top = &(&dz(num) * &dn) - &(&n * &dz(den));
                top.checked_div(&(&dn * &dn)).expect("denominator is nonzero")
            }
        }
    }

    pub fn from_zpoly(p: ZPoly) -> Self {
        CoeffElem::from_frac(p, ZPoly::one()).expect("unit denominator")
    }

    /// True when printing can put a leading minus sign in front of the absolute value.
    pub fn is_negative(&self) -> bool {
        match self {
            CoeffElem::Rat(r) => r.is_negative(),
            CoeffElem::Frac { num, .. } => num.terms().count() == 1 && num.lead_sign_negative(),
        }
    }
}

fn eval_zpoly(p: &ZPoly, f: &dyn Fn(Sym) -> CoeffElem) -> CoeffElem {
    let mut acc = CoeffElem::zero();
    for (m, c) in p.terms() {
        let mut t = CoeffElem::from_int(c.clone());
        for &(s, e) in m {
            t = &t * &f(s).pow(e);
        }
        acc = &acc + &t;
    }
    acc
}

impl<'a> Add<&'a CoeffElem> for &'a CoeffElem {
    type Output = CoeffElem;
    fn add(self, o: &CoeffElem) -> CoeffElem {
        if let (CoeffElem::Rat(a), CoeffElem::Rat(b)) = (self, o) {
            return CoeffElem::Rat(a + b);
        }
        let (an, ad) = self.parts();
        let (bn, bd) = o.parts();
        CoeffElem::from_frac(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd)).unwrap()
    }
}

impl<'a> Sub<&'a CoeffElem> for &'a CoeffElem {
    type Output = CoeffElem;
    fn sub(self, o: &CoeffElem) -> CoeffElem {
        self + &(-o)
    }
}

impl<'a> Mul<&'a CoeffElem> for &'a CoeffElem {
    type Output = CoeffElem;
    fn mul(self, o: &CoeffElem) -> CoeffElem {
        if let (CoeffElem::Rat(a), CoeffElem::Rat(b)) = (self, o) {
            return CoeffElem::Rat(a * b);
        }
        if self.is_zero() || o.is_zero() {
            return CoeffElem::zero();
        }
        let (an, ad) = self.parts();
        let (bn, bd) = o.parts();
        CoeffElem::from_frac(an.mul(&bn), ad.mul(&bd)).unwrap()
    }
}

impl Neg for &CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        match self {
            CoeffElem::Rat(r) => CoeffElem::Rat(-r),
            CoeffElem::Frac { num, den } => CoeffElem::Frac {
                num: num.neg(),
                den: den.clone(),
            },
        }
    }
}

impl Neg for CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        -&self
    }
}

impl From<i64> for CoeffElem {
    fn from(n: i64) -> Self {
        CoeffElem::from_int(n)
    }
}

impl From<BigRational> for CoeffElem {
    fn from(r: BigRational) -> Self {
        CoeffElem::Rat(r)
    }
}

impl fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffElem::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            CoeffElem::Frac { num, den } => {
                if den.as_constant().map_or(false, |c| c.is_one()) {
                    if num.terms().count() == 1 {
                        write!(f, "{num}")
                    } else {
                        write!(f, "({num})")
                    }
                } else {
                    write!(f, "({num})/({den})")
                }
            }
        }
    }
}

impl fmt::Debug for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c() -> CoeffElem {
        CoeffElem::param(Sym::new("c"))
    }

    #[test]
    fn cancellation_is_canonical() {
        let one = CoeffElem::one();
        let cp1 = &c() + &one;
        let cm1 = &c() - &one;
        // (c^2 - 1) / (c + 1) == c - 1
        let q = (&cp1 * &cm1).checked_div(&cp1).unwrap();
        assert_eq!(q, cm1);
        // (c/2) * 2 == c
        let half = CoeffElem::ratio(1, 2);
        assert_eq!(&(&c() * &half) * &CoeffElem::from_int(2), c());
    }

    #[test]
    fn negative_denominator_normalized() {
        let a = CoeffElem::from_frac(ZPoly::one(), ZPoly::var(Sym::new("c")).neg()).unwrap();
        let b = -&CoeffElem::from_frac(ZPoly::one(), ZPoly::var(Sym::new("c"))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn collapses_to_rational() {
        let x = &c() - &c();
        assert!(x.is_zero());
        let r = c().checked_div(&c()).unwrap();
        assert!(r.is_one());
    }

    #[test]
    fn derivation_quotient_rule() {
        // D(1/c) with Dc = c^2  ->  -1
        let inv = c().inv().unwrap();
        let d = inv.derive(&|_| c().pow(2));
        assert_eq!(d, CoeffElem::from_int(-1));
    }
}

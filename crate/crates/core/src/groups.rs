//! The multiplicative group: logarithmic derivative, kernels of `P(σ)`, and
//! the cyclotomic criterion for one-basedness.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::kernel::{CoeffElem, Context, Monomial, Poly, Variable};
use crate::operators::d_variable;
use crate::{Error, Result};

/// `a_0 + a_1 T + … + a_n T^n` over ℤ, stored with `a_n ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// `T^d − 1`.
    pub fn t_pow_minus_one(d: usize) -> Self {
        let mut c = vec![BigInt::zero(); d + 1];
        c[0] = BigInt::from(-1);
        c[d] += 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, d: &Self) -> (Self, Self) {
        let n = d.degree().expect("nonzero divisor");
        assert!(d.coeffs[n].is_one(), "divisor must be monic");
        let mut r = self.coeffs.clone();
        if r.len() <= n {
            return (IntPoly::zero(), self.clone());
        }
        let mut q = vec![BigInt::zero(); r.len() - n];
        for k in (0..q.len()).rev() {
            let c = r[k + n].clone();
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(n);
        (IntPoly::new(q), IntPoly::new(r))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{i}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Sums of terms `c`, `c*T^k`, `T^k`, `T`, with `+` and `-`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Invalid(format!("polynomial `{s}`: {why}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        let mut rest = t.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if rest.len() == t.len() => (1, rest),
                _ => return Err(bad("expected `+` or `-`")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad("dangling operator"));
            }
            let (c, mono) = match term.split_once('*') {
                Some((c, m)) => (c.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?, Some(m)),
                None if term.starts_with('T') => (BigInt::one(), Some(term)),
                None => (term.parse::<BigInt>().map_err(|_| bad("bad term"))?, None),
            };
            let k = match mono {
                None => 0,
                Some("T") => 1,
                Some(m) => m
                    .strip_prefix("T^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| bad("expected T^k"))?,
            };
            *coeffs.entry(k).or_default() += c * sign;
        }
        let n = coeffs.keys().max().copied().unwrap_or(0);
        let mut v = vec![BigInt::zero(); n + 1];
        for (k, c) in coeffs {
            v[k] = c;
        }
        Ok(IntPoly::new(v))
    }
}

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

fn mobius(mut n: u64) -> i8 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// `Φ_d = ∏_{e | d} (T^e − 1)^{μ(d/e)}`, memoized.
pub fn cyclotomic(d: usize) -> IntPoly {
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cache lock").get(&d) {
        return p.clone();
    }
    assert!(d >= 1, "cyclotomic index starts at 1");
    let divisors: Vec<usize> = (1..=d).filter(|e| d % e == 0).collect();
    let mut p = IntPoly::one();
    for &e in &divisors {
        if mobius((d / e) as u64) == 1 {
            p = p.mul(&IntPoly::t_pow_minus_one(e));
        }
    }
    for &e in &divisors {
        if mobius((d / e) as u64) == -1 {
            p = p.div_rem_monic(&IntPoly::t_pow_minus_one(e)).0;
        }
    }
    cache.lock().expect("cache lock").insert(d, p.clone());
    p
}

/// `∏ σ^i(X)^{a_i} = 1`, split by the sign of `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPresentation {
    /// `(i, a_i)` with `a_i > 0`, highest shift first.
    pub numerator: Vec<(usize, BigUint)>,
    /// `(i, −a_i)` with `a_i < 0`, highest shift first.
    pub denominator: Vec<(usize, BigUint)>,
}

impl KernelPresentation {
    /// `∏_num σ^i(x)^{a_i} − ∏_den σ^i(x)^{−a_i}` as a polynomial in `x`.
    pub fn as_poly(&self, base: &str) -> Result<Poly> {
        let side = |fs: &[(usize, BigUint)]| -> Result<Poly> {
            let pairs = fs
                .iter()
                .map(|(i, e)| {
                    let e = u32::try_from(e).map_err(|_| Error::Invalid("exponent too large".into()))?;
                    Ok((Variable::sigma_d(base, *i as u32, 0), e))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Poly::term(CoeffElem::one(), Monomial::from_pairs(pairs)))
        };
        Ok(&side(&self.numerator)? - &side(&self.denominator)?)
    }
}

impl fmt::Display for KernelPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(fs: &[(usize, BigUint)]) -> String {
            if fs.is_empty() {
                return "1".into();
            }
            fs.iter()
                .map(|(i, e)| {
                    let x = match i {
                        0 => "X".to_string(),
                        1 => "s(X)".to_string(),
                        _ => format!("s^{i}(X)"),
                    };
                    if e.is_one() {
                        x
                    } else {
                        format!("{x}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        }
        write!(f, "{} = {}", side(&self.numerator), side(&self.denominator))
    }
}

/// The subgroup `Ker P(σ)` of the multiplicative group.
pub fn sigma_poly_kernel(p: &IntPoly) -> Result<KernelPresentation> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut numerator = Vec::new();
    let mut denominator = Vec::new();
    for (i, a) in p.coeffs().iter().enumerate().rev() {
        if a.is_positive() {
            numerator.push((i, a.magnitude().clone()));
        } else if a.is_negative() {
            denominator.push((i, a.magnitude().clone()));
        }
    }
    Ok(KernelPresentation { numerator, denominator })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneBasedVerdict {
    pub one_based: bool,
    /// Orders `d` with `Φ_d | P`.
    pub witnesses: Vec<u64>,
    /// Quotients `P / Φ_d`, one per witness.
    pub quotients: Vec<IntPoly>,
    /// Every `d` with `φ(d) ≤ deg P` is at most this.
    pub bound: u64,
}

/// `Ker P(σ)` is one-based iff `P` shares no root with any `T^m − 1`.
/// A primitive `d`-th root of unity has degree `φ(d)` over ℚ, and
/// `φ(d) ≥ √(d/2)`, so only `d ≤ 2n²` can occur for `n = deg P`.
pub fn onebased_verdict(p: &IntPoly) -> Result<OneBasedVerdict> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)? as u64;
    let bound = 2 * n * n;
    let mut witnesses = Vec::new();
    let mut quotients = Vec::new();
    for d in 1..=bound {
        if totient(d) > n {
            continue;
        }
        let (q, r) = p.div_rem_monic(&cyclotomic(d as usize));
        if r.is_zero() {
            witnesses.push(d);
            quotients.push(q);
        }
    }
    Ok(OneBasedVerdict {
        one_based: witnesses.is_empty(),
        witnesses,
        quotients,
        bound,
    })
}

/// A base of a multiplicative expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Var(Variable),
    Coeff(CoeffElem),
}

/// `∏ f_i^{e_i}`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct MultExpr {
    pub factors: Vec<(Factor, i64)>,
}

impl MultExpr {
    pub fn var(v: Variable, e: i64) -> Self {
        MultExpr {
            factors: vec![(Factor::Var(v), e)],
        }
    }

    pub fn coeff(c: CoeffElem, e: i64) -> Self {
        MultExpr {
            factors: vec![(Factor::Coeff(c), e)],
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        MultExpr {
            factors: self.factors.iter().chain(&o.factors).cloned().collect(),
        }
    }
}

/// `Σ_v n_v·Dv/v + c`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct LogDerivative {
    pub variable_terms: BTreeMap<Variable, BigInt>,
    pub constant: CoeffElem,
}

impl LogDerivative {
    pub fn is_zero(&self) -> bool {
        self.variable_terms.is_empty() && self.constant.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut variable_terms = self.variable_terms.clone();
        for (v, n) in &o.variable_terms {
            let e = variable_terms.entry(v.clone()).or_default();
            *e += n;
            if e.is_zero() {
                variable_terms.remove(v);
            }
        }
        LogDerivative {
            variable_terms,
            constant: &self.constant + &o.constant,
        }
    }

    /// Over the common denominator `∏ v`.
    pub fn as_fraction(&self) -> Result<(Poly, Poly)> {
        let den: Poly = self
            .variable_terms
            .keys()
            .fold(Poly::one(), |acc, v| &acc * &Poly::var(v.clone()));
        let mut num = den.scale(&self.constant);
        for (v, n) in &self.variable_terms {
            let others = self
                .variable_terms
                .keys()
                .filter(|w| *w != v)
                .fold(Poly::one(), |acc, w| &acc * &Poly::var(w.clone()));
            let dv = Poly::var(d_variable(v)?);
            num = &num + &(&dv * &others).scale(&CoeffElem::from_int(n.clone()));
        }
        Ok((num, den))
    }
}

impl fmt::Display for LogDerivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (v, n) in &self.variable_terms {
            let dv = d_variable(v).map(|d| d.to_string()).unwrap_or_else(|_| format!("D({v})"));
            let a = n.abs();
            let body = if a.is_one() {
                format!("{dv}/{v}")
            } else {
                format!("{a}*{dv}/{v}")
            };
            parts.push((n.is_negative(), body));
        }
        if !self.constant.is_zero() {
            let neg = self.constant.is_negative();
            let c = if neg { -&self.constant } else { self.constant.clone() };
            parts.push((neg, c.to_string()));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        for (i, (neg, body)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(body)?;
        }
        Ok(())
    }
}

/// `x ↦ Dx/x`, a homomorphism from the multiplicative to the additive group.
pub fn log_derivative(e: &MultExpr, ctx: &Context) -> Result<LogDerivative> {
    let mut out = LogDerivative::default();
    for (f, k) in &e.factors {
        let term = match f {
            Factor::Var(v) => {
                d_variable(v)?;
                LogDerivative {
                    variable_terms: BTreeMap::from([(v.clone(), BigInt::from(*k))]),
                    constant: CoeffElem::zero(),
                }
            }
            Factor::Coeff(c) => {
                let inv = c.inv().ok_or(Error::ZeroFactor)?;
                LogDerivative {
                    variable_terms: BTreeMap::new(),
                    constant: &(&ctx.d_coeff(c) * &inv) * &CoeffElem::from_int(*k),
                }
            }
        };
        out = out.add(&term);
    }
    out.variable_terms.retain(|_, n| !n.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(ip("T^2+T+1"), IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(ip("T - 2").to_string(), "T - 2");
        assert_eq!(ip("-3*T^3 + 5").to_string(), "-3*T^3 + 5");
        assert!("T^".parse::<IntPoly>().is_err());
        assert!("T +".parse::<IntPoly>().is_err());
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), ip("T - 1"));
        assert_eq!(cyclotomic(6), ip("T^2 - T + 1"));
        assert_eq!(cyclotomic(12), ip("T^4 - T^2 + 1"));
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn kernels() {
        assert_eq!(sigma_poly_kernel(&ip("T - 1")).unwrap().to_string(), "s(X) = X");
        assert_eq!(sigma_poly_kernel(&ip("T - 2")).unwrap().to_string(), "s(X) = X^2");
        assert_eq!(sigma_poly_kernel(&ip("T^2+T+1")).unwrap().to_string(), "s^2(X)*s(X)*X = 1");
        let p = sigma_poly_kernel(&ip("T - 2")).unwrap().as_poly("x").unwrap();
        assert_eq!(p.to_string(), "-x^2 + x[1,0]");
    }

    #[test]
    fn onebased_examples() {
        let v = onebased_verdict(&ip("T - 2")).unwrap();
        assert!(v.one_based && v.witnesses.is_empty());
        let v = onebased_verdict(&ip("T - 1")).unwrap();
        assert_eq!((v.one_based, v.witnesses.clone()), (false, vec![1]));
        let v = onebased_verdict(&ip("T^2+T+1")).unwrap();
        assert_eq!((v.one_based, v.witnesses.clone()), (false, vec![3]));
        assert!(onebased_verdict(&IntPoly::zero()).is_err());
    }

    #[test]
    fn log_derivative_examples() {
        let ctx = Context::new();
        let x = Variable::base("x");
        let y = Variable::base("y");
        let l = log_derivative(&MultExpr::var(x.clone(), 1), &ctx).unwrap();
        assert_eq!(l.to_string(), "x[0,1]/x");
        let e = MultExpr::var(x.clone(), 2).mul(&MultExpr::var(y.clone(), 1));
        assert_eq!(log_derivative(&e, &ctx).unwrap().to_string(), "2*x[0,1]/x + y[0,1]/y");

        let mut ctx = Context::new();
        let c = ctx.declare("c").unwrap();
        let l = log_derivative(&MultExpr::coeff(CoeffElem::param(c), 1), &ctx).unwrap();
        assert!(l.is_zero());
        ctx.set_d_image(c, CoeffElem::param(c).pow(2)).unwrap();
        let l = log_derivative(&MultExpr::coeff(CoeffElem::param(c), 3), &ctx).unwrap();
        assert_eq!(l.constant, &CoeffElem::param(c) * &CoeffElem::from_int(3));
        assert!(matches!(
            log_derivative(&MultExpr::coeff(CoeffElem::zero(), 1), &ctx),
            Err(Error::ZeroFactor)
        ));
    }
}

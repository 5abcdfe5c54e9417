use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;

use super::{CoeffElem, Variable};
use crate::{Error, Result};

/// A power product, sorted by variable with no zero exponents. The empty
/// monomial is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut m: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *m.entry(v).or_default() += e;
        }
        Monomial(m.into_iter().filter(|p| p.1 > 0).collect())
    }

    pub fn pairs(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.0
            .binary_search_by(|p| p.0.cmp(v))
            .map_or(0, |i| self.0[i].1)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (a, b) = (&self.0, &o.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Lexicographic comparison, most significant (smallest) variable first.
    pub fn lex_cmp(&self, o: &Monomial) -> Ordering {
        for (p, q) in self.0.iter().zip(o.0.iter()) {
            match p.0.cmp(&q.0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
            match p.1.cmp(&q.1) {
                Ordering::Equal => {}
                c => return c,
            }
        }
        self.0.len().cmp(&o.0.len())
    }

    /// Graded lex: total degree first, then [`Monomial::lex_cmp`].
    pub fn deglex_cmp(&self, o: &Monomial) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.lex_cmp(o))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A sparse polynomial over [`CoeffElem`]. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, CoeffElem>,
}

/// An assignment of exact values to variables.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Point(pub BTreeMap<Variable, CoeffElem>);

impl Point {
    pub fn new(pairs: impl IntoIterator<Item = (Variable, CoeffElem)>) -> Self {
        Point(pairs.into_iter().collect())
    }

    pub fn get(&self, v: &Variable) -> Option<&CoeffElem> {
        self.0.get(v)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (v, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v} = {c}")?;
        }
        f.write_str(")")
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(CoeffElem::one())
    }

    pub fn constant(c: CoeffElem) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(CoeffElem::from_int(n))
    }

    pub fn var(v: Variable) -> Self {
        Poly::term(CoeffElem::one(), Monomial::var(v))
    }

    pub fn term(c: CoeffElem, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Monomial, CoeffElem)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in ts {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CoeffElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> CoeffElem {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value of a polynomial with no variables.
    pub fn as_constant(&self) -> Option<CoeffElem> {
        match self.terms.len() {
            0 => Some(CoeffElem::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: CoeffElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &CoeffElem) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|p| p.0.clone()))
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &Variable) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoeffElem) -> CoeffElem) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Renames variables. `f` need not be injective; colliding terms are merged.
    pub fn map_vars(&self, f: impl Fn(&Variable) -> Variable) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_pairs(m.pairs().iter().map(|(v, e)| (f(v), *e))),
                c.clone(),
            )
        }))
    }

    /// Leading term under graded lex.
    pub fn leading_term(&self) -> Option<(&Monomial, &CoeffElem)> {
        self.terms.iter().max_by(|a, b| a.0.deglex_cmp(b.0))
    }

    pub fn derivative(&self, v: &Variable) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let nm = Monomial::from_pairs(
                m.pairs()
                    .iter()
                    .map(|(w, k)| if w == v { (w.clone(), k - 1) } else { (w.clone(), *k) }),
            );
            out.add_term(nm, c * &CoeffElem::from_int(e));
        }
        out
    }

    /// Simultaneous substitution; unbound variables are left in place.
    pub fn substitute(&self, bindings: &BTreeMap<Variable, Poly>) -> Poly {
        let mut cache: BTreeMap<(Variable, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for (v, e) in m.pairs() {
                match bindings.get(v) {
                    Some(b) => {
                        let pw = cache
                            .entry((v.clone(), *e))
                            .or_insert_with(|| b.pow(*e))
                            .clone();
                        t = &t * &pw;
                    }
                    None => kept.push((v.clone(), *e)),
                }
                if t.is_zero() {
                    break;
                }
            }
            if !t.is_zero() {
                out = &out + &t.mul_monomial(&Monomial::from_pairs(kept));
            }
        }
        out
    }

    /// Substitution that requires a binding for every occurring variable.
    pub fn substitute_total(&self, bindings: &BTreeMap<Variable, Poly>) -> Result<Poly> {
        if let Some(v) = self.variables().into_iter().find(|v| !bindings.contains_key(v)) {
            return Err(Error::MissingBinding(v));
        }
        Ok(self.substitute(bindings))
    }

    pub fn evaluate(&self, a: &Point) -> Result<CoeffElem> {
        let mut acc = CoeffElem::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.pairs() {
                let x = a.get(v).ok_or_else(|| Error::MissingBinding(v.clone()))?;
                t = &t * &x.pow(*e);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// `(1 / s!) ∂^s p`, with `s` given as exponents over `vars`.
    pub fn scaled_partial(&self, vars: &[Variable], s: &[u32]) -> Poly {
        assert_eq!(vars.len(), s.len(), "multi-index length must match the frame");
        let mut out = Poly::zero();
        'terms: for (m, c) in &self.terms {
            let mut coef = BigInt::from(1);
            let mut pairs: Vec<(Variable, u32)> = m.pairs().to_vec();
            for (v, &k) in vars.iter().zip(s) {
                if k == 0 {
                    continue;
                }
                let e = m.exponent(v);
                if e < k {
                    continue 'terms;
                }
                coef *= binomial(BigInt::from(e), BigInt::from(k));
                for p in pairs.iter_mut() {
                    if &p.0 == v {
                        p.1 -= k;
                    }
                }
            }
            out.add_term(Monomial::from_pairs(pairs), c * &CoeffElem::from_int(coef));
        }
        out
    }

    /// Terms sorted for display, largest first under graded lex.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &CoeffElem)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.deglex_cmp(a.0));
        ts
    }

    /// Renders the terms in the given order (largest first).
    pub fn fmt_terms<'a>(
        terms: impl IntoIterator<Item = (&'a Monomial, &'a CoeffElem)>,
        f: &mut dyn fmt::Write,
    ) -> fmt::Result {
        let mut first = true;
        for (m, c) in terms {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Poly::fmt_terms(self.sorted_terms(), f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        r
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly { (&self).$f(&o) }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $f(self, o: &Poly) -> Poly { (&self).$f(o) }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $f(self, o: Poly) -> Poly { self.$f(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<Variable> for Poly {
    fn from(v: Variable) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Poly {
        Poly::var(Variable::base("x"))
    }
    fn y() -> Poly {
        Poly::var(Variable::base("y"))
    }
    fn t() -> Poly {
        Poly::var(Variable::base("t"))
    }

    #[test]
    fn arithmetic_examples() {
        assert!((&x() + &(-x())).is_zero());
        assert_eq!(&(&x() + &y()) * &(&x() - &y()), &x().pow(2) - &y().pow(2));
        let half_x = x().scale(&CoeffElem::ratio(1, 2));
        let two_y = y().scale(&CoeffElem::from_int(2));
        assert_eq!(&half_x * &two_y, &x() * &y());
    }

    #[test]
    fn substitution_examples() {
        let p = &y() - &x().pow(2);
        let mut b = BTreeMap::new();
        b.insert(Variable::base("x"), &t() + &Poly::one());
        b.insert(Variable::base("y"), t().pow(2));
        let expect = &t().scale(&CoeffElem::from_int(-2)) - &Poly::one();
        assert_eq!(p.substitute(&b), expect);
        assert_eq!(p.substitute(&BTreeMap::new()), p);
        let mut z = BTreeMap::new();
        z.insert(Variable::base("x"), Poly::zero());
        assert!((&x() * &y()).substitute(&z).is_zero());
        assert!(matches!(
            (&x() * &y()).substitute_total(&z),
            Err(Error::MissingBinding(_))
        ));
    }

    #[test]
    fn scaled_partial_examples() {
        let vars = [Variable::base("x"), Variable::base("y")];
        let p = &y() - &x().pow(2);
        assert_eq!(p.scaled_partial(&vars, &[2, 0]), Poly::int(-1));
        assert_eq!(p.scaled_partial(&vars, &[0, 1]), Poly::int(1));
        assert_eq!((&x() * &y()).scaled_partial(&vars, &[1, 1]), Poly::int(1));
    }

    #[test]
    fn evaluation_examples() {
        let p = &y() - &x().pow(2);
        let at = |a: i64, b: i64| {
            Point::new([
                (Variable::base("x"), CoeffElem::from_int(a)),
                (Variable::base("y"), CoeffElem::from_int(b)),
            ])
        };
        assert!(p.evaluate(&at(1, 1)).unwrap().is_zero());
        assert_eq!(p.evaluate(&at(1, 2)).unwrap(), CoeffElem::from_int(1));
        let c = CoeffElem::param(crate::kernel::Sym::new("c"));
        let cx = x().scale(&c);
        let one = Point::new([(Variable::base("x"), CoeffElem::one())]);
        assert_eq!(cx.evaluate(&one).unwrap(), c);
    }

    #[test]
    fn display_is_graded() {
        let p = &y() - &x().pow(2);
        assert_eq!(p.to_string(), "-x^2 + y");
        let q = &x().scale(&CoeffElem::ratio(1, 2)) - &Poly::int(3);
        assert_eq!(q.to_string(), "1/2*x - 3");
    }
}

//! Integer-coefficient polynomials in parameter symbols.
//!
//! These are the numerators and denominators of [`CoeffElem`](super::CoeffElem).
//! The only nontrivial algorithm here is the multivariate gcd, computed
//! recursively with primitive pseudo-remainder sequences.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Sym;

/// A power product of parameters, sorted ascending by symbol, no zero exponents.
pub type PMono = Vec<(Sym, u32)>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    terms: BTreeMap<PMono, BigInt>,
}

fn mono_mul(a: &PMono, b: &PMono) -> PMono {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a / b` when `b` divides `a`.
fn mono_div(a: &PMono, b: &PMono) -> Option<PMono> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &(v, e) in a {
        if j < b.len() && b[j].0 == v {
            match e.cmp(&b[j].1) {
                Ordering::Less => return None,
                Ordering::Equal => {}
                Ordering::Greater => out.push((v, e - b[j].1)),
            }
            j += 1;
        } else {
            if j < b.len() && b[j].0 < v {
                return None;
            }
            out.push((v, e));
        }
    }
    if j < b.len() {
        return None;
    }
    Some(out)
}

/// Lexicographic comparison with the larger symbol more significant.
pub(crate) fn lex_cmp(a: &PMono, b: &PMono) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i, j) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {}
        }
        let (va, ea) = a[i - 1];
        let (vb, eb) = b[j - 1];
        if va != vb {
            return va.cmp(&vb);
        }
        if ea != eb {
            return ea.cmp(&eb);
        }
        i -= 1;
        j -= 1;
    }
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        ZPoly { terms }
    }

    pub fn var(s: Sym) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(s, 1)], BigInt::one());
        ZPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PMono, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: PMono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), -c);
        }
        r
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        let mut r = ZPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                r.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn vars(&self) -> Vec<Sym> {
        let mut v: Vec<Sym> = self.terms.keys().flat_map(|m| m.iter().map(|p| p.0)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn max_var(&self) -> Option<Sym> {
        self.terms.keys().filter_map(|m| m.last().map(|p| p.0)).max()
    }

    pub fn degree_in(&self, v: Sym) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().find(|p| p.0 == v).map_or(0, |p| p.1))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients with respect to `v`, keyed by degree.
    pub fn coeffs_in(&self, v: Sym) -> BTreeMap<u32, ZPoly> {
        let mut out: BTreeMap<u32, ZPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.iter().find(|p| p.0 == v).map_or(0, |p| p.1);
            let rest: PMono = m.iter().copied().filter(|p| p.0 != v).collect();
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    fn from_coeffs_in(v: Sym, coeffs: &BTreeMap<u32, ZPoly>) -> ZPoly {
        let mut r = ZPoly::zero();
        for (&e, c) in coeffs {
            let vp = if e == 0 { ZPoly::one() } else { ZPoly::var(v).pow(e) };
            r = r.add(&c.mul(&vp));
        }
        r
    }

    pub fn derivative(&self, v: Sym) -> ZPoly {
        let mut r = ZPoly::zero();
        for (m, c) in &self.terms {
            if let Some(pos) = m.iter().position(|p| p.0 == v) {
                let e = m[pos].1;
                let mut nm = m.clone();
                if e == 1 {
                    nm.remove(pos);
                } else {
                    nm[pos].1 = e - 1;
                }
                r.add_term(nm, c * BigInt::from(e));
            }
        }
        r
    }

    /// Leading term under lex with the larger symbol most significant.
    pub fn lead(&self) -> Option<(&PMono, &BigInt)> {
        self.terms.iter().max_by(|a, b| lex_cmp(a.0, b.0))
    }

    pub fn lead_sign_negative(&self) -> bool {
        self.lead().map_or(false, |(_, c)| c.is_negative())
    }

    pub fn integer_content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            let mut out = ZPoly::zero();
            for (m, k) in &self.terms {
                let (q, r) = k.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                out.add_term(m.clone(), q);
            }
            return Some(out);
        }
        let (dm, dc) = d.lead().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut q = ZPoly::zero();
        let mut r = self.clone();
        while let Some((rm, rc)) = r.lead().map(|(m, c)| (m.clone(), c.clone())) {
            let tm = mono_div(&rm, &dm)?;
            let (tc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let mut t = ZPoly::zero();
            t.add_term(tm, tc);
            r = r.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// Sign-normalized so the lex-leading coefficient is positive.
    pub fn normalize_sign(self) -> ZPoly {
        if self.lead_sign_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Greatest common divisor in `Z[params]`, with positive leading coefficient.
    pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.clone().normalize_sign();
        }
        if b.is_zero() {
            return a.clone().normalize_sign();
        }
        if let (Some(x), Some(y)) = (a.as_constant(), b.as_constant()) {
            return ZPoly::constant(x.gcd(&y));
        }
        let v = match (a.max_var(), b.max_var()) {
            (Some(x), Some(y)) => x.max(y),
            (Some(x), None) | (None, Some(x)) => x,
            (None, None) => unreachable!(),
        };
        let da = a.degree_in(v);
        let db = b.degree_in(v);
        if da == 0 {
            return ZPoly::gcd(a, &content_in(b, v));
        }
        if db == 0 {
            return ZPoly::gcd(&content_in(a, v), b);
        }
        let ca = content_in(a, v);
        let cb = content_in(b, v);
        let g = ZPoly::gcd(&ca, &cb);
        let pa = a.div_exact(&ca).expect("content divides");
        let pb = b.div_exact(&cb).expect("content divides");
        let (mut f, mut h) = if da >= db { (pa, pb) } else { (pb, pa) };
        loop {
            let r = pseudo_rem(&f, &h, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                h = ZPoly::one();
                break;
            }
            f = h;
            h = primitive_in(&r, v);
        }
        let h = primitive_in(&h, v);
        g.mul(&h).normalize_sign()
    }
}

/// Content with respect to `v`: gcd of the coefficients in `v`.
fn content_in(p: &ZPoly, v: Sym) -> ZPoly {
    let mut g = ZPoly::zero();
    for c in p.coeffs_in(v).values() {
        g = ZPoly::gcd(&g, c);
        if g.as_constant().map_or(false, |k| k.is_one()) {
            break;
        }
    }
    g
}

fn primitive_in(p: &ZPoly, v: Sym) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").normalize_sign()
}

/// Pseudo-remainder of `f` by `g` in the variable `v`.
fn pseudo_rem(f: &ZPoly, g: &ZPoly, v: Sym) -> ZPoly {
    let gc = g.coeffs_in(v);
    let dg = *gc.keys().next_back().unwrap();
    let lg = gc[&dg].clone();
    let mut r = f.coeffs_in(v);
    r.retain(|_, c| !c.is_zero());
    loop {
        let dr = match r.keys().next_back() {
            Some(&d) if d >= dg => d,
            _ => break,
        };
        let lr = r[&dr].clone();
        let shift = dr - dg;
        let mut next: BTreeMap<u32, ZPoly> = BTreeMap::new();
        for (&e, c) in &r {
            next.insert(e, c.mul(&lg));
        }
        for (&e, c) in &gc {
            let slot = next.entry(e + shift).or_default();
            *slot = slot.sub(&c.mul(&lr));
        }
        next.retain(|_, c| !c.is_zero());
        r = next;
    }
    ZPoly::from_coeffs_in(v, &r)
}

fn fmt_mono(m: &PMono, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, (s, e)) in m.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        if *e == 1 {
            write!(f, "{s}")?;
        } else {
            write!(f, "{s}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| {
            let da: u32 = a.0.iter().map(|p| p.1).sum();
            let db: u32 = b.0.iter().map(|p| p.1).sum();
            db.cmp(&da).then_with(|| lex_cmp(b.0, a.0))
        });
        for (i, (m, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_mono(m, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({self})")
    }
}

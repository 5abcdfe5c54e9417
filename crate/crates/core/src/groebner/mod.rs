//! Ideals, reduced Gröbner bases, membership, elimination and dimension.
//!
//! Coefficients stay in [`CoeffElem`], so every basis is exact. A basis is
//! cached on its [`IdealPresentation`] the first time it is computed.

mod engine;
mod order;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

pub use order::MonomialOrder;

use crate::kernel::{Monomial, Poly, Variable};
use crate::{Error, Result};
use engine::{IPoly, Meter, Ring};

/// Upper bound on reduction steps for one Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub steps: u64,
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 2_000_000;

    pub fn new(steps: u64) -> Self {
        Budget { steps }
    }

    pub fn unlimited() -> Self {
        Budget { steps: u64::MAX }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT_STEPS)
    }
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by descending
/// leading monomial.
#[derive(Clone, Debug)]
pub struct Basis {
    ring: Ring,
    internal: Vec<IPoly>,
    polys: Vec<Poly>,
}

impl PartialEq for Basis {
    fn eq(&self, o: &Self) -> bool {
        self.ring.order == o.ring.order && self.polys == o.polys
    }
}

impl Basis {
    fn from_internal(ring: Ring, internal: Vec<IPoly>) -> Self {
        let polys = internal.iter().map(|p| ring.to_poly(p)).collect();
        Basis {
            ring,
            internal,
            polys,
        }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    /// Variables in significance order used by this basis.
    pub fn variables(&self) -> &[Variable] {
        &self.ring.vars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.internal.len() == 1 && self.internal[0].lead().iter().all(|&e| e == 0)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|p| self.ring.monomial(p.lead())).collect()
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        let f = self.ring.to_internal(p)?;
        let basis: Vec<&IPoly> = self.internal.iter().collect();
        let r = self.ring.reduce(f, &basis, &mut Meter::new(u64::MAX))?;
        Ok(self.ring.to_poly(&r))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Checks that every S-polynomial of basis pairs reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let basis: Vec<&IPoly> = self.internal.iter().collect();
        let mut meter = Meter::new(u64::MAX);
        for i in 0..self.internal.len() {
            for j in i + 1..self.internal.len() {
                let p = self.ring.to_poly(&self.internal[i]);
                let q = self.ring.to_poly(&self.internal[j]);
                let s = s_polynomial(&self.ring, &p, &q);
                let f = self.ring.to_internal(&s).expect("same ring");
                match self.ring.reduce(f, &basis, &mut meter) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Each polynomial printed with terms in this basis's monomial order.
    pub fn to_strings(&self) -> Vec<String> {
        self.internal
            .iter()
            .map(|p| {
                let terms: Vec<(Monomial, crate::CoeffElem)> = p
                    .terms
                    .iter()
                    .map(|(e, c)| (self.ring.monomial(e), c.clone()))
                    .collect();
                let mut s = String::new();
                Poly::fmt_terms(terms.iter().map(|(m, c)| (m, c)), &mut s).expect("write to string");
                s
            })
            .collect()
    }
}

/// S-polynomial computed on public polynomials, independently of the engine's
/// internal pair machinery.
fn s_polynomial(ring: &Ring, p: &Poly, q: &Poly) -> Poly {
    let ip = ring.to_internal(p).expect("same ring");
    let iq = ring.to_internal(q).expect("same ring");
    let (lp, cp) = (&ip.terms[0].0, &ip.terms[0].1);
    let (lq, cq) = (&iq.terms[0].0, &iq.terms[0].1);
    let l: Vec<u32> = lp.iter().zip(lq).map(|(a, b)| *a.max(b)).collect();
    let mp: Vec<u32> = l.iter().zip(lp).map(|(a, b)| a - b).collect();
    let mq: Vec<u32> = l.iter().zip(lq).map(|(a, b)| a - b).collect();
    let a = p.mul_monomial(&ring.monomial(&mp)).scale(&cp.inv().unwrap());
    let b = q.mul_monomial(&ring.monomial(&mq)).scale(&cq.inv().unwrap());
    &a - &b
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(", "))
    }
}

/// Generators in a declared ambient space, with a monomial order and a
/// lazily computed reduced basis.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ambient: Vec<Variable>,
    generators: Vec<Poly>,
    order: MonomialOrder,
    /// Caller's irreducibility assertion. Recorded for reports only.
    pub assume_prime: bool,
    cache: OnceLock<Basis>,
}

impl PartialEq for IdealPresentation {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.generators == o.generators && self.order == o.order
    }
}

impl IdealPresentation {
    /// Ambient variables are deduplicated and sorted by significance.
    pub fn new(
        ambient: impl IntoIterator<Item = Variable>,
        generators: Vec<Poly>,
        order: MonomialOrder,
    ) -> Result<Self> {
        let ambient: BTreeSet<Variable> = ambient.into_iter().collect();
        for g in &generators {
            if let Some(v) = g.variables().into_iter().find(|v| !ambient.contains(v)) {
                return Err(Error::NotInAmbient(v));
            }
        }
        Ok(IdealPresentation {
            ambient: ambient.into_iter().collect(),
            generators,
            order,
            assume_prime: true,
            cache: OnceLock::new(),
        })
    }

    /// Ambient space spanned by the variables the generators mention.
    pub fn from_generators(generators: Vec<Poly>) -> Self {
        let ambient: BTreeSet<Variable> = generators.iter().flat_map(Poly::variables).collect();
        IdealPresentation::new(ambient, generators, MonomialOrder::Grevlex).expect("ambient covers generators")
    }

    pub fn ambient(&self) -> &[Variable] {
        &self.ambient
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        IdealPresentation {
            ambient: self.ambient.clone(),
            generators: self.generators.clone(),
            order,
            assume_prime: self.assume_prime,
            cache: OnceLock::new(),
        }
    }

    /// Same generators in a larger ambient space.
    pub fn extend_ambient(&self, extra: impl IntoIterator<Item = Variable>) -> Self {
        let mut amb: BTreeSet<Variable> = self.ambient.iter().cloned().collect();
        amb.extend(extra);
        let mut out = IdealPresentation::new(amb, self.generators.clone(), self.order).expect("superset");
        out.assume_prime = self.assume_prime;
        out
    }

    fn ring(&self) -> Ring {
        Ring::new(self.ambient.clone(), self.order)
    }

    /// The cached reduced basis, computing it on first use.
    pub fn basis(&self, budget: Budget) -> Result<&Basis> {
        if let Some(b) = self.cache.get() {
            return Ok(b);
        }
        let ring = self.ring();
        let internal = engine::groebner(&ring, &self.generators, &mut Meter::new(budget.steps))?;
        let _ = self.cache.set(Basis::from_internal(ring, internal));
        Ok(self.cache.get().expect("just set"))
    }

    pub fn cached_basis(&self) -> Option<&Basis> {
        self.cache.get()
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let amb: Vec<String> = self.ambient.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}} in ({})", gens.join(", "), amb.join(", "))
    }
}

pub fn groebner_basis(ideal: &IdealPresentation, budget: Budget) -> Result<Basis> {
    ideal.basis(budget).cloned()
}

pub fn ideal_member(ideal: &IdealPresentation, p: &Poly, budget: Budget) -> Result<bool> {
    ideal.basis(budget)?.contains(p)
}

/// Generators of `I ∩ K[ambient \ drop]`, computed with an elimination order.
///
/// The returned presentation carries its reduced basis already: the basis
/// elements free of `drop` form the reduced basis of the elimination ideal
/// for the restriction of the elimination order, which is `ideal.order()`.
pub fn eliminate(
    ideal: &IdealPresentation,
    drop: &BTreeSet<Variable>,
    budget: Budget,
) -> Result<IdealPresentation> {
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    let dropped: Vec<Variable> = ideal.ambient.iter().filter(|v| drop.contains(v)).cloned().collect();
    let kept: Vec<Variable> = ideal.ambient.iter().filter(|v| !drop.contains(v)).cloned().collect();
    let elim_order = match ideal.order {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::Block(dropped.len()),
    };
    let mut vars = dropped.clone();
    vars.extend(kept.iter().cloned());
    let ring = Ring::new(vars, elim_order);
    let internal = engine::groebner(&ring, &ideal.generators, &mut Meter::new(budget.steps))?;
    let kept_polys: Vec<Poly> = internal
        .iter()
        .filter(|p| p.terms.iter().all(|(e, _)| e[..dropped.len()].iter().all(|&k| k == 0)))
        .map(|p| ring.to_poly(p))
        .collect();
    let keep_order = match ideal.order {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::Grevlex,
    };
    let mut out = IdealPresentation::new(kept.clone(), kept_polys, keep_order)?;
    out.assume_prime = ideal.assume_prime;
    let kring = Ring::new(kept, keep_order);
    let kint = out
        .generators
        .iter()
        .map(|p| kring.to_internal(p))
        .collect::<Result<Vec<_>>>()?;
    let _ = out.cache.set(Basis::from_internal(kring, kint));
    Ok(out)
}

/// Mutual membership of generators.
pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation, budget: Budget) -> Result<bool> {
    let ba = a.basis(budget)?;
    let bb = b.basis(budget)?;
    for g in b.generators() {
        if !ba.contains(g)? {
            return Ok(false);
        }
    }
    for g in a.generators() {
        if !bb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Krull dimension: the largest set of ambient variables containing the
/// support of no leading monomial of the reduced basis.
pub fn krull_dim(ideal: &IdealPresentation, budget: Budget) -> Result<usize> {
    let basis = ideal.basis(budget)?;
    if basis.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = basis.ring.vars.len();
    let mut by_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for p in &basis.internal {
        let support: Vec<usize> = p.lead().iter().enumerate().filter(|e| *e.1 > 0).map(|e| e.0).collect();
        if let Some(&last) = support.last() {
            by_max[last].push(support);
        }
    }
    fn search(i: usize, n: usize, size: usize, chosen: &mut Vec<bool>, by_max: &[Vec<Vec<usize>>], best: &mut usize) {
        if size + (n - i) <= *best {
            return;
        }
        if i == n {
            *best = size;
            return;
        }
        chosen[i] = true;
        let blocked = by_max[i].iter().any(|s| s.iter().all(|&k| chosen[k]));
        if !blocked {
            search(i + 1, n, size + 1, chosen, by_max, best);
        }
        chosen[i] = false;
        search(i + 1, n, size, chosen, by_max, best);
    }
    let mut best = 0;
    search(0, n, 0, &mut vec![false; n], &by_max, &mut best);
    Ok(best)
}

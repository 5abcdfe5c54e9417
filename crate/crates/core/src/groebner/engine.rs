//! Buchberger's algorithm on dense exponent vectors.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::MonomialOrder;
use crate::kernel::{CoeffElem, Monomial, Poly, Variable};
use crate::{Error, Result};

pub(crate) type Exp = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    /// Descending in the ring's order.
    pub terms: Vec<(Exp, CoeffElem)>,
    pub sugar: u32,
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Exp {
        &self.terms[0].0
    }

    fn monic(mut self) -> IPoly {
        if let Some(inv) = self.terms.first().map(|t| t.1.inv().expect("nonzero lead")) {
            if !inv.is_one() {
                for t in &mut self.terms {
                    t.1 = &t.1 * &inv;
                }
            }
        }
        self
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn deg(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// Step counter enforcing a reduction budget.
pub(crate) struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    pub fn new(limit: u64) -> Self {
        Meter { limit, used: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// A polynomial ring with a fixed variable list and monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Ring {
    pub vars: Vec<Variable>,
    pub order: MonomialOrder,
    index: BTreeMap<Variable, usize>,
}

impl Ring {
    pub fn new(vars: Vec<Variable>, order: MonomialOrder) -> Self {
        let index = vars.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ring { vars, order, index }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn to_internal(&self, p: &Poly) -> Result<IPoly> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let mut e = vec![0u32; self.vars.len()];
            for (v, k) in m.pairs() {
                let i = *self
                    .index
                    .get(v)
                    .ok_or_else(|| Error::NotInAmbient(v.clone()))?;
                e[i] = *k;
            }
            terms.push((e, c.clone()));
        }
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let sugar = terms.iter().map(|t| deg(&t.0)).max().unwrap_or(0);
        Ok(IPoly { terms, sugar })
    }

    pub fn monomial(&self, e: &[u32]) -> Monomial {
        Monomial::from_pairs(
            e.iter()
                .enumerate()
                .filter(|p| *p.1 > 0)
                .map(|(i, &k)| (self.vars[i].clone(), k)),
        )
    }

    pub fn to_poly(&self, p: &IPoly) -> Poly {
        Poly::from_terms(p.terms.iter().map(|(e, c)| (self.monomial(e), c.clone())))
    }

    /// `f - c * x^shift * g`.
    fn sub_mul(&self, f: &IPoly, c: &CoeffElem, shift: &[u32], g: &IPoly) -> IPoly {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut gi = g
            .terms
            .iter()
            .map(|(e, k)| (e.iter().zip(shift).map(|(a, b)| a + b).collect::<Exp>(), k))
            .peekable();
        let mut fi = f.terms.iter().peekable();
        loop {
            match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(fi.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (e, k) = gi.next().unwrap();
                    out.push((e, -&(c * k)));
                }
                (Some(a), Some(b)) => match self.cmp(&a.0, &b.0) {
                    Ordering::Greater => out.push(fi.next().unwrap().clone()),
                    Ordering::Less => {
                        let (e, k) = gi.next().unwrap();
                        out.push((e, -&(c * k)));
                    }
                    Ordering::Equal => {
                        let (e, k) = gi.next().unwrap();
                        let v = &fi.next().unwrap().1 - &(c * k);
                        if !v.is_zero() {
                            out.push((e, v));
                        }
                    }
                },
            }
        }
        let sugar = f.sugar.max(g.sugar + deg(shift));
        IPoly { terms: out, sugar }
    }

    /// Full reduction of `f` modulo monic `basis`.
    pub fn reduce(&self, f: IPoly, basis: &[&IPoly], meter: &mut Meter) -> Result<IPoly> {
        let mut rem: Vec<(Exp, CoeffElem)> = Vec::new();
        let mut f = f;
        let sugar = f.sugar;
        while let Some((e, c)) = f.terms.first().cloned() {
            match basis.iter().find(|g| divides(g.lead(), &e)) {
                Some(g) => {
                    meter.tick()?;
                    let shift: Exp = e.iter().zip(g.lead()).map(|(a, b)| a - b).collect();
                    f = self.sub_mul(&f, &c, &shift, g);
                }
                None => {
                    rem.push(f.terms.remove(0));
                }
            }
        }
        Ok(IPoly {
            terms: rem,
            sugar: sugar.max(f.sugar),
        })
    }

    fn spoly(&self, f: &IPoly, g: &IPoly) -> IPoly {
        let l = lcm(f.lead(), g.lead());
        let sf: Exp = l.iter().zip(f.lead()).map(|(a, b)| a - b).collect();
        let sg: Exp = l.iter().zip(g.lead()).map(|(a, b)| a - b).collect();
        let zero = IPoly {
            terms: Vec::new(),
            sugar: 0,
        };
        let a = self.sub_mul(&zero, &-&CoeffElem::one(), &sf, f);
        self.sub_mul(&a, &CoeffElem::one(), &sg, g)
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    sugar: u32,
}

/// Computes the reduced Gröbner basis, sorted by descending leading monomial.
pub(crate) fn groebner(ring: &Ring, input: &[Poly], meter: &mut Meter) -> Result<Vec<IPoly>> {
    let mut inputs: Vec<IPoly> = input
        .iter()
        .map(|p| ring.to_internal(p))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(IPoly::monic)
        .collect();
    inputs.sort_by(|a, b| ring.cmp(a.lead(), b.lead()));
    inputs.dedup();

    let mut polys: Vec<IPoly> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for p in inputs {
        let basis: Vec<&IPoly> = active_refs(&polys, &active);
        let h = ring.reduce(p, &basis, meter)?;
        if !h.is_zero() {
            update(&mut polys, &mut active, &mut pairs, h.monic());
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = ring.spoly(&polys[pair.i], &polys[pair.j]);
        let basis = active_refs(&polys, &active);
        let h = ring.reduce(s, &basis, meter)?;
        if !h.is_zero() {
            update(&mut polys, &mut active, &mut pairs, h.monic());
        }
    }

    // minimal basis, then interreduce
    let mut kept: Vec<IPoly> = polys
        .into_iter()
        .zip(active)
        .filter(|p| p.1)
        .map(|p| p.0)
        .collect();
    kept.sort_by(|a, b| ring.cmp(a.lead(), b.lead()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for p in kept {
        if !minimal.iter().any(|q| divides(q.lead(), p.lead())) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|p| p.1)
            .collect();
        let head = IPoly {
            terms: vec![minimal[i].terms[0].clone()],
            sugar: 0,
        };
        let tail = IPoly {
            terms: minimal[i].terms[1..].to_vec(),
            sugar: minimal[i].sugar,
        };
        let t = ring.reduce(tail, &others, meter)?;
        let mut terms = head.terms;
        terms.extend(t.terms);
        reduced.push(IPoly {
            terms,
            sugar: minimal[i].sugar,
        });
    }
    reduced.sort_by(|a, b| ring.cmp(b.lead(), a.lead()));
    Ok(reduced)
}

fn active_refs<'a>(polys: &'a [IPoly], active: &[bool]) -> Vec<&'a IPoly> {
    polys
        .iter()
        .zip(active)
        .filter(|p| *p.1)
        .map(|p| p.0)
        .collect()
}

/// Gebauer–Möller installation of a new basis element.
fn update(polys: &mut Vec<IPoly>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: IPoly) {
    let hi = polys.len();
    let hl = h.lead().clone();
    let pair_sugar = |g: &IPoly, l: &Exp| -> u32 {
        let a = h.sugar.saturating_sub(deg(h.lead())) + deg(l);
        let b = g.sugar.saturating_sub(deg(g.lead())) + deg(l);
        a.max(b)
    };

    let mut candidates: Vec<(usize, Exp)> = (0..polys.len())
        .filter(|&g| active[g])
        .map(|g| (g, lcm(&hl, polys[g].lead())))
        .collect();

    let mut kept: Vec<(usize, Exp)> = Vec::new();
    while let Some((g1, l1)) = candidates.pop() {
        let crit = coprime(&hl, polys[g1].lead())
            || (!candidates.iter().any(|(_, l2)| divides(l2, &l1))
                && !kept.iter().any(|(_, l2)| divides(l2, &l1)));
        if crit {
            kept.push((g1, l1));
        }
    }
    kept.retain(|(g, _)| !coprime(&hl, polys[*g].lead()));

    pairs.retain(|p| {
        !divides(&hl, &p.lcm)
            || lcm(polys[p.i].lead(), &hl) == p.lcm
            || lcm(&hl, polys[p.j].lead()) == p.lcm
    });
    for (g, l) in kept {
        let sugar = pair_sugar(&polys[g], &l);
        pairs.push(Pair {
            i: g,
            j: hi,
            lcm: l,
            sugar,
        });
    }

    for g in 0..polys.len() {
        if active[g] && divides(&hl, polys[g].lead()) {
            active[g] = false;
        }
    }
    polys.push(h);
    active.push(true);
}

//! The derivation D and the endomorphism σ acting on polynomials and
//! varieties, σ-rewriting, and the hidden-relation consequence scan.

use std::collections::{BTreeMap, BTreeSet};

use crate::groebner::{self, Budget, IdealPresentation};
use crate::kernel::{CoeffElem, Context, Monomial, Poly, Sym, Variable};
use crate::{Error, Result};

/// `D` on a variable: raises the D-order.
pub fn d_variable(v: &Variable) -> Result<Variable> {
    match v {
        Variable::SigmaD { base, sigma, d } => Ok(Variable::SigmaD {
            base: *base,
            sigma: *sigma,
            d: d + 1,
        }),
        other => Err(Error::UnsupportedVariable(other.clone())),
    }
}

/// `σ^k` on a variable: raises the σ-power.
pub fn sigma_variable(v: &Variable, k: u32) -> Result<Variable> {
    match v {
        Variable::SigmaD { base, sigma, d } => Ok(Variable::SigmaD {
            base: *base,
            sigma: sigma + k,
            d: *d,
        }),
        other => Err(Error::UnsupportedVariable(other.clone())),
    }
}

/// Leibniz extension of D, with coefficients mapped through their declared
/// derivatives.
pub fn apply_d(p: &Poly, ctx: &Context) -> Result<Poly> {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        out.add_term(m.clone(), ctx.d_coeff(c));
        for (i, (v, e)) in m.pairs().iter().enumerate() {
            let dv = d_variable(v)?;
            let rest = m
                .pairs()
                .iter()
                .enumerate()
                .map(|(j, (w, k))| if i == j { (w.clone(), k - 1) } else { (w.clone(), *k) });
            let nm = Monomial::from_pairs(rest.chain(std::iter::once((dv, 1))));
            out.add_term(nm, c * &CoeffElem::from_int(*e));
        }
    }
    Ok(out)
}

pub fn apply_d_n(p: &Poly, n: u32, ctx: &Context) -> Result<Poly> {
    let mut out = p.clone();
    for _ in 0..n {
        out = apply_d(&out, ctx)?;
    }
    Ok(out)
}

/// The ring endomorphism σ^k.
pub fn apply_sigma(p: &Poly, k: u32, ctx: &Context) -> Result<Poly> {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let pairs = m
            .pairs()
            .iter()
            .map(|(v, e)| Ok((sigma_variable(v, k)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        out.add_term(Monomial::from_pairs(pairs), ctx.sigma_coeff(c, k)?);
    }
    Ok(out)
}

/// Fresh coordinates for `V^σ`: σ-power raised by one, plain names primed.
pub fn sigma_shift(v: &Variable) -> Variable {
    match v {
        Variable::Plain(s) => Variable::Plain(Sym::new(&format!("{s}'"))),
        Variable::SigmaD { base, sigma, d } => Variable::SigmaD {
            base: *base,
            sigma: sigma + 1,
            d: *d,
        },
        Variable::Prolong { base, level } => Variable::prolong(&sigma_shift(base), *level),
        Variable::Arc { base, t } => Variable::arc(&sigma_shift(base), *t),
    }
}

/// Inverse of [`sigma_shift`].
pub fn sigma_unshift(v: &Variable) -> Result<Variable> {
    Ok(match v {
        Variable::Plain(s) => match s.as_str().strip_suffix('\'') {
            Some(n) => Variable::Plain(Sym::new(n)),
            None => return Err(Error::UnsupportedVariable(v.clone())),
        },
        Variable::SigmaD { base, sigma, d } if *sigma > 0 => Variable::SigmaD {
            base: *base,
            sigma: sigma - 1,
            d: *d,
        },
        Variable::SigmaD { .. } => return Err(Error::UnsupportedVariable(v.clone())),
        Variable::Prolong { base, level } => Variable::prolong(&sigma_unshift(base)?, *level),
        Variable::Arc { base, t } => Variable::arc(&sigma_unshift(base)?, *t),
    })
}

/// `V^σ` together with the coordinate relabeling used to build it.
#[derive(Clone, Debug)]
pub struct SigmaImage {
    pub ideal: IdealPresentation,
    /// Pairs `(coordinate of V, coordinate of V^σ)`.
    pub relabeling: Vec<(Variable, Variable)>,
}

fn transport(
    v: &IdealPresentation,
    relabel: &dyn Fn(&Variable) -> Result<Variable>,
    coeff: &dyn Fn(&CoeffElem) -> Result<CoeffElem>,
) -> Result<SigmaImage> {
    let relabeling = v
        .ambient()
        .iter()
        .map(|x| Ok((x.clone(), relabel(x)?)))
        .collect::<Result<Vec<_>>>()?;
    let map: BTreeMap<Variable, Variable> = relabeling.iter().cloned().collect();
    let gens = v
        .generators()
        .iter()
        .map(|g| {
            let mut out = Poly::zero();
            for (m, c) in g.terms() {
                let nm = Monomial::from_pairs(m.pairs().iter().map(|(x, e)| (map[x].clone(), *e)));
                out.add_term(nm, coeff(c)?);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut ideal = IdealPresentation::new(map.values().cloned(), gens, v.order())?;
    ideal.assume_prime = v.assume_prime;
    Ok(SigmaImage { ideal, relabeling })
}

/// `V^σ`: σ applied to the coefficients, in σ-shifted coordinates.
pub fn variety_sigma(v: &IdealPresentation, ctx: &Context) -> Result<SigmaImage> {
    transport(v, &|x| Ok(sigma_shift(x)), &|c| ctx.sigma_coeff(c, 1))
}

/// `V^{σ⁻¹}`, using the declared inverse images of the parameters.
pub fn variety_sigma_inverse(v: &IdealPresentation, ctx: &Context) -> Result<SigmaImage> {
    transport(v, &sigma_unshift, &|c| ctx.sigma_inverse_coeff(c))
}

/// `lhs → rhs` where `lhs = σ^i D^j x` with `i ≥ 1` and every
/// difference-differential variable of `rhs` has σ-power below `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    lhs: Variable,
    rhs: Poly,
}

impl RewriteRule {
    pub fn new(lhs: Variable, rhs: Poly) -> Result<Self> {
        let Variable::SigmaD { sigma, .. } = lhs else {
            return Err(Error::InvalidRule(format!("left side {lhs} is not a σ/D variable")));
        };
        if sigma == 0 {
            return Err(Error::InvalidRule(format!("left side {lhs} has σ-power 0")));
        }
        for v in rhs.variables() {
            if let Variable::SigmaD { sigma: s, .. } = v {
                if s >= sigma {
                    return Err(Error::InvalidRule(format!(
                        "right side mentions {v}, not below σ-power {sigma}"
                    )));
                }
            }
        }
        Ok(RewriteRule { lhs, rhs })
    }

    pub fn lhs(&self) -> &Variable {
        &self.lhs
    }

    pub fn rhs(&self) -> &Poly {
        &self.rhs
    }

    fn key(&self) -> (Sym, u32, u32) {
        match self.lhs {
            Variable::SigmaD { base, sigma, d } => (base, sigma, d),
            _ => unreachable!("validated at construction"),
        }
    }

    /// One-step image of `v` if this rule applies to it: `σ^a D^b x` with
    /// `a ≥ i`, `b ≥ j` becomes `σ^{a-i} D^{b-j}(rhs)`.
    fn rewrite(&self, v: &Variable, ctx: &Context) -> Result<Option<Poly>> {
        let (base, i, j) = self.key();
        match v {
            Variable::SigmaD { base: b, sigma: a, d } if *b == base && *a >= i && *d >= j => {
                let r = apply_d_n(&self.rhs, d - j, ctx)?;
                Ok(Some(apply_sigma(&r, a - i, ctx)?))
            }
            _ => Ok(None),
        }
    }
}

/// Picks the most specific rule (largest σ-power, then D-order) matching `v`.
fn pick_rule<'a>(v: &Variable, rules: &'a [RewriteRule]) -> Option<&'a RewriteRule> {
    let Variable::SigmaD { base, sigma, d } = v else {
        return None;
    };
    rules
        .iter()
        .filter(|r| {
            let (b, i, j) = r.key();
            b == *base && *sigma >= i && *d >= j
        })
        .max_by_key(|r| {
            let (_, i, j) = r.key();
            (i, j)
        })
}

/// Normal form under the rules, rewriting the outermost (highest σ-power)
/// rewritable variable first until none remains.
pub fn sigma_reduce(p: &Poly, rules: &[RewriteRule], ctx: &Context) -> Result<Poly> {
    sigma_reduce_with(p, rules, ctx, &mut |cands| {
        (0..cands.len())
            .max_by(|&a, &b| sigma_rank(&cands[a]).cmp(&sigma_rank(&cands[b])).then(b.cmp(&a)))
            .unwrap()
    })
}

fn sigma_rank(v: &Variable) -> (u32, u32) {
    match v {
        Variable::SigmaD { sigma, d, .. } => (*sigma, *d),
        _ => (0, 0),
    }
}

/// [`sigma_reduce`] with a caller-chosen rewriting strategy: `choose` gets
/// the currently rewritable variables and returns the index to rewrite.
pub fn sigma_reduce_with(
    p: &Poly,
    rules: &[RewriteRule],
    ctx: &Context,
    choose: &mut dyn FnMut(&[Variable]) -> usize,
) -> Result<Poly> {
    let mut cur = p.clone();
    loop {
        let cands: Vec<Variable> = cur
            .variables()
            .into_iter()
            .filter(|v| pick_rule(v, rules).is_some())
            .collect();
        if cands.is_empty() {
            return Ok(cur);
        }
        let v = cands[choose(&cands)].clone();
        let rule = pick_rule(&v, rules).expect("candidate has a rule");
        let img = rule.rewrite(&v, ctx)?.expect("rule matches");
        let mut b = BTreeMap::new();
        b.insert(v, img);
        cur = cur.substitute(&b);
    }
}

/// A finite system of (σ,D)-equations with optional rewrite rules.
#[derive(Clone, Debug, Default)]
pub struct SystemSpec {
    pub generators: Vec<Poly>,
    pub rules: Vec<RewriteRule>,
}

/// Result of [`hidden_relation_scan`].
#[derive(Clone, Debug)]
pub struct ScanReport {
    /// Relations in the original variable window that the input generators
    /// do not already imply.
    pub relations: Vec<Poly>,
    pub window: Vec<Variable>,
    /// Number of polynomials in the operator closure that was eliminated.
    pub closure_size: usize,
    /// The depth actually completed; below the requested depth when the
    /// budget ran out.
    pub depth_reached: u32,
    pub complete: bool,
}

/// Closes the generators under D and σ up to `depth` applications,
/// eliminates everything outside the original variable window, and keeps
/// the elimination-basis elements not in the input ideal.
pub fn hidden_relation_scan(
    system: &SystemSpec,
    depth: u32,
    ctx: &Context,
    budget: Budget,
) -> Result<ScanReport> {
    if depth == 0 {
        return Err(Error::Invalid("scan depth must be at least 1".into()));
    }
    let gens: Vec<Poly> = system
        .generators
        .iter()
        .map(|g| sigma_reduce(g, &system.rules, ctx))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    let window: BTreeSet<Variable> = gens.iter().flat_map(Poly::variables).collect();

    let mut levels: Vec<Vec<Poly>> = vec![gens.clone()];
    let mut seen: Vec<Poly> = gens.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in levels.last().unwrap() {
            for h in [apply_d(g, ctx)?, apply_sigma(g, 1, ctx)?] {
                let h = sigma_reduce(&h, &system.rules, ctx)?;
                if !h.is_zero() && !seen.contains(&h) {
                    seen.push(h.clone());
                    next.push(h);
                }
            }
        }
        levels.push(next);
    }

    let input = IdealPresentation::new(window.iter().cloned(), gens.clone(), groebner::MonomialOrder::Grevlex)?;
    let mut reached = depth;
    loop {
        let closure: Vec<Poly> = levels[..=reached as usize].iter().flatten().cloned().collect();
        let ideal = IdealPresentation::from_generators(closure.clone()).extend_ambient(window.iter().cloned());
        let drop: BTreeSet<Variable> = ideal.ambient().iter().filter(|v| !window.contains(v)).cloned().collect();
        match groebner::eliminate(&ideal, &drop, budget) {
            Ok(elim) => {
                let mut relations = Vec::new();
                for p in elim.generators() {
                    if !groebner::ideal_member(&input, p, budget)? {
                        relations.push(p.clone());
                    }
                }
                return Ok(ScanReport {
                    relations,
                    window: window.into_iter().collect(),
                    closure_size: closure.len(),
                    depth_reached: reached,
                    complete: reached == depth,
                });
            }
            Err(Error::BudgetExceeded { .. }) if reached > 1 => reached -= 1,
            Err(Error::BudgetExceeded { .. }) => {
                return Ok(ScanReport {
                    relations: Vec::new(),
                    window: window.into_iter().collect(),
                    closure_size: closure.len(),
                    depth_reached: 0,
                    complete: false,
                })
            }
            Err(e) => return Err(e),
        }
    }
}

//! Prolongation varieties, the normal-form predicate, dominance and the
//! axiom-instance verifier for difference-differential fields.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::groebner::{self, Budget, IdealPresentation};
use crate::kernel::{Context, Poly, Variable};
use crate::operators::{self, SystemSpec};
use crate::{Error, Result};

/// Level-`k` coordinate of a base variable; level 0 is the variable itself.
pub fn level_var(v: &Variable, k: u32) -> Variable {
    if k == 0 {
        v.clone()
    } else {
        Variable::prolong(v, k)
    }
}

/// Shift of a coordinate one level up: `X ↦ Y_1`, `Y_k ↦ Y_{k+1}`.
pub fn next_level(v: &Variable) -> Variable {
    match v {
        Variable::Prolong { base, level } => Variable::prolong(base, level + 1),
        other => Variable::prolong(other, 1),
    }
}

/// `J_F·Y_next + F^D`: the total derivative where coordinates move one level
/// up and coefficients follow the declared parameter derivations.
pub fn total_derivative(p: &Poly, ctx: &Context) -> Poly {
    let mut out = p.map_coeffs(|c| ctx.d_coeff(c));
    for v in p.variables() {
        let dp = p.derivative(&v);
        out = &out + &(&dp * &Poly::var(next_level(&v)));
    }
    out
}

/// `τ_m(V)` with its generators split by the level at which they appear.
#[derive(Clone, Debug)]
pub struct ProlongedVariety {
    base: IdealPresentation,
    levels: Vec<Vec<Poly>>,
}

impl ProlongedVariety {
    pub fn base(&self) -> &IdealPresentation {
        &self.base
    }

    pub fn level(&self) -> u32 {
        (self.levels.len() - 1) as u32
    }

    /// Generators introduced at level `k`.
    pub fn level_generators(&self, k: u32) -> &[Poly] {
        &self.levels[k as usize]
    }

    /// All generators, level by level.
    pub fn generators(&self) -> Vec<Poly> {
        self.levels.iter().flatten().cloned().collect()
    }

    /// Coordinates `X, Y_1, …, Y_k`.
    pub fn frame(&self, k: u32) -> Vec<Variable> {
        (0..=k)
            .flat_map(|l| self.base.ambient().iter().map(move |v| level_var(v, l)))
            .collect()
    }

    /// `τ_k(V)` for `k ≤ m`, as an ideal in its own frame.
    pub fn slice(&self, k: u32) -> Result<IdealPresentation> {
        if k > self.level() {
            return Err(Error::LevelOutOfRange {
                requested: k,
                available: self.level(),
            });
        }
        let gens = self.levels[..=k as usize].iter().flatten().cloned().collect();
        let mut out = IdealPresentation::new(self.frame(k), gens, self.base.order())?;
        out.assume_prime = self.base.assume_prime;
        Ok(out)
    }

    pub fn ideal(&self) -> IdealPresentation {
        self.slice(self.level()).expect("top level exists")
    }
}

impl fmt::Display for ProlongedVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal())
    }
}

/// `τ_m(V)`: level `k` generators are the total derivatives of level `k-1`.
pub fn tau(v: &IdealPresentation, m: u32, ctx: &Context) -> ProlongedVariety {
    let mut levels = vec![v.generators().to_vec()];
    for _ in 0..m {
        let next = levels
            .last()
            .unwrap()
            .iter()
            .map(|g| total_derivative(g, ctx))
            .collect();
        levels.push(next);
    }
    ProlongedVariety {
        base: v.clone(),
        levels,
    }
}

/// First elimination generator whose prolongation leaves `I(W)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormWitness {
    pub level: u32,
    pub generator: Poly,
    pub image: Poly,
    /// The image reduced modulo `I(W)`; nonzero.
    pub remainder: Poly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormVerdict {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<NormalFormWitness>,
}

/// Checks `J_G·(Y_1..Y_{i+1}) + G^D ∈ I(W)` for every generator `G` of
/// `I(W) ∩ K[X, Y_1..Y_i]`, `i < m`. `base` lists the coordinates `X`.
pub fn normal_form_check(
    w: &IdealPresentation,
    base: &[Variable],
    m: u32,
    ctx: &Context,
    budget: Budget,
) -> Result<NormalFormVerdict> {
    let full: BTreeSet<Variable> = (0..=m).flat_map(|l| base.iter().map(move |v| level_var(v, l))).collect();
    let w = w.extend_ambient(full.iter().cloned());
    let wb = w.basis(budget)?;
    let mut checked = 0;
    for i in 0..m {
        let keep: BTreeSet<Variable> = (0..=i).flat_map(|l| base.iter().map(move |v| level_var(v, l))).collect();
        let drop = w.ambient().iter().filter(|v| !keep.contains(v)).cloned().collect();
        let elim = groebner::eliminate(&w, &drop, budget)?;
        for g in elim.generators() {
            checked += 1;
            let image = total_derivative(g, ctx);
            let remainder = wb.normal_form(&image)?;
            if !remainder.is_zero() {
                return Ok(NormalFormVerdict {
                    holds: false,
                    checked,
                    witness: Some(NormalFormWitness {
                        level: i,
                        generator: g.clone(),
                        image,
                        remainder,
                    }),
                });
            }
        }
    }
    Ok(NormalFormVerdict {
        holds: true,
        checked,
        witness: None,
    })
}

/// Outcome of comparing a projection of `W` with `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct DominanceCertificate {
    pub dominant: bool,
    /// Generators of the elimination ideal of `W` onto the targets.
    pub projection: Vec<Poly>,
    /// Generators of `V` outside the projection ideal.
    pub missing: Vec<Poly>,
    /// Projection generators outside `I(V)`.
    pub extra: Vec<Poly>,
}

/// Whether the closure of the projection of `W` onto `targets` is `V`.
/// Assumes both are irreducible, as recorded in `assume_prime`.
pub fn dominance_check(
    w: &IdealPresentation,
    v: &IdealPresentation,
    targets: &[Variable],
    budget: Budget,
) -> Result<DominanceCertificate> {
    let w = w.extend_ambient(targets.iter().cloned());
    let keep: BTreeSet<&Variable> = targets.iter().collect();
    let drop = w.ambient().iter().filter(|x| !keep.contains(x)).cloned().collect();
    let proj = groebner::eliminate(&w, &drop, budget)?;
    let target = IdealPresentation::new(targets.iter().cloned(), v.generators().to_vec(), proj.order())?;
    let pb = proj.basis(budget)?;
    let tb = target.basis(budget)?;
    let mut missing = Vec::new();
    for g in target.generators() {
        if !pb.contains(g)? {
            missing.push(g.clone());
        }
    }
    let mut extra = Vec::new();
    for g in proj.generators() {
        if !tb.contains(g)? {
            extra.push(g.clone());
        }
    }
    Ok(DominanceCertificate {
        dominant: missing.is_empty() && extra.is_empty(),
        projection: proj.generators().to_vec(),
        missing,
        extra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Inconclusive(String),
}

impl Verdict {
    fn of(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True => f.write_str("true"),
            Verdict::False => f.write_str("false"),
            Verdict::Inconclusive(why) => write!(f, "inconclusive ({why})"),
        }
    }
}

/// A verdict with the polynomials that support it.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl Check {
    fn failed(e: Error) -> Self {
        Check {
            verdict: Verdict::Inconclusive(e.to_string()),
            notes: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimensionData {
    pub dim_v: usize,
    pub dim_w: usize,
    /// `dim W − dim V + 1`.
    pub suggested_m: i64,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub a: Check,
    pub b: Check,
    pub c: Check,
    pub normal_form_pi1: Check,
    pub normal_form_pi2: Check,
    pub dimensions: Option<DimensionData>,
    /// Relations found by the consequence scan. Advisory only.
    pub advisory: Option<operators::ScanReport>,
    pub condition_d: &'static str,
}

impl AxiomReport {
    /// Combined verdict of conditions (a), (b), (c).
    pub fn overall(&self) -> Verdict {
        let vs = [&self.a.verdict, &self.b.verdict, &self.c.verdict];
        if vs.iter().any(|v| **v == Verdict::False) {
            Verdict::False
        } else if let Some(Verdict::Inconclusive(w)) = vs.iter().find(|v| matches!(v, Verdict::Inconclusive(_))) {
            Verdict::Inconclusive(w.clone())
        } else {
            Verdict::True
        }
    }
}

const CONDITION_D: &str = "not verified: only the dimension reduction and an advisory scan are provided";

#[derive(Clone, Copy, Debug)]
pub struct AxiomOptions {
    pub budget: Budget,
    /// Depth of the advisory consequence scan; `None` skips it.
    pub scan_depth: Option<u32>,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            budget: Budget::default(),
            scan_depth: Some(2),
        }
    }
}

fn dominance_note(label: &str, c: &DominanceCertificate) -> Vec<String> {
    let mut out = vec![format!(
        "{label}: projection {{{}}}",
        c.projection.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
    )];
    for p in &c.missing {
        out.push(format!("{label}: {p} not in projection"));
    }
    for p in &c.extra {
        out.push(format!("{label}: {p} not in target"));
    }
    out
}

fn dominance(w: &IdealPresentation, v: &IdealPresentation, targets: &[Variable], label: &str, budget: Budget) -> Result<(bool, Vec<String>)> {
    let c = dominance_check(w, v, targets, budget)?;
    Ok((c.dominant, dominance_note(label, &c)))
}

fn and_checks(parts: Vec<Result<(bool, Vec<String>)>>) -> Check {
    let mut notes = Vec::new();
    let mut all = true;
    for p in parts {
        match p {
            Ok((b, n)) => {
                all &= b;
                notes.extend(n);
            }
            Err(e) => return Check::failed(e),
        }
    }
    Check {
        verdict: Verdict::of(all),
        notes,
    }
}

fn nf_check(w: &IdealPresentation, base: &[Variable], ctx: &Context, budget: Budget) -> Check {
    match normal_form_check(w, base, 1, ctx, budget) {
        Ok(v) => Check {
            verdict: Verdict::of(v.holds),
            notes: v
                .witness
                .map(|w| vec![format!("{} maps to {}, remainder {}", w.generator, w.image, w.remainder)])
                .unwrap_or_default(),
        },
        Err(e) => Check::failed(e),
    }
}

/// Replaces each first-level coordinate `Y(v,1)` of a σ/D variable by `Dv`.
fn as_difference_differential(p: &Poly) -> Option<Poly> {
    let mut bind = BTreeMap::new();
    for v in p.variables() {
        if let Variable::Prolong { base, level: 1 } = &v {
            bind.insert(v.clone(), Poly::var(operators::d_variable(base).ok()?));
        }
    }
    Some(p.substitute(&bind))
}

/// Verifies conditions (a)–(c) for `V ⊆ 𝔸^n`, `U ⊆ V × V^σ` in coordinates
/// `(X, X^σ)`, and `W ⊆ τ_1(U)`.
pub fn dcfa_axiom_check(
    u: &IdealPresentation,
    v: &IdealPresentation,
    w: &IdealPresentation,
    ctx: &Context,
    opts: AxiomOptions,
) -> Result<AxiomReport> {
    let budget = opts.budget;
    let vs = operators::variety_sigma(v, ctx)?;
    let x: Vec<Variable> = v.ambient().to_vec();
    let xs: Vec<Variable> = vs.relabeling.iter().map(|p| p.1.clone()).collect();
    let ux: Vec<Variable> = x.iter().chain(xs.iter()).cloned().collect();
    for g in u.generators() {
        if let Some(bad) = g.variables().into_iter().find(|z| !ux.contains(z)) {
            return Err(Error::NotInAmbient(bad));
        }
    }
    let u = IdealPresentation::new(ux.iter().cloned(), u.generators().to_vec(), u.order())?;
    let tau_u = tau(&u, 1, ctx);
    let frame = tau_u.frame(1);
    for g in w.generators() {
        if let Some(bad) = g.variables().into_iter().find(|z| !frame.contains(z)) {
            return Err(Error::NotInAmbient(bad));
        }
    }
    let w = IdealPresentation::new(frame.iter().cloned(), w.generators().to_vec(), w.order())?;

    let a = and_checks(vec![
        dominance(&u, v, &x, "U onto V", budget),
        dominance(&u, &vs.ideal, &xs, "U onto V^σ", budget),
    ]);

    let contained = (|| -> Result<(bool, Vec<String>)> {
        let wb = w.basis(budget)?;
        let mut notes = Vec::new();
        for g in tau_u.generators() {
            if !wb.contains(&g)? {
                notes.push(format!("τ1(U) generator {g} not in I(W)"));
            }
        }
        Ok((notes.is_empty(), notes))
    })();
    let b = and_checks(vec![contained, dominance(&w, &u, &ux, "W onto U", budget)]);

    let tx: Vec<Variable> = x.iter().flat_map(|z| [z.clone(), level_var(z, 1)]).collect();
    let txs: Vec<Variable> = xs.iter().flat_map(|z| [z.clone(), level_var(z, 1)]).collect();
    let project = |keep: &[Variable]| {
        let drop = w.ambient().iter().filter(|z| !keep.contains(z)).cloned().collect();
        groebner::eliminate(&w, &drop, budget)
    };
    let pi = project(&tx).and_then(|p1| Ok((p1, project(&txs)?)));
    let (c, nf1, nf2) = match pi {
        Ok((p1, p2)) => {
            let c = operators::variety_sigma(&p1, ctx)
                .and_then(|s| {
                    let lhs = s.ideal.extend_ambient(txs.iter().cloned());
                    let rhs = p2.extend_ambient(txs.iter().cloned());
                    groebner::ideal_equal(&lhs, &rhs, budget).map(|eq| {
                        let show = |i: &IdealPresentation| {
                            i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
                        };
                        (eq, vec![format!("π1(W)^σ = {{{}}}", show(&lhs)), format!("π2(W) = {{{}}}", show(&rhs))])
                    })
                });
            (
                and_checks(vec![c]),
                nf_check(&p1, &x, ctx, budget),
                nf_check(&p2, &xs, ctx, budget),
            )
        }
        Err(e) => (Check::failed(e.clone()), Check::failed(e.clone()), Check::failed(e)),
    };

    let dimensions = (|| -> Result<DimensionData> {
        let dim_v = groebner::krull_dim(v, budget)?;
        let dim_w = groebner::krull_dim(&w, budget)?;
        Ok(DimensionData {
            dim_v,
            dim_w,
            suggested_m: dim_w as i64 - dim_v as i64 + 1,
        })
    })()
    .ok();

    let advisory = match opts.scan_depth {
        Some(depth) => {
            let gens: Option<Vec<Poly>> = w.generators().iter().map(as_difference_differential).collect();
            match gens {
                Some(generators) => Some(operators::hidden_relation_scan(
                    &SystemSpec {
                        generators,
                        rules: Vec::new(),
                    },
                    depth,
                    ctx,
                    budget,
                )?),
                None => None,
            }
        }
        None => None,
    };

    Ok(AxiomReport {
        a,
        b,
        c,
        normal_form_pi1: nf1,
        normal_form_pi2: nf2,
        dimensions,
        advisory,
        condition_d: CONDITION_D,
    })
}

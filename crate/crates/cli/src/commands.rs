//! Command dispatch. Every command yields an [`Outcome`] carrying a status,
//! a human-readable rendering and a JSON tree.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use sdforge_core::groebner::{self, Budget};
use sdforge_core::groups::{self, IntPoly};
use sdforge_core::jets::{self, JetVerdict};
use sdforge_core::operators::{self, SystemSpec};
use sdforge_core::prolong::{self, AxiomOptions, Check, Verdict};
use sdforge_core::ranks::{self, OrdinalCNF, RankSequence};
use sdforge_core::{arcs, CoeffElem, Error, IdealPresentation, MonomialOrder, Variable};

use crate::session::Session;
use crate::syntax::Diag;

pub const COMMANDS: &[&str] = &[
    "parse", "run", "reduce", "scan", "gbasis", "member", "eliminate", "dim", "tau", "nfcheck", "dominant",
    "axiomcheck", "jet", "jetsep", "arc", "tangent", "ord-add", "ord-nsum", "fr", "frwitness", "lascar", "realize",
    "seqcheck", "ld", "kernel", "onebased",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    False,
    Inconclusive,
    Error,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::False => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::False => "false",
            Status::Inconclusive => "inconclusive",
            Status::Error => "error",
        }
    }

    fn of(holds: bool) -> Self {
        if holds {
            Status::Ok
        } else {
            Status::False
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub result: Value,
}

impl Outcome {
    fn new(status: Status, text: String, result: Value) -> Self {
        Outcome { status, text, result }
    }

    pub fn error(msg: impl Into<String>) -> Self {
        let msg = msg.into();
        Outcome::new(Status::Error, format!("error: {msg}"), json!({ "message": msg }))
    }
}

#[derive(Debug)]
enum Failure {
    Diag(Diag),
    Core(Error),
    Usage(String),
}

impl From<Diag> for Failure {
    fn from(d: Diag) -> Self {
        Failure::Diag(d)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        match self {
            Failure::Core(e @ Error::BudgetExceeded { .. }) => {
                let msg = e.to_string();
                Outcome::new(Status::Inconclusive, format!("inconclusive: {msg}\n"), json!({ "message": msg }))
            }
            Failure::Core(e) => Outcome::error(e.to_string()),
            Failure::Diag(d) => Outcome::error(d.to_string()),
            Failure::Usage(m) => Outcome::error(m),
        }
    }
}

type Res = Result<Outcome, Failure>;

/// Options shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub budget: Budget,
    pub depth: Option<u32>,
    pub order: Option<MonomialOrder>,
    pub level: Option<u32>,
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn lines<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| format!("{}\n", x.to_string())).collect()
}

fn coeff_json(c: &CoeffElem) -> Value {
    Value::String(c.to_string())
}

fn vector_json(v: &[CoeffElem]) -> Value {
    Value::Array(v.iter().map(coeff_json).collect())
}

fn vector_text(v: &[CoeffElem]) -> String {
    format!("({})", strs(v).join(", "))
}

fn check_json(c: &Check) -> Value {
    json!({ "verdict": verdict_str(&c.verdict), "reason": verdict_reason(&c.verdict), "notes": c.notes })
}

fn verdict_str(v: &Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Inconclusive(_) => "inconclusive",
    }
}

fn verdict_reason(v: &Verdict) -> Value {
    match v {
        Verdict::Inconclusive(w) => Value::String(w.clone()),
        _ => Value::Null,
    }
}

fn need(ops: &[String], n: usize, usage: &str) -> Result<(), Failure> {
    if ops.len() < n {
        return Err(Failure::Usage(format!("usage: {usage}")));
    }
    if ops.len() > n + 1 {
        return Err(Failure::Usage(format!("too many operands; usage: {usage}")));
    }
    Ok(())
}

fn exact(ops: &[String], n: usize, usage: &str) -> Result<(), Failure> {
    if ops.len() != n {
        return Err(Failure::Usage(format!("usage: {usage}")));
    }
    Ok(())
}

fn ordinal(s: &str) -> Result<OrdinalCNF, Failure> {
    Ok(s.parse::<OrdinalCNF>()?)
}

fn sequence(s: &str) -> Result<RankSequence, Failure> {
    Ok(s.parse::<RankSequence>()?)
}

fn int_poly(s: &str) -> Result<IntPoly, Failure> {
    Ok(s.parse::<IntPoly>()?)
}

/// Runs one command against a session.
pub fn execute(session: &Session, command: &str, ops: &[String], opt: &Options) -> Outcome {
    match dispatch(session, command, ops, opt) {
        Ok(o) => o,
        Err(f) => f.into_outcome(),
    }
}

fn dispatch(s: &Session, command: &str, ops: &[String], opt: &Options) -> Res {
    let ideal = |src: &str| -> Result<IdealPresentation, Failure> {
        let i = s.ideal(src)?;
        Ok(match opt.order {
            Some(o) => i.with_order(o),
            None => i,
        })
    };
    let budget = opt.budget;
    match command {
        "reduce" => {
            exact(ops, 1, "reduce <expr>")?;
            let p = s.expr(&ops[0])?;
            let r = operators::sigma_reduce(&p, &s.rules, &s.ctx)?;
            Ok(Outcome::new(
                Status::Ok,
                format!("{r}\n"),
                json!({ "input": p.to_string(), "normal_form": r.to_string() }),
            ))
        }
        "scan" => {
            exact(ops, 1, "scan <ideal | generators> [--depth n]")?;
            let generators = match s.ideal(&ops[0]) {
                Ok(i) => i.generators().to_vec(),
                Err(_) => s.exprs(&ops[0])?,
            };
            let depth = opt.depth.unwrap_or(2);
            let sys = SystemSpec {
                generators,
                rules: s.rules.clone(),
            };
            let r = operators::hidden_relation_scan(&sys, depth, &s.ctx, budget)?;
            let mut text = String::from("relations:\n");
            for p in &r.relations {
                writeln!(text, "  {p}").unwrap();
            }
            writeln!(text, "window: {}", strs(&r.window).join(", ")).unwrap();
            let state = if r.complete { "complete" } else { "partial, budget exhausted" };
            writeln!(text, "depth: {} of {depth} ({state})", r.depth_reached).unwrap();
            let status = if r.complete { Status::Ok } else { Status::Inconclusive };
            Ok(Outcome::new(
                status,
                text,
                json!({
                    "relations": strs(&r.relations),
                    "window": strs(&r.window),
                    "closure_size": r.closure_size,
                    "depth_requested": depth,
                    "depth_reached": r.depth_reached,
                    "complete": r.complete,
                }),
            ))
        }
        "gbasis" => {
            exact(ops, 1, "gbasis <ideal> [--order lex|grevlex]")?;
            let i = ideal(&ops[0])?;
            let b = i.basis(budget)?;
            let polys = b.to_strings();
            Ok(Outcome::new(
                Status::Ok,
                lines(&polys),
                json!({ "order": i.order().to_string(), "variables": strs(b.variables()), "basis": polys }),
            ))
        }
        "member" => {
            exact(ops, 2, "member <ideal> <expr>")?;
            let i = ideal(&ops[0])?;
            let p = s.expr(&ops[1])?;
            let i = i.extend_ambient(p.variables());
            let b = i.basis(budget)?;
            let nf = b.normal_form(&p)?;
            let member = nf.is_zero();
            Ok(Outcome::new(
                Status::of(member),
                format!("{member}\nnormal form: {nf}\n"),
                json!({ "member": member, "normal_form": nf.to_string() }),
            ))
        }
        "eliminate" => {
            exact(ops, 2, "eliminate <ideal> <vars>")?;
            let i = ideal(&ops[0])?;
            let drop: BTreeSet<Variable> = s.variables(&ops[1])?.into_iter().collect();
            let e = groebner::eliminate(&i, &drop, budget)?;
            let gens = match e.cached_basis() {
                Some(b) => b.to_strings(),
                None => strs(e.generators()),
            };
            Ok(Outcome::new(
                Status::Ok,
                lines(&gens),
                json!({ "eliminated": strs(&drop.into_iter().collect::<Vec<_>>()), "ambient": strs(e.ambient()), "generators": gens }),
            ))
        }
        "dim" => {
            exact(ops, 1, "dim <ideal>")?;
            let d = groebner::krull_dim(&ideal(&ops[0])?, budget)?;
            Ok(Outcome::new(Status::Ok, format!("{d}\n"), json!({ "dim": d })))
        }
        "tau" => {
            exact(ops, 1, "tau <ideal> [--level m]")?;
            let m = opt.level.unwrap_or(1);
            let t = prolong::tau(&ideal(&ops[0])?, m, &s.ctx);
            let levels: Vec<Vec<String>> = (0..=m).map(|k| strs(t.level_generators(k))).collect();
            Ok(Outcome::new(
                Status::Ok,
                lines(&t.generators()),
                json!({ "level": m, "frame": strs(&t.frame(m)), "levels": levels }),
            ))
        }
        "nfcheck" => {
            need(ops, 1, "nfcheck <ideal> [base vars] [--level m]")?;
            let w = ideal(&ops[0])?;
            let base: Vec<Variable> = match ops.get(1) {
                Some(v) => s.variables(v)?,
                None => w.ambient().iter().filter(|v| !matches!(v, Variable::Prolong { .. })).cloned().collect(),
            };
            let top = w
                .ambient()
                .iter()
                .filter_map(|v| match v {
                    Variable::Prolong { level, .. } => Some(*level),
                    _ => None,
                })
                .max()
                .unwrap_or(1);
            let m = opt.level.unwrap_or(top);
            let r = prolong::normal_form_check(&w, &base, m, &s.ctx, budget)?;
            let mut text = format!("{}\nchecked: {}\n", r.holds, r.checked);
            let witness = match &r.witness {
                Some(wt) => {
                    writeln!(text, "witness at level {}: {}", wt.level, wt.generator).unwrap();
                    writeln!(text, "  image: {}\n  remainder: {}", wt.image, wt.remainder).unwrap();
                    json!({
                        "level": wt.level,
                        "generator": wt.generator.to_string(),
                        "image": wt.image.to_string(),
                        "remainder": wt.remainder.to_string(),
                    })
                }
                None => Value::Null,
            };
            Ok(Outcome::new(
                Status::of(r.holds),
                text,
                json!({ "holds": r.holds, "checked": r.checked, "level": m, "witness": witness }),
            ))
        }
        "dominant" => {
            need(ops, 2, "dominant <W> <V> [targets]")?;
            let w = ideal(&ops[0])?;
            let v = ideal(&ops[1])?;
            let targets = match ops.get(2) {
                Some(t) => s.variables(t)?,
                None => v.ambient().to_vec(),
            };
            let c = prolong::dominance_check(&w, &v, &targets, budget)?;
            let mut text = format!("{}\n", c.dominant);
            if !c.missing.is_empty() {
                writeln!(text, "missing: {}", strs(&c.missing).join(", ")).unwrap();
            }
            if !c.extra.is_empty() {
                writeln!(text, "extra: {}", strs(&c.extra).join(", ")).unwrap();
            }
            Ok(Outcome::new(
                Status::of(c.dominant),
                text,
                json!({
                    "dominant": c.dominant,
                    "projection": strs(&c.projection),
                    "missing": strs(&c.missing),
                    "extra": strs(&c.extra),
                }),
            ))
        }
        "axiomcheck" => {
            exact(ops, 3, "axiomcheck <U> <V> <W> [--depth n]")?;
            let (u, v, w) = (ideal(&ops[0])?, ideal(&ops[1])?, ideal(&ops[2])?);
            let opts = AxiomOptions {
                budget,
                scan_depth: Some(opt.depth.unwrap_or(2)),
            };
            let r = prolong::dcfa_axiom_check(&u, &v, &w, &s.ctx, opts)?;
            let overall = r.overall();
            let mut text = String::new();
            for (name, c) in [
                ("(a)", &r.a),
                ("(b)", &r.b),
                ("(c)", &r.c),
                ("normal form pi1", &r.normal_form_pi1),
                ("normal form pi2", &r.normal_form_pi2),
            ] {
                writeln!(text, "{name}: {}", c.verdict).unwrap();
                for n in &c.notes {
                    writeln!(text, "  {n}").unwrap();
                }
            }
            let dims = match &r.dimensions {
                Some(d) => {
                    writeln!(text, "dim V = {}, dim W = {}, suggested m = {}", d.dim_v, d.dim_w, d.suggested_m).unwrap();
                    json!({ "dim_v": d.dim_v, "dim_w": d.dim_w, "suggested_m": d.suggested_m })
                }
                None => Value::Null,
            };
            let advisory = match &r.advisory {
                Some(a) => {
                    writeln!(text, "advisory relations: {}", strs(&a.relations).join(", ")).unwrap();
                    json!({ "relations": strs(&a.relations), "window": strs(&a.window), "complete": a.complete })
                }
                None => Value::Null,
            };
            writeln!(text, "(d): {}", r.condition_d).unwrap();
            writeln!(text, "overall: {overall}").unwrap();
            let status = match overall {
                Verdict::True => Status::Ok,
                Verdict::False => Status::False,
                Verdict::Inconclusive(_) => Status::Inconclusive,
            };
            Ok(Outcome::new(
                status,
                text,
                json!({
                    "a": check_json(&r.a),
                    "b": check_json(&r.b),
                    "c": check_json(&r.c),
                    "normal_form_pi1": check_json(&r.normal_form_pi1),
                    "normal_form_pi2": check_json(&r.normal_form_pi2),
                    "dimensions": dims,
                    "advisory": advisory,
                    "condition_d": r.condition_d,
                    "overall": verdict_str(&overall),
                }),
            ))
        }
        "jet" => {
            exact(ops, 2, "jet <ideal> <point> [--level m]")?;
            let m = opt.level.unwrap_or(1);
            let j = jets::jet_space(&ideal(&ops[0])?, &s.point(&ops[1])?, m)?;
            let mut text = format!("dim = {}\n", j.dim());
            for b in &j.basis {
                writeln!(text, "  {}", vector_text(b)).unwrap();
            }
            Ok(Outcome::new(
                Status::Ok,
                text,
                json!({
                    "order": m,
                    "point": j.point.to_string(),
                    "variables": strs(&j.variables),
                    "frame": j.frame,
                    "dim": j.dim(),
                    "basis": j.basis.iter().map(|b| vector_json(b)).collect::<Vec<_>>(),
                }),
            ))
        }
        "jetsep" => {
            exact(ops, 3, "jetsep <U> <V> <point> [--level m_max]")?;
            let m = opt.level.unwrap_or(4);
            let v = jets::jets_distinguish(&ideal(&ops[0])?, &ideal(&ops[1])?, &s.point(&ops[2])?, m)?;
            let (sep, at) = match v {
                JetVerdict::Separated(k) => (true, k),
                JetVerdict::Indistinguishable(k) => (false, k),
            };
            Ok(Outcome::new(
                Status::Ok,
                format!("{v}\n"),
                json!({ "separated": sep, "m": at }),
            ))
        }
        "arc" => {
            exact(ops, 1, "arc <ideal> [--level m]")?;
            let m = opt.level.unwrap_or(1);
            let b = arcs::arc_bundle(&ideal(&ops[0])?, m);
            let n = b.base().generators().len();
            let gens: Vec<Vec<String>> = (0..n).map(|j| (0..=m).map(|t| b.generator(j, t).to_string()).collect()).collect();
            let mut text = String::new();
            for (j, row) in gens.iter().enumerate() {
                for (t, g) in row.iter().enumerate() {
                    writeln!(text, "f[{j},{t}] = {g}").unwrap();
                }
            }
            Ok(Outcome::new(
                Status::Ok,
                text,
                json!({ "order": m, "frame": strs(&b.frame()), "generators": gens }),
            ))
        }
        "tangent" => {
            exact(ops, 2, "tangent <ideal> <point>")?;
            let t = arcs::tangent_space(&ideal(&ops[0])?, &s.point(&ops[1])?, budget)?;
            let mut text = format!("dim = {}\njacobian rank = {}\n", t.dim(), t.jacobian_rank);
            if t.jacobian_rank_deficient {
                text.push_str("jacobian rank is deficient: the point is singular or the ideal is not radical\n");
            }
            for b in &t.basis {
                writeln!(text, "  {}", vector_text(b)).unwrap();
            }
            Ok(Outcome::new(
                Status::Ok,
                text,
                json!({
                    "dim": t.dim(),
                    "variables": strs(&t.variables),
                    "forms": t.forms.iter().map(|f| vector_json(f)).collect::<Vec<_>>(),
                    "basis": t.basis.iter().map(|b| vector_json(b)).collect::<Vec<_>>(),
                    "jacobian_rank": t.jacobian_rank,
                    "jacobian_rank_deficient": t.jacobian_rank_deficient,
                }),
            ))
        }
        "ord-add" | "ord-nsum" => {
            exact(ops, 2, &format!("{command} <ordinal> <ordinal>"))?;
            let (a, b) = (ordinal(&ops[0])?, ordinal(&ops[1])?);
            let r = if command == "ord-add" { a.add(&b) } else { a.natsum(&b) };
            Ok(Outcome::new(Status::Ok, format!("{r}\n"), json!({ "result": r.to_string() })))
        }
        "fr" => {
            exact(ops, 1, "fr <sequence>")?;
            let q = sequence(&ops[0])?;
            let r = ranks::fr_rank(&q);
            let sh = q.shape();
            let a = match sh.a {
                Some(a) => json!(a.to_string()),
                None => json!("inf"),
            };
            Ok(Outcome::new(
                Status::Ok,
                format!("{r}\n"),
                json!({
                    "sequence": q.to_string(),
                    "shape": { "A": a, "B": sh.b.to_string(), "C": sh.c.to_string() },
                    "fr": r.to_string(),
                }),
            ))
        }
        "frwitness" => {
            exact(ops, 2, "frwitness <sequence> <ordinal>")?;
            let q = sequence(&ops[0])?;
            let beta = ordinal(&ops[1])?;
            let w = ranks::fr_witness(&q, &beta)?;
            Ok(Outcome::new(
                Status::Ok,
                format!("{w}\n"),
                json!({ "witness": w.to_string(), "fr": ranks::fr_rank(&w).to_string() }),
            ))
        }
        "lascar" => {
            exact(ops, 2, "lascar <rank of a over b> <rank of b>")?;
            let iv = ranks::lascar_bounds(&ordinal(&ops[0])?, &ordinal(&ops[1])?);
            let mut text = format!("{iv}\n");
            if iv.pinned {
                text.push_str("pinned\n");
            }
            Ok(Outcome::new(
                Status::Ok,
                text,
                json!({ "lower": iv.lower.to_string(), "upper": iv.upper.to_string(), "pinned": iv.pinned }),
            ))
        }
        "realize" => {
            need(ops, 1, "realize <sequence> [base]")?;
            let q = sequence(&ops[0])?;
            let base = ops.get(1).map(String::as_str).unwrap_or("a");
            let r = ranks::realize_sequence(&q, base);
            let mut text = String::new();
            for g in &r.listed {
                writeln!(text, "g[{}] = {}", g.index, g.poly).unwrap();
            }
            let tail = match r.tail {
                Some((from, k)) => {
                    let b = ranks::b_poly(base, k, 0);
                    writeln!(text, "g[i] = D^i({b}) for i >= {from}").unwrap();
                    json!({ "from": from, "k": k.to_string(), "b": b.to_string() })
                }
                None => Value::Null,
            };
            if text.is_empty() {
                text.push_str("no generators\n");
            }
            let listed: Vec<Value> = r
                .listed
                .iter()
                .map(|g| json!({ "index": g.index, "k": g.k.to_string(), "generator": g.poly.to_string() }))
                .collect();
            Ok(Outcome::new(
                Status::Ok,
                text,
                json!({ "sequence": q.to_string(), "base": base, "listed": listed, "tail": tail }),
            ))
        }
        "seqcheck" => {
            exact(ops, 1, "seqcheck <sequence>")?;
            match ops[0].parse::<RankSequence>() {
                Ok(q) => Ok(Outcome::new(
                    Status::Ok,
                    format!("valid: {q}\n"),
                    json!({ "valid": true, "sequence": q.to_string() }),
                )),
                Err(Error::InvalidSequence { index, reason }) => Ok(Outcome::new(
                    Status::False,
                    format!("invalid at index {index}: {reason}\n"),
                    json!({ "valid": false, "index": index, "reason": reason }),
                )),
                Err(e) => Err(e.into()),
            }
        }
        "ld" => {
            exact(ops, 1, "ld <product of powers>")?;
            let e = s.eval_mult(&crate::syntax::parse_expr(&ops[0])?)?;
            let l = groups::log_derivative(&e, &s.ctx)?;
            let terms: serde_json::Map<String, Value> = l
                .variable_terms
                .iter()
                .map(|(v, n)| (v.to_string(), Value::String(n.to_string())))
                .collect();
            Ok(Outcome::new(
                Status::Ok,
                format!("{l}\n"),
                json!({ "log_derivative": l.to_string(), "terms": terms, "constant": coeff_json(&l.constant) }),
            ))
        }
        "kernel" => {
            exact(ops, 1, "kernel <integer polynomial in T>")?;
            let p = int_poly(&ops[0])?;
            let k = groups::sigma_poly_kernel(&p)?;
            let side = |fs: &[(usize, num_bigint::BigUint)]| -> Vec<Value> {
                fs.iter().map(|(i, e)| json!({ "shift": i, "exponent": e.to_string() })).collect()
            };
            Ok(Outcome::new(
                Status::Ok,
                format!("{k}\n"),
                json!({
                    "polynomial": p.to_string(),
                    "equation": k.to_string(),
                    "numerator": side(&k.numerator),
                    "denominator": side(&k.denominator),
                }),
            ))
        }
        "onebased" => {
            exact(ops, 1, "onebased <integer polynomial in T>")?;
            let p = int_poly(&ops[0])?;
            let v = groups::onebased_verdict(&p)?;
            let mut text = format!("{}\n", v.one_based);
            for (d, q) in v.witnesses.iter().zip(&v.quotients) {
                writeln!(text, "cyclotomic factor Phi_{d}; cofactor {q}").unwrap();
            }
            Ok(Outcome::new(
                Status::of(v.one_based),
                text,
                json!({
                    "polynomial": p.to_string(),
                    "one_based": v.one_based,
                    "witnesses": v.witnesses.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    "quotients": strs(&v.quotients),
                    "bound": v.bound.to_string(),
                }),
            ))
        }
        "parse" => Ok(parse_summary(s)),
        "run" => Err(Failure::Usage("`run` cannot be nested inside a script".into())),
        other => Err(Failure::Usage(format!(
            "unknown command `{other}`; expected one of: {}",
            COMMANDS.join(", ")
        ))),
    }
}

fn parse_summary(s: &Session) -> Outcome {
    let params: Vec<Value> = s
        .ctx
        .params()
        .map(|p| {
            json!({
                "name": p.name.to_string(),
                "D": p.d_image.to_string(),
                "s": p.sigma_image.to_string(),
                "sinv": p.sigma_inverse.as_ref().map(|c| c.to_string()),
            })
        })
        .collect();
    let ideals: serde_json::Map<String, Value> = s
        .ideals
        .iter()
        .map(|(n, i)| {
            (
                n.clone(),
                json!({ "ambient": strs(i.ambient()), "generators": strs(i.generators()), "order": i.order().to_string() }),
            )
        })
        .collect();
    let points: serde_json::Map<String, Value> = s.points.iter().map(|(n, p)| (n.clone(), json!(p.to_string()))).collect();
    let rules: Vec<Value> = s
        .rules
        .iter()
        .map(|r| json!({ "lhs": r.lhs().to_string(), "rhs": r.rhs().to_string() }))
        .collect();
    let mut text = String::new();
    writeln!(text, "variables: {}", s.vars.join(", ")).unwrap();
    if !s.symbols.is_empty() {
        writeln!(text, "symbols: {}", s.symbols.join(", ")).unwrap();
    }
    for p in s.ctx.params() {
        writeln!(text, "param {}: D = {}, s = {}", p.name, p.d_image, p.sigma_image).unwrap();
    }
    for (n, i) in &s.ideals {
        writeln!(text, "ideal {n} = {{ {} }}", strs(i.generators()).join(", ")).unwrap();
    }
    for r in &s.rules {
        writeln!(text, "rule {} = {}", r.lhs(), r.rhs()).unwrap();
    }
    for (n, p) in &s.points {
        writeln!(text, "point {n} = {p}").unwrap();
    }
    writeln!(text, "commands: {}", s.commands.len()).unwrap();
    Outcome::new(
        Status::Ok,
        text,
        json!({
            "variables": s.vars,
            "symbols": s.symbols,
            "params": params,
            "ideals": ideals,
            "rules": rules,
            "points": points,
            "commands": s.commands.iter().map(|c| c.0.clone()).collect::<Vec<_>>(),
        }),
    )
}


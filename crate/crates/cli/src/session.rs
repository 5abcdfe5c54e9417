//! Name resolution: turns parsed statements into a session of declared
//! variables, parameters, ideals, rules and points.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use sdforge_core::groups::MultExpr;
use sdforge_core::operators::{self, RewriteRule};
use sdforge_core::{CoeffElem, Context, IdealPresentation, MonomialOrder, Point, Poly, Sym, Variable};

use crate::syntax::{self, Diag, Expr, ImageKind, Parser, Pos, Stmt};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Var,
    Symbol,
    Param,
    Ideal,
    Point,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Var => "variable",
            Kind::Symbol => "symbol",
            Kind::Param => "parameter",
            Kind::Ideal => "ideal",
            Kind::Point => "point",
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    pub ctx: Context,
    names: BTreeMap<String, (Kind, Pos)>,
    pub vars: Vec<String>,
    pub symbols: Vec<String>,
    pub ideals: BTreeMap<String, IdealPresentation>,
    pub rules: Vec<RewriteRule>,
    pub points: BTreeMap<String, Point>,
    pub commands: Vec<(String, Pos)>,
    /// Undeclared names resolve to difference-differential variables.
    implicit: bool,
}

impl Session {
    /// A session without declarations, for commands given on the command
    /// line alone.
    pub fn implicit() -> Self {
        Session {
            implicit: true,
            ..Session::default()
        }
    }

    pub fn from_source(src: &str) -> Result<Self, Diag> {
        let stmts = syntax::parse_script(src)?;
        let mut s = Session::default();
        for st in &stmts {
            s.apply(st)?;
        }
        Ok(s)
    }

    fn declare(&mut self, name: &str, pos: Pos, kind: Kind) -> Result<(), Diag> {
        if let Some((k, p)) = self.names.get(name) {
            return Err(Diag::new(pos, format!("`{name}` shadows the {k} declared at {p}")));
        }
        self.names.insert(name.to_owned(), (kind, pos));
        Ok(())
    }

    fn apply(&mut self, st: &Stmt) -> Result<(), Diag> {
        match st {
            Stmt::Var(names) => {
                for (n, p) in names {
                    self.declare(n, *p, Kind::Var)?;
                    self.vars.push(n.clone());
                }
            }
            Stmt::Symbol(names) => {
                for (n, p) in names {
                    self.declare(n, *p, Kind::Symbol)?;
                    self.symbols.push(n.clone());
                }
            }
            Stmt::Param { name, pos, images } => {
                self.declare(name, *pos, Kind::Param)?;
                let sym = self.ctx.declare(name).map_err(|e| Diag::new(*pos, e.to_string()))?;
                for (kind, e, p) in images {
                    let c = self.eval_coeff(e)?;
                    let r = match kind {
                        ImageKind::D => self.ctx.set_d_image(sym, c),
                        ImageKind::Sigma => self.ctx.set_sigma_image(sym, c),
                        ImageKind::SigmaInverse => self.ctx.set_sigma_inverse(sym, c),
                    };
                    r.map_err(|e| Diag::new(*p, e.to_string()))?;
                }
            }
            Stmt::Ideal { name, pos, over, order, generators } => {
                self.declare(name, *pos, Kind::Ideal)?;
                let gens = generators.iter().map(|g| self.eval(g)).collect::<Result<Vec<_>, _>>()?;
                let order = match order {
                    None => MonomialOrder::Grevlex,
                    Some((o, p)) => o.parse().map_err(|e: String| Diag::new(*p, e))?,
                };
                let ambient: Vec<Variable> = match over {
                    Some(vs) => vs.iter().map(|v| self.eval_variable(v)).collect::<Result<_, _>>()?,
                    None => gens.iter().flat_map(Poly::variables).collect::<BTreeSet<_>>().into_iter().collect(),
                };
                let ideal = IdealPresentation::new(ambient, gens, order).map_err(|e| Diag::new(*pos, e.to_string()))?;
                self.ideals.insert(name.clone(), ideal);
            }
            Stmt::Rule { lhs, rhs, pos } => {
                let l = self.eval_variable(lhs)?;
                let r = self.eval(rhs)?;
                let rule = RewriteRule::new(l, r).map_err(|e| Diag::new(*pos, e.to_string()))?;
                self.rules.push(rule);
            }
            Stmt::Point { name, pos, bindings } => {
                self.declare(name, *pos, Kind::Point)?;
                let pt = self.eval_bindings(bindings)?;
                self.points.insert(name.clone(), pt);
            }
            Stmt::Command { text, pos } => self.commands.push((text.clone(), *pos)),
        }
        Ok(())
    }

    fn lookup(&self, name: &str, pos: Pos) -> Result<Option<Kind>, Diag> {
        match self.names.get(name) {
            Some((k, _)) => Ok(Some(*k)),
            None if self.implicit => Ok(None),
            None => Err(Diag::new(pos, format!("unknown symbol `{name}`"))),
        }
    }

    fn name_variable(&self, name: &str, pos: Pos) -> Result<Poly, Diag> {
        // `t'` is the σ-shift of the symbol `t`.
        let stem = name.trim_end_matches('\'');
        if stem.len() != name.len() {
            return match self.names.get(stem) {
                Some((Kind::Symbol, _)) => Ok(Poly::var(Variable::plain(name))),
                _ if self.implicit => Ok(Poly::var(Variable::plain(name))),
                _ => Err(Diag::new(pos, format!("unknown symbol `{name}`"))),
            };
        }
        match self.lookup(name, pos)? {
            None | Some(Kind::Var) => Ok(Poly::var(Variable::base(name))),
            Some(Kind::Symbol) => Ok(Poly::var(Variable::plain(name))),
            Some(Kind::Param) => Ok(Poly::constant(CoeffElem::param(Sym::new(name)))),
            Some(k) => Err(Diag::new(pos, format!("`{name}` is an {k}, not an expression"))),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<Poly, Diag> {
        let core = |p: Pos| move |err: sdforge_core::Error| Diag::new(p, err.to_string());
        Ok(match e {
            Expr::Int(n, _) => Poly::constant(CoeffElem::from_int(n.clone())),
            Expr::Name(n, p) => self.name_variable(n, *p)?,
            Expr::Indexed(n, i, j, p) => match self.lookup(n, *p)? {
                None | Some(Kind::Var) => Poly::var(Variable::sigma_d(n, *i, *j)),
                Some(k) => return Err(Diag::new(*p, format!("`{n}` is a {k}; only variables take indices"))),
            },
            Expr::D(a, p) => operators::apply_d(&self.eval(a)?, &self.ctx).map_err(core(*p))?,
            Expr::Sigma(k, a, p) => operators::apply_sigma(&self.eval(a)?, *k, &self.ctx).map_err(core(*p))?,
            Expr::Prolong(a, k, _) => Poly::var(Variable::prolong(&self.eval_variable(a)?, *k)),
            Expr::Arc(a, t, _) => Poly::var(Variable::arc(&self.eval_variable(a)?, *t)),
            Expr::Neg(a, _) => -self.eval(a)?,
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => &self.eval(a)? * &self.eval(b)?,
            Expr::Div(a, b, p) => {
                let c = self.eval(b)?.as_constant().ok_or_else(|| Diag::new(*p, "can only divide by a constant"))?;
                let inv = c.inv().ok_or_else(|| Diag::new(*p, "division by zero"))?;
                self.eval(a)?.scale(&inv)
            }
            Expr::Pow(a, k, p) => {
                if *k < 0 {
                    return Err(Diag::new(*p, "negative exponents are only allowed in `ld` expressions"));
                }
                self.eval(a)?.pow(*k as u32)
            }
        })
    }

    pub fn eval_coeff(&self, e: &Expr) -> Result<CoeffElem, Diag> {
        self.eval(e)?
            .as_constant()
            .ok_or_else(|| Diag::new(e.pos(), "expected a constant"))
    }

    pub fn eval_variable(&self, e: &Expr) -> Result<Variable, Diag> {
        let p = self.eval(e)?;
        if p.len() == 1 {
            let (m, c) = p.leading_term().expect("one term");
            if c.is_one() && m.pairs().len() == 1 && m.pairs()[0].1 == 1 {
                return Ok(m.pairs()[0].0.clone());
            }
        }
        Err(Diag::new(e.pos(), format!("expected a single variable, found {p}")))
    }

    pub fn eval_bindings(&self, bs: &[(Expr, Expr)]) -> Result<Point, Diag> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (l, r) in bs {
            let v = self.eval_variable(l)?;
            if !seen.insert(v.clone()) {
                return Err(Diag::new(l.pos(), format!("{v} is bound twice")));
            }
            out.push((v, self.eval_coeff(r)?));
        }
        Ok(Point::new(out))
    }

    /// A product of powers of variables and constants.
    pub fn eval_mult(&self, e: &Expr) -> Result<MultExpr, Diag> {
        fn invert(m: MultExpr) -> MultExpr {
            MultExpr {
                factors: m.factors.into_iter().map(|(f, k)| (f, -k)).collect(),
            }
        }
        match e {
            Expr::Mul(a, b) => Ok(self.eval_mult(a)?.mul(&self.eval_mult(b)?)),
            Expr::Div(a, b, _) => Ok(self.eval_mult(a)?.mul(&invert(self.eval_mult(b)?))),
            Expr::Pow(a, k, _) => {
                let m = self.eval_mult(a)?;
                Ok(MultExpr {
                    factors: m.factors.into_iter().map(|(f, e)| (f, e * k)).collect(),
                })
            }
            Expr::Neg(a, _) => Ok(MultExpr::coeff(CoeffElem::from_int(-1), 1).mul(&self.eval_mult(a)?)),
            other => {
                let p = self.eval(other)?;
                if let Some(c) = p.as_constant() {
                    return Ok(MultExpr::coeff(c, 1));
                }
                match self.eval_variable(other) {
                    Ok(v) => Ok(MultExpr::var(v, 1)),
                    Err(_) => Err(Diag::new(other.pos(), format!("{p} is not a variable or constant factor"))),
                }
            }
        }
    }

    pub fn expr(&self, src: &str) -> Result<Poly, Diag> {
        self.eval(&syntax::parse_expr(src)?)
    }

    pub fn variables(&self, src: &str) -> Result<Vec<Variable>, Diag> {
        let es = Parser::new(src)?.expression_list()?;
        es.iter().map(|e| self.eval_variable(e)).collect()
    }

    pub fn exprs(&self, src: &str) -> Result<Vec<Poly>, Diag> {
        let es = Parser::new(src)?.expression_list()?;
        es.iter().map(|e| self.eval(e)).collect()
    }

    /// A declared point name or an inline `(x = 1, y = 2)`.
    pub fn point(&self, src: &str) -> Result<Point, Diag> {
        if let Some(p) = self.points.get(src.trim()) {
            return Ok(p.clone());
        }
        if !src.contains('=') {
            return Err(Diag::new(Pos { line: 1, col: 1 }, format!("unknown point `{}`", src.trim())));
        }
        self.eval_bindings(&Parser::new(src)?.bindings_only()?)
    }

    /// A declared ideal name or an inline `{ g1, g2 }`.
    pub fn ideal(&self, src: &str) -> Result<IdealPresentation, Diag> {
        let t = src.trim();
        if let Some(i) = self.ideals.get(t) {
            return Ok(i.clone());
        }
        if let Some(inner) = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            let gens = if inner.trim().is_empty() { Vec::new() } else { self.exprs(inner)? };
            return Ok(IdealPresentation::from_generators(gens));
        }
        Err(Diag::new(Pos { line: 1, col: 1 }, format!("unknown ideal `{t}`")))
    }

    pub fn ideal_names(&self) -> impl Iterator<Item = &String> {
        self.ideals.keys()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_parameter_images() {
        let s = Session::from_source("param c with D(c)=c^2, s(c)=c; var x; ideal I = { s(D(x)) - c };").unwrap();
        let i = &s.ideals["I"];
        assert_eq!(i.generators()[0].to_string(), "x[1,1] - c");
        assert_eq!(i.ambient(), &[Variable::sigma_d("x", 1, 1)]);
    }

    #[test]
    fn rejects_shadowing_and_unknowns() {
        let e = Session::from_source("var x;\nvar x;").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (2, 5));
        let e = Session::from_source("var x; ideal I = { x - z };").unwrap_err();
        assert!(e.msg.contains("unknown symbol `z`"), "{e}");
        assert!(Session::from_source("var s;").is_err());
    }

    #[test]
    fn division_only_by_constants() {
        let s = Session::from_source("var x, y;").unwrap();
        assert_eq!(s.expr("x/2").unwrap().to_string(), "1/2*x");
        assert!(s.expr("x/y").is_err());
    }
}

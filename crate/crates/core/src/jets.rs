//! Jet spaces of a variety at a point, as exact nullspaces over the Taylor
//! frame, and jet-based separation of varieties.

use std::fmt;

use crate::groebner::IdealPresentation;
use crate::kernel::{linalg, multiindex, CoeffElem, Point, Variable};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct JetSpace {
    pub order: u32,
    pub point: Point,
    pub variables: Vec<Variable>,
    /// Multi-indices `1 ≤ |s| ≤ m` in graded-lex order.
    pub frame: Vec<Vec<u32>>,
    /// Constraint rows, reduced.
    pub rows: Vec<Vec<CoeffElem>>,
    /// Nullspace basis in reduced row echelon form.
    pub basis: Vec<Vec<CoeffElem>>,
}

impl JetSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether every basis vector of `self` satisfies `other`'s constraints.
    pub fn is_contained_in(&self, other: &JetSpace) -> bool {
        self.frame == other.frame && self.basis.iter().all(|v| linalg::annihilates(&other.rows, v))
    }
}

/// Rejects `a` unless every generator vanishes there.
pub fn check_point(v: &IdealPresentation, a: &Point) -> Result<()> {
    for g in v.generators() {
        if !g.evaluate(a)?.is_zero() {
            return Err(Error::PointNotOnVariety(g.clone()));
        }
    }
    Ok(())
}

/// `J^m(V)_a` with multipliers `(X−a)^α`, `|α| ≤ m−1`.
pub fn jet_space(v: &IdealPresentation, a: &Point, m: u32) -> Result<JetSpace> {
    jet_space_with_multipliers(v, a, m, m.saturating_sub(1))
}

/// [`jet_space`] with an explicit multiplier degree bound.
pub fn jet_space_with_multipliers(v: &IdealPresentation, a: &Point, m: u32, mult_deg: u32) -> Result<JetSpace> {
    if m == 0 {
        return Err(Error::Invalid("jet order must be at least 1".into()));
    }
    check_point(v, a)?;
    let vars = v.ambient().to_vec();
    for x in &vars {
        if a.get(x).is_none() {
            return Err(Error::MissingBinding(x.clone()));
        }
    }
    let frame = multiindex::frame(vars.len(), m);
    let mut rows = Vec::new();
    for alpha in multiindex::up_to(vars.len(), mult_deg) {
        let shift = multiindex::shifted_power(&vars, a, &alpha)?;
        for g in v.generators() {
            rows.push(multiindex::taylor_row(&(&shift * g), &vars, a, m)?);
        }
    }
    let (rows, _) = linalg::rref(&rows, frame.len());
    let basis = linalg::nullspace(&rows, frame.len());
    Ok(JetSpace {
        order: m,
        point: a.clone(),
        variables: vars,
        frame,
        rows,
        basis,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JetVerdict {
    /// The jet spaces first differ at this order.
    Separated(u32),
    /// Equal jet spaces at every order up to this bound.
    Indistinguishable(u32),
}

impl fmt::Display for JetVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetVerdict::Separated(m) => write!(f, "separated at m = {m}"),
            JetVerdict::Indistinguishable(m) => write!(f, "indistinguishable up to m = {m}"),
        }
    }
}

/// Smallest order at which the jet spaces of `U` and `V` at `a` differ.
/// Both presentations must share their ambient frame.
pub fn jets_distinguish(u: &IdealPresentation, v: &IdealPresentation, a: &Point, m_max: u32) -> Result<JetVerdict> {
    let amb: std::collections::BTreeSet<Variable> = u.ambient().iter().chain(v.ambient()).cloned().collect();
    let u = u.extend_ambient(amb.iter().cloned());
    let v = v.extend_ambient(amb);
    for m in 1..=m_max {
        let ju = jet_space(&u, a, m)?;
        let jv = jet_space(&v, a, m)?;
        if !(ju.is_contained_in(&jv) && jv.is_contained_in(&ju)) {
            return Ok(JetVerdict::Separated(m));
        }
    }
    Ok(JetVerdict::Indistinguishable(m_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Poly;

    fn b(n: &str) -> Variable {
        Variable::base(n)
    }

    fn p(n: &str) -> Poly {
        Poly::var(b(n))
    }

    fn ideal(gens: Vec<Poly>) -> IdealPresentation {
        IdealPresentation::new([b("x"), b("y")], gens, Default::default()).unwrap()
    }

    fn pt(x: i64, y: i64) -> Point {
        Point::new([(b("x"), CoeffElem::from_int(x)), (b("y"), CoeffElem::from_int(y))])
    }

    fn ints(v: &[i64]) -> Vec<CoeffElem> {
        v.iter().map(|&k| CoeffElem::from_int(k)).collect()
    }

    #[test]
    fn parabola_jets() {
        let v = ideal(vec![&p("y") - &p("x").pow(2)]);
        let j1 = jet_space(&v, &pt(1, 1), 1).unwrap();
        assert_eq!(j1.dim(), 1);
        assert_eq!(j1.basis, vec![ints(&[1, 2])]);
        let j2 = jet_space(&v, &pt(1, 1), 2).unwrap();
        assert_eq!(j2.dim(), 2);
        assert_eq!(j2.rows.len(), 3);
    }

    #[test]
    fn free_space_is_full() {
        let v = IdealPresentation::new([b("x"), b("y"), b("z")], vec![], Default::default()).unwrap();
        let a = Point::new(["x", "y", "z"].map(|n| (b(n), CoeffElem::from_int(2))));
        // C(3+3, 3) - 1
        assert_eq!(jet_space(&v, &a, 3).unwrap().dim(), 19);
    }

    #[test]
    fn point_off_variety() {
        let v = ideal(vec![&p("y") - &p("x").pow(2)]);
        assert!(matches!(jet_space(&v, &pt(1, 2), 1), Err(Error::PointNotOnVariety(_))));
    }

    #[test]
    fn separation_examples() {
        let u = ideal(vec![p("y")]);
        let v = ideal(vec![&p("y") - &p("x").pow(2)]);
        assert_eq!(jets_distinguish(&u, &v, &pt(0, 0), 4).unwrap(), JetVerdict::Separated(2));
        assert_eq!(jets_distinguish(&v, &v, &pt(0, 0), 3).unwrap(), JetVerdict::Indistinguishable(3));
        let w = ideal(vec![&(&p("y") - &p("x").pow(2)) - &p("x").pow(7)]);
        assert_eq!(jets_distinguish(&v, &w, &pt(0, 0), 3).unwrap(), JetVerdict::Indistinguishable(3));
    }
}

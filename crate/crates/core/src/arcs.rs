//! Arc bundles via ε-truncated expansion, truncation maps, and tangent
//! spaces at points.

use crate::groebner::{self, Budget, IdealPresentation};
use crate::jets::check_point;
use crate::kernel::{linalg, CoeffElem, Point, Poly, Variable};
use crate::{Error, Result};

/// An element of `K[x][ε]/(ε^{m+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct Truncated(pub Vec<Poly>);

impl Truncated {
    pub fn constant(p: Poly, m: u32) -> Self {
        let mut v = vec![Poly::zero(); m as usize + 1];
        v[0] = p;
        Truncated(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        Truncated(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.0.len();
        let mut out = vec![Poly::zero(); n];
        for i in 0..n {
            if self.0[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                out[i + j] = &out[i + j] + &(&self.0[i] * &o.0[j]);
            }
        }
        Truncated(out)
    }
}

/// `Σ_t x_{v,t} ε^t`.
pub fn arc_series(v: &Variable, m: u32) -> Truncated {
    Truncated((0..=m).map(|t| Poly::var(Variable::arc(v, t))).collect())
}

/// `g(Σ_t x_{·,t} ε^t)` modulo `ε^{m+1}`.
pub fn expand(g: &Poly, m: u32) -> Truncated {
    let mut acc = Truncated::constant(Poly::zero(), m);
    for (mono, c) in g.terms() {
        let mut term = Truncated::constant(Poly::constant(c.clone()), m);
        for (v, e) in mono.pairs() {
            let s = arc_series(v, m);
            for _ in 0..*e {
                term = term.mul(&s);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// `𝒜_m V`: generators `f_{j,t}` over the coordinates `x_{i,t}`, `t ≤ m`.
#[derive(Clone, Debug, PartialEq)]
pub struct ArcBundle {
    base: IdealPresentation,
    order: u32,
    /// `generators[j][t] = f_{j,t}`.
    generators: Vec<Vec<Poly>>,
}

impl ArcBundle {
    pub fn base(&self) -> &IdealPresentation {
        &self.base
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn generator(&self, j: usize, t: u32) -> &Poly {
        &self.generators[j][t as usize]
    }

    /// All `f_{j,t}`, ordered by `j` then `t`.
    pub fn generators(&self) -> Vec<Poly> {
        self.generators.iter().flatten().cloned().collect()
    }

    pub fn frame(&self) -> Vec<Variable> {
        self.base
            .ambient()
            .iter()
            .flat_map(|v| (0..=self.order).map(move |t| Variable::arc(v, t)))
            .collect()
    }

    pub fn ideal(&self) -> IdealPresentation {
        IdealPresentation::new(self.frame(), self.generators(), self.base.order()).expect("frame covers generators")
    }
}

pub fn arc_bundle(v: &IdealPresentation, m: u32) -> ArcBundle {
    ArcBundle {
        base: v.clone(),
        order: m,
        generators: v.generators().iter().map(|g| expand(g, m).0).collect(),
    }
}

/// `ρ_{r,m}` on bundles.
pub fn arc_truncate(b: &ArcBundle, m: u32) -> Result<ArcBundle> {
    if m > b.order {
        return Err(Error::LevelOutOfRange {
            requested: m,
            available: b.order,
        });
    }
    Ok(ArcBundle {
        base: b.base.clone(),
        order: m,
        generators: b.generators.iter().map(|g| g[..=m as usize].to_vec()).collect(),
    })
}

/// `ρ_{r,m}` on points: drops arc coordinates above order `m`.
pub fn arc_truncate_point(a: &Point, m: u32) -> Point {
    Point(
        a.0.iter()
            .filter(|(v, _)| !matches!(v, Variable::Arc { t, .. } if *t > m))
            .map(|(v, c)| (v.clone(), c.clone()))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq)]
pub struct TangentSpace {
    pub point: Point,
    pub variables: Vec<Variable>,
    /// Jacobian rows `∂g_j/∂X_i(a)`.
    pub forms: Vec<Vec<CoeffElem>>,
    pub basis: Vec<Vec<CoeffElem>>,
    pub jacobian_rank: usize,
    /// The Jacobian rank falls below the codimension. A hint of a singular
    /// point, not a proof.
    pub jacobian_rank_deficient: bool,
}

impl TangentSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn tangent_space(v: &IdealPresentation, a: &Point, budget: Budget) -> Result<TangentSpace> {
    check_point(v, a)?;
    let vars = v.ambient().to_vec();
    let forms = v
        .generators()
        .iter()
        .map(|g| vars.iter().map(|x| g.derivative(x).evaluate(a)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let jacobian_rank = linalg::rank(&forms, vars.len());
    let basis = linalg::nullspace(&forms, vars.len());
    let codim = vars.len() - groebner::krull_dim(v, budget)?;
    Ok(TangentSpace {
        point: a.clone(),
        variables: vars,
        forms,
        basis,
        jacobian_rank,
        jacobian_rank_deficient: jacobian_rank < codim,
    })
}

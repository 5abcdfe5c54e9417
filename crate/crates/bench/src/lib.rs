//! Shared fixtures for the benchmarks.

use sdforge_core::{IdealPresentation, MonomialOrder, Poly, Variable};

pub fn v(name: &str) -> Poly {
    Poly::var(Variable::base(name))
}

/// The cyclic-n ideal in variables `x0..x{n-1}`.
pub fn cyclic(n: usize, order: MonomialOrder) -> IdealPresentation {
    let xs: Vec<Poly> = (0..n).map(|i| v(&format!("x{i}"))).collect();
    let mut gens = Vec::new();
    for len in 1..n {
        let mut g = Poly::zero();
        for start in 0..n {
            let term = (0..len).fold(Poly::one(), |acc, k| &acc * &xs[(start + k) % n]);
            g = &g + &term;
        }
        gens.push(g);
    }
    let all = xs.iter().fold(Poly::one(), |acc, x| &acc * x);
    gens.push(&all - &Poly::one());
    let amb = (0..n).map(|i| Variable::base(&format!("x{i}")));
    IdealPresentation::new(amb, gens, order).expect("generators live in the ambient space")
}

/// The graph `a = x^4 + x^3 z + z^2` under lex.
pub fn quartic_graph() -> IdealPresentation {
    let (a, x, z) = (v("a"), v("x"), v("z"));
    let f = &(&x.pow(4) + &(&x.pow(3) * &z)) + &z.pow(2);
    IdealPresentation::new(
        [Variable::base("a"), Variable::base("x"), Variable::base("z")],
        vec![&a - &f],
        MonomialOrder::Lex,
    )
    .expect("generators live in the ambient space")
}

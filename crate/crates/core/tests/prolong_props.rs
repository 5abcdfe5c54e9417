use std::collections::BTreeMap;

use proptest::prelude::*;
use sdforge_core::groebner::{eliminate, ideal_equal, krull_dim};
use sdforge_core::operators::apply_d_n;
use sdforge_core::prolong::{level_var, normal_form_check, tau, total_derivative};
use sdforge_core::{Budget, CoeffElem, Context, IdealPresentation, Monomial, MonomialOrder, Poly, Variable};

fn b(n: &str) -> Variable {
    Variable::base(n)
}

/// `f` in the given independent variables, degree at most 4.
fn f_in(indep: &'static [&'static str]) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..=4, indep.len())), 1..5).prop_map(move |ts| {
        Poly::from_terms(ts.into_iter().filter(|t| t.1.iter().sum::<u32>() <= 4).map(|(c, es)| {
            (Monomial::from_pairs(indep.iter().map(|n| b(n)).zip(es)), CoeffElem::from_int(c))
        }))
    })
}

/// The graph `a = f(...)`; `a` sorts first, so lex makes it the leading variable.
fn graph(f: &Poly, indep: &[&str]) -> IdealPresentation {
    let amb = std::iter::once(b("a")).chain(indep.iter().map(|n| b(n)));
    IdealPresentation::new(amb, vec![&Poly::var(b("a")) - f], MonomialOrder::Lex).unwrap()
}

fn graph_strategy() -> impl Strategy<Value = (Poly, &'static [&'static str])> {
    prop_oneof![
        f_in(&["x"]).prop_map(|f| (f, &["x"][..])),
        f_in(&["x", "z"]).prop_map(|f| (f, &["x", "z"][..])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn dimension_law((f, indep) in graph_strategy(), m in 1u32..=3) {
        let ctx = Context::new();
        let v = graph(&f, indep);
        let dv = krull_dim(&v, Budget::default()).unwrap();
        let t = tau(&v, m, &ctx);
        prop_assert_eq!(krull_dim(&t.ideal(), Budget::default()).unwrap(), (m as usize + 1) * dv);
    }

    #[test]
    fn slices_are_lower_prolongations((f, indep) in graph_strategy(), m in 1u32..=3) {
        let ctx = Context::new();
        let v = graph(&f, indep);
        let top = tau(&v, m, &ctx);
        let lower = tau(&v, m - 1, &ctx);
        prop_assert_eq!(top.slice(m - 1).unwrap().generators().to_vec(), lower.generators());
        let drop = top.ideal().ambient().iter().filter(|x| matches!(x, Variable::Prolong { level, .. } if *level == m)).cloned().collect();
        let proj = eliminate(&top.ideal(), &drop, Budget::default()).unwrap();
        prop_assert!(ideal_equal(&proj, &lower.ideal().with_order(proj.order()), Budget::default()).unwrap());
    }

    /// Replacing `Y_k(v)` by `D^k v` turns the level-k generator into `D^k g`.
    #[test]
    fn derivation_coherence((f, indep) in graph_strategy()) {
        let ctx = Context::new();
        let v = graph(&f, indep);
        let t = tau(&v, 3, &ctx);
        for k in 0..=3u32 {
            let mut bind = BTreeMap::new();
            for x in v.ambient() {
                for l in 1..=3 {
                    bind.insert(level_var(x, l), Poly::var(Variable::sigma_d(&x.to_string(), 0, l)));
                }
            }
            let g = &t.level_generators(k)[0];
            prop_assert_eq!(g.substitute(&bind), apply_d_n(&v.generators()[0], k, &ctx).unwrap());
        }
    }

    /// Ideal elements beyond the generators also pass once the generators do.
    #[test]
    fn generator_check_suffices((f, indep) in graph_strategy(), h in f_in(&["a", "x"])) {
        let ctx = Context::new();
        let v = graph(&f, indep);
        let w = tau(&v, 1, &ctx).ideal();
        prop_assert!(normal_form_check(&w, v.ambient(), 1, &ctx, Budget::default()).unwrap().holds);
        let h: Poly = h.terms().filter(|(m, _)| m.degree() <= 2).map(|(m, c)| Poly::term(c.clone(), m.clone())).fold(Poly::zero(), |a, t| &a + &t);
        let hg = &h * &v.generators()[0];
        let image = total_derivative(&hg, &ctx);
        prop_assert!(w.basis(Budget::default()).unwrap().contains(&image).unwrap());
    }
}

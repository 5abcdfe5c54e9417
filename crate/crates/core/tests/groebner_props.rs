use std::collections::BTreeSet;

use proptest::prelude::*;
use sdforge_core::groebner::{eliminate, ideal_equal, ideal_member, krull_dim};
use sdforge_core::{Budget, CoeffElem, Error, IdealPresentation, Monomial, MonomialOrder, Poly, Variable};

fn vars() -> Vec<Variable> {
    ["x", "y", "z"].iter().map(|n| Variable::base(n)).collect()
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0u32..3, 3)), 1..4).prop_map(|ts| {
        let vs = vars();
        Poly::from_terms(ts.into_iter().filter(|t| t.1.iter().sum::<u32>() <= 2).map(|(c, es)| {
            (Monomial::from_pairs(vs.iter().cloned().zip(es)), CoeffElem::from_int(c))
        }))
    })
}

fn budget() -> Budget {
    Budget::new(200_000)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bases_are_sound(gens in prop::collection::vec(poly(), 1..4), lex in any::<bool>()) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let i = IdealPresentation::new(vars(), gens.clone(), order).unwrap();
        let b = match i.basis(budget()) {
            Err(Error::BudgetExceeded { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        prop_assert!(b.satisfies_buchberger_criterion());
        for g in &gens {
            prop_assert!(b.contains(g).unwrap());
        }
        let other = i.with_order(if lex { MonomialOrder::Grevlex } else { MonomialOrder::Lex });
        match ideal_equal(&i, &other, budget()) {
            Err(Error::BudgetExceeded { .. }) => {}
            r => prop_assert!(r.unwrap()),
        }
    }

    #[test]
    fn elimination_stays_in_ideal(gens in prop::collection::vec(poly(), 1..3)) {
        let i = IdealPresentation::new(vars(), gens, MonomialOrder::Grevlex).unwrap();
        let drop: BTreeSet<Variable> = [Variable::base("x")].into();
        let e = match eliminate(&i, &drop, budget()) {
            Err(Error::BudgetExceeded { .. }) => return Ok(()),
            other => other.unwrap(),
        };
        for p in e.generators() {
            prop_assert!(!p.variables().contains(&Variable::base("x")));
            prop_assert!(ideal_member(&i, p, budget()).unwrap());
        }
    }

    #[test]
    fn hypersurfaces_have_codimension_one(p in poly()) {
        prop_assume!(p.as_constant().is_none());
        let i = IdealPresentation::new(vars(), vec![p], MonomialOrder::Grevlex).unwrap();
        prop_assert_eq!(krull_dim(&i, budget()).unwrap(), 2);
    }
}

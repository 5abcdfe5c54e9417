use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdforge_core::groups::{cyclotomic, log_derivative, onebased_verdict, IntPoly, MultExpr};
use sdforge_core::{CoeffElem, Context, Variable};

type Z = Vec<BigInt>;

fn trim(mut p: Z) -> Z {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn primitive(p: Z) -> Z {
    let g = p.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// `lc(b)^k · a mod b` for the smallest sufficient `k`; `b` trimmed, nonempty.
fn prem(a: &Z, b: &Z) -> Z {
    let mut r = trim(a.clone());
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        r = trim(r);
    }
    r
}

/// Degree of `gcd(a, b)` over ℚ, by a primitive remainder sequence.
fn gcd_degree(a: &Z, b: &Z) -> usize {
    let (mut x, mut y) = (primitive(trim(a.clone())), primitive(trim(b.clone())));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(prem(&x, &y));
        x = y;
        y = r;
    }
    x.len() - 1
}

fn random_poly(rng: &mut impl Rng) -> IntPoly {
    let pieces = [
        IntPoly::from_i64(&[-1, 1]),
        IntPoly::from_i64(&[1, 1]),
        IntPoly::from_i64(&[1, 1, 1]),
        IntPoly::from_i64(&[1, 0, 1]),
        IntPoly::from_i64(&[1, -1, 1]),
        IntPoly::from_i64(&[1, 0, -1, 0, 1]),
    ];
    loop {
        let mut p = IntPoly::one();
        for _ in 0..rng.gen_range(1..=3) {
            let f = if rng.gen_bool(0.4) {
                pieces[rng.gen_range(0..pieces.len())].clone()
            } else {
                let d = rng.gen_range(1..=3);
                let mut cs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-4..=4)).collect();
                if cs[d] == 0 {
                    cs[d] = 1;
                }
                IntPoly::from_i64(&cs)
            };
            p = p.mul(&f);
        }
        if p.degree().is_some_and(|d| d <= 8) {
            return p;
        }
    }
}

#[test]
fn cyclotomic_search_agrees_with_gcd_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut hits = 0;
    for _ in 0..1000 {
        let p = random_poly(&mut rng);
        let v = onebased_verdict(&p).unwrap();
        assert_eq!(v.one_based, v.witnesses.is_empty());
        for (d, q) in v.witnesses.iter().zip(&v.quotients) {
            assert_eq!(cyclotomic(*d as usize).mul(q), p, "witness {d} for {p}");
        }
        let pz: Z = p.coeffs().to_vec();
        let lc = pz.last().unwrap().clone();
        // T^m mod P is r / lc^k
        let mut r: Z = vec![BigInt::one()];
        let mut scale = BigInt::one();
        let mut nontrivial = Vec::new();
        for m in 1..=v.bound + 10 {
            r.insert(0, BigInt::zero());
            if r.len() == pz.len() {
                let top = r.pop().unwrap();
                for c in r.iter_mut() {
                    *c *= &lc;
                }
                for (i, pc) in pz[..pz.len() - 1].iter().enumerate() {
                    r[i] -= &top * pc;
                }
                scale *= &lc;
            }
            let mut shifted = r.clone();
            shifted[0] -= &scale;
            if gcd_degree(&pz, &shifted) > 0 {
                nontrivial.push(m);
            }
        }
        let scan_trivial = nontrivial.iter().all(|&m| m > v.bound);
        assert_eq!(v.one_based, scan_trivial, "{p}");
        assert!(nontrivial.is_empty() || !scan_trivial, "{p}: root of unity beyond the bound");
        hits += usize::from(!v.one_based);
    }
    assert!(hits > 100, "generator too weak: {hits}");
}

fn mult_expr() -> impl Strategy<Value = MultExpr> {
    prop::collection::vec((0usize..4, -3i64..=3), 0..5).prop_map(|fs| {
        let c = CoeffElem::param(sdforge_core::Sym::new("c"));
        fs.into_iter().fold(MultExpr::default(), |acc, (k, e)| {
            let f = match k {
                0 => MultExpr::var(Variable::base("x"), e),
                1 => MultExpr::var(Variable::sigma_d("y", 1, 0), e),
                2 => MultExpr::coeff(c.clone(), e),
                _ => MultExpr::coeff(CoeffElem::from_int(e.abs() + 2), e),
            };
            acc.mul(&f)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn log_derivative_is_a_homomorphism(a in mult_expr(), b in mult_expr()) {
        let mut ctx = Context::new();
        let c = ctx.declare("c").unwrap();
        ctx.set_d_image(c, &CoeffElem::param(c).pow(2) + &CoeffElem::one()).unwrap();
        let la = log_derivative(&a, &ctx).unwrap();
        let lb = log_derivative(&b, &ctx).unwrap();
        prop_assert_eq!(log_derivative(&a.mul(&b), &ctx).unwrap(), la.add(&lb));
    }
}

#[test]
fn int_poly_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..500 {
        let p = random_poly(&mut rng);
        assert_eq!(p.to_string().parse::<IntPoly>().unwrap(), p);
    }
    assert!(BigInt::one() > BigInt::zero());
}

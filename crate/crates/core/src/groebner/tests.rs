use super::*;
use crate::corpus::SplitMix64;
use crate::polyring::scalar::{frac, int};
use crate::polyring::RingContext;

fn ring(names: &[&str]) -> RingContext {
    RingContext::new(names.iter().copied()).unwrap()
}

fn polys(r: &RingContext, ss: &[&str]) -> Vec<Polynomial> {
    ss.iter().map(|s| r.parse(s).unwrap()).collect()
}

#[test]
fn reduce_examples() {
    let r = ring(&["x", "y"]);
    let ord = MonomialOrder::grevlex(2);
    let nf = reduce(&r.parse("x^2").unwrap(), &polys(&r, &["x"]), &ord).unwrap();
    assert!(nf.remainder.is_zero());
    assert_eq!(nf.quotients, polys(&r, &["x"]));
    let nf = reduce(&r.parse("x^2 + y").unwrap(), &polys(&r, &["x"]), &ord).unwrap();
    assert_eq!(nf.remainder, r.parse("y").unwrap());

    // long division oracle: t^2 + 1 = (t - 1)(t + 1) + 2
    let t = ring(&["t"]);
    let nf = reduce(&t.parse("1 + t^2").unwrap(), &polys(&t, &["1 + t"]), &MonomialOrder::lex(1)).unwrap();
    assert_eq!(nf.remainder, t.parse("2").unwrap());
    assert_eq!(nf.quotients, polys(&t, &["t - 1"]));
}

#[test]
fn reduce_rejects_mixed_arity() {
    let p = Polynomial::var(2, 0);
    let err = reduce(&p, &[Polynomial::var(3, 0)], &MonomialOrder::grevlex(2)).unwrap_err();
    assert!(matches!(err, GroebnerError::Poly(PolyError::ArityMismatch { .. })));
}

#[test]
fn buchberger_examples() {
    let r = ring(&["x", "y"]);
    let ord = MonomialOrder::grevlex(2);
    let gb = buchberger(&polys(&r, &["x^2", "x*y"]), &ord).unwrap();
    assert_eq!(gb.basis(), polys(&r, &["x^2", "x*y"]).as_slice());
    // oracle: both S-polynomials by hand. S(x^2, xy) = y*x^2 - x*xy = 0.
    let s = &(&r.parse("y").unwrap() * &r.parse("x^2").unwrap()) - &(&r.parse("x").unwrap() * &r.parse("x*y").unwrap());
    assert!(s.is_zero());
    assert!(gb.audit_s_polynomials() && gb.audit_cofactors() && gb.is_reduced());
    assert_eq!(gb.contains_one(), None);

    let t = ring(&["t"]);
    let gb = buchberger(&polys(&t, &["1 + t", "1 + t^2"]), &MonomialOrder::grevlex(1)).unwrap();
    assert_eq!(gb.basis(), &[Polynomial::one(1)]);
    let u = gb.contains_one().unwrap();
    assert_eq!(u, polys(&t, &["1/2 - 1/2*t", "1/2"]));

    let gb = buchberger(&polys(&r, &["x"]), &ord).unwrap();
    assert_eq!(gb.basis(), polys(&r, &["x"]).as_slice());

    let gb = buchberger(&polys(&r, &["5"]), &ord).unwrap();
    assert_eq!(gb.contains_one().unwrap(), vec![Polynomial::constant(2, frac(1, 5))]);
}

#[test]
fn cofactor_identity_for_unit_ideal() {
    let t = ring(&["t"]);
    let gens = polys(&t, &["1 + t", "1 + t^2"]);
    let u = buchberger(&gens, &MonomialOrder::lex(1)).unwrap().contains_one().unwrap();
    let sum = &(&u[0] * &gens[0]) + &(&u[1] * &gens[1]);
    assert_eq!(sum, Polynomial::one(1));
}

#[test]
fn quotient_basis_examples() {
    let r = ring(&["x", "y"]);
    let ord = MonomialOrder::grevlex(2);
    let gb = buchberger(&polys(&r, &["x^2", "y^2"]), &ord).unwrap();
    let qb = gb.quotient_basis().unwrap();
    assert_eq!(qb, vec![Monomial::new(vec![0, 0]), Monomial::new(vec![0, 1]), Monomial::new(vec![1, 0]), Monomial::new(vec![1, 1])]);
    assert_eq!(buchberger(&polys(&r, &["x^2"]), &ord).unwrap().quotient_basis(), None);
    assert_eq!(buchberger(&polys(&r, &["1"]), &ord).unwrap().quotient_basis(), Some(vec![]));
}

#[test]
fn staircase_size_is_product_of_exponents() {
    let ord = MonomialOrder::grevlex(2);
    for a in 1..=4u32 {
        for b in 1..=4u32 {
            let gens = [Polynomial::term(Monomial::var(2, 0, a), int(1)), Polynomial::term(Monomial::var(2, 1, b), int(1))];
            let gb = buchberger(&gens, &ord).unwrap();
            assert_eq!(gb.quotient_basis().unwrap().len(), (a * b) as usize);
        }
    }
}

#[test]
fn lex_and_grevlex_agree_on_ideal() {
    let r = ring(&["x", "y"]);
    let gens = polys(&r, &["x^2 + y^2 - 1", "x - y"]);
    let lex = buchberger(&gens, &MonomialOrder::lex(2)).unwrap();
    let grl = buchberger(&gens, &MonomialOrder::grevlex(2)).unwrap();
    assert_eq!(lex.basis(), polys(&r, &["x - y", "y^2 - 1/2"]).as_slice());
    for g in grl.basis() {
        assert!(reduce(g, lex.basis(), lex.order()).unwrap().remainder.is_zero());
    }
    for g in lex.basis() {
        assert!(reduce(g, grl.basis(), grl.order()).unwrap().remainder.is_zero());
    }
    assert_eq!(lex.quotient_basis().unwrap().len(), grl.quotient_basis().unwrap().len());
}

#[test]
fn budget_is_enforced() {
    let r = ring(&["x", "y", "z"]);
    let gens = polys(&r, &["x^3 - y*z + 1", "y^3 - x*z - 2", "z^3 - x*y + 3"]);
    let cfg = GroebnerConfig::new(MonomialOrder::grevlex(3)).with_budget(Some(5));
    assert_eq!(buchberger_with(&gens, &cfg).unwrap_err(), GroebnerError::ResourceBudgetExceeded(5));
    assert_eq!(buchberger(&[], &MonomialOrder::grevlex(1)).unwrap_err(), GroebnerError::EmptyInput);
}

#[test]
fn zero_generators_are_ignored() {
    let gb = buchberger(&[Polynomial::zero(2), Polynomial::var(2, 1)], &MonomialOrder::grevlex(2)).unwrap();
    assert_eq!(gb.basis(), &[Polynomial::var(2, 1)]);
    assert!(gb.audit_cofactors());
}

pub(crate) fn random_poly(rng: &mut SplitMix64, n: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    let terms = 1 + rng.below(max_terms as u64) as usize;
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let d = rng.below(max_deg as u64 + 1) as u32;
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.below(n as u64) as usize] += 1;
        }
        let c = rng.range_i64(-3, 3);
        p = &p + &Polynomial::term(Monomial::new(e), int(c));
    }
    p
}

pub(crate) fn random_gens(rng: &mut SplitMix64) -> Vec<Polynomial> {
    let n = 1 + rng.below(3) as usize;
    let m = 1 + rng.below(3) as usize;
    (0..m).map(|_| random_poly(rng, n, 3, 4)).collect()
}

#[test]
fn random_systems_pass_audits() {
    let mut rng = SplitMix64::new(2024);
    for _ in 0..100 {
        let gens = random_gens(&mut rng);
        if gens.iter().all(Polynomial::is_zero) {
            continue;
        }
        let n = gens[0].arity();
        let gb = buchberger(&gens, &MonomialOrder::grevlex(n)).unwrap();
        assert!(gb.audit_s_polynomials(), "{gens:?}");
        assert!(gb.audit_cofactors(), "{gens:?}");
        assert!(gb.is_reduced(), "{gens:?}");
        // every generator is in the ideal
        for g in &gens {
            assert!(reduce(g, gb.basis(), gb.order()).unwrap().remainder.is_zero());
        }
    }
}

#[test]
fn membership_agrees_with_cofactor_reconstruction() {
    let mut rng = SplitMix64::new(77);
    let mut checked = 0;
    while checked < 100 {
        let gens = random_gens(&mut rng);
        if gens.iter().all(Polynomial::is_zero) {
            continue;
        }
        let n = gens[0].arity();
        let gb = buchberger(&gens, &MonomialOrder::grevlex(n)).unwrap();
        let cof = gb.cofactors().unwrap();
        // a member built from the generators, and an arbitrary polynomial
        let mut member = Polynomial::zero(n);
        for g in &gens {
            member = &member + &(&random_poly(&mut rng, n, 2, 3) * g);
        }
        for p in [member, random_poly(&mut rng, n, 3, 4)] {
            let nf = reduce(&p, gb.basis(), gb.order()).unwrap();
            // p - r = Σ_j q_j basis_j = Σ_i (Σ_j q_j cof[j][i]) gens_i
            let mut rebuilt = Polynomial::zero(n);
            for (i, g) in gens.iter().enumerate() {
                let mut u = Polynomial::zero(n);
                for (q, row) in nf.quotients.iter().zip(cof) {
                    u = &u + &(q * &row[i]);
                }
                rebuilt = &rebuilt + &(&u * g);
            }
            assert_eq!(rebuilt, &p - &nf.remainder);
            // idempotence on remainders
            let again = reduce(&nf.remainder, gb.basis(), gb.order()).unwrap();
            assert_eq!(again.remainder, nf.remainder);
            assert!(again.quotients.iter().all(Polynomial::is_zero));
        }
        checked += 1;
    }
}

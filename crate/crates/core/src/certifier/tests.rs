use super::*;
use crate::polyring::scalar::{frac, int};
use crate::polyring::{Monomial, Scalar};

fn sys(exprs: &[&str]) -> SquareSystem {
    let names = ["x", "y", "z"];
    let ring = RingContext::new(names[..exprs.len()].iter().copied()).unwrap();
    SquareSystem::parse(ring, exprs).unwrap()
}

fn cfg() -> CertifierConfig {
    CertifierConfig::default()
}

#[test]
fn construction_rejects_bad_shapes() {
    let ring = RingContext::new(["x", "y"]).unwrap();
    let e = SquareSystem::parse(ring.clone(), &["x", "y", "x+y"]).unwrap_err();
    assert!(matches!(e, CertError::NotSquare { polys: 3, vars: 2 }));
    let e = SquareSystem::parse(ring.clone(), &["x^2 + y", "y"]).unwrap_err();
    assert!(matches!(e, CertError::NotHomogeneous { index: 0 }));
    let e = SquareSystem::parse(ring.clone(), &["x", "3"]).unwrap_err();
    assert!(matches!(e, CertError::DegreeTooLow { index: 1 }));
    let e = SquareSystem::parse(ring, &["x", "0"]).unwrap_err();
    assert!(matches!(e, CertError::DegreeTooLow { index: 1 }));
}

#[test]
fn origin_check_examples() {
    assert!(check_origin_only_zero(&sys(&["x+y", "x^2+y^2"]), &cfg()).unwrap().is_finite());
    assert!(check_origin_only_zero(&sys(&["x", "y"]), &cfg()).unwrap().is_finite());

    let s = sys(&["x^2", "x*y"]);
    match check_origin_only_zero(&s, &cfg()).unwrap() {
        Verdict::RejectedPositiveDimensional(w) => {
            assert_eq!(w.chart, 1);
            assert_eq!(w.basis.basis(), &[Polynomial::var(1, 0)]);
            assert!(w.audit(&s));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn input_errors_fold_into_verdict() {
    let ring = RingContext::new(["x", "y"]).unwrap();
    let v = Verdict::of(ring, vec![Polynomial::var(2, 0)], &cfg()).unwrap();
    assert!(matches!(v, Verdict::InputError(_)));
}

#[test]
fn newton_two_certificate() {
    let s = sys(&["x+y", "x^2+y^2"]);
    let cert = finiteness_certificate(&s, &cfg()).unwrap();
    assert_eq!(cert.c, 3);
    let r = s.ring();
    let t = RingContext::new(["t"]).unwrap();
    assert_eq!(cert.charts[0].cofactors, vec![t.parse("1/2 - 1/2*t").unwrap(), t.parse("1/2").unwrap()]);
    assert_eq!(cert.lifted[0], vec![r.parse("1/2*x^2 - 1/2*x*y").unwrap(), r.parse("1/2*x").unwrap()]);
    assert!(verify_certificate(&s, &cert));
}

#[test]
fn elementary_two_certificate() {
    let s = sys(&["x+y", "x*y"]);
    let cert = finiteness_certificate(&s, &cfg()).unwrap();
    assert_eq!(cert.c, 3);
    let r = s.ring();
    // x^3 = x^2 (x + y) - x (xy)
    assert_eq!(cert.lifted[0], vec![r.parse("x^2").unwrap(), r.parse("-x").unwrap()]);
    assert!(verify_certificate(&s, &cert));
}

#[test]
fn identity_map_certificate() {
    let s = sys(&["x", "y"]);
    let cert = finiteness_certificate(&s, &cfg()).unwrap();
    assert_eq!(cert.c, 2);
    assert!(verify_certificate(&s, &cert));
    let one = sys(&["3*x^2"]);
    let cert = finiteness_certificate(&one, &cfg()).unwrap();
    assert_eq!(cert.c, 3);
    assert_eq!(cert.lifted[0], vec![Polynomial::var(1, 0).scale(&frac(1, 3))]);
}

#[test]
fn certificate_refuses_positive_dimensional() {
    let e = finiteness_certificate(&sys(&["x^2", "x*y"]), &cfg()).unwrap_err();
    assert!(matches!(e, CertError::NotFinite(w) if w.chart == 1));
}

#[test]
fn tampering_is_detected() {
    let s = sys(&["x+y", "x^2+y^2"]);
    let cert = finiteness_certificate(&s, &cfg()).unwrap();

    let mut bad = cert.clone();
    bad.lifted[0][1] = Polynomial::var(2, 0);
    assert!(!verify_certificate(&s, &bad));

    let mut bad = cert.clone();
    bad.c = 2;
    assert!(!verify_certificate(&s, &bad));

    let mut bad = cert.clone();
    bad.charts[0].degrees[0] = Degree::Finite(3);
    assert!(!verify_certificate(&s, &bad));

    let mut bad = cert.clone();
    bad.charts[1].cofactors[1] = bad.charts[1].cofactors[1].scale(&int(2));
    assert!(!verify_certificate(&s, &bad));

    // a valid-looking larger c is still rejected: lifts would have the wrong degree
    let mut bad = cert;
    bad.c = 4;
    assert!(!verify_certificate(&s, &bad));
}

#[test]
fn rewrite_examples() {
    let s = sys(&["x+y", "x^2+y^2"]);
    let cert = finiteness_certificate(&s, &cfg()).unwrap();
    let mut rw = Rewriter::new(&s, &cert).unwrap();
    assert_eq!(rw.generators().len(), 9);

    let r = rw.rewrite(&Monomial::new(vec![1, 1])).unwrap();
    assert_eq!(r.terms.len(), 1);
    assert_eq!(r.terms[&Monomial::new(vec![1, 1])], Polynomial::one(2));

    let r = rw.rewrite(&Monomial::new(vec![3, 0])).unwrap();
    let p = RingContext::new(["p1", "p2"]).unwrap();
    assert_eq!(r.terms.len(), 3);
    assert_eq!(r.terms[&Monomial::new(vec![2, 0])], p.parse("1/2*p1").unwrap());
    assert_eq!(r.terms[&Monomial::new(vec![1, 1])], p.parse("-1/2*p1").unwrap());
    assert_eq!(r.terms[&Monomial::new(vec![1, 0])], p.parse("1/2*p2").unwrap());

    let r = rw.rewrite(&Monomial::new(vec![6, 0])).unwrap();
    assert!(r.check(&s).unwrap());
    assert!(r.terms.keys().all(|m| rw.generators().contains(m)));
}

#[test]
fn rewrite_rejects_invalid_certificate() {
    let s = sys(&["x+y", "x^2+y^2"]);
    let mut cert = finiteness_certificate(&s, &cfg()).unwrap();
    cert.c = 5;
    assert!(matches!(
        rewrite_monomial(&s, &cert, &Monomial::new(vec![5, 0])),
        Err(CertError::CertificateInvalid(_))
    ));
}

#[test]
fn fiber_examples() {
    let e2 = sys(&["x+y", "x*y"]);
    assert_eq!(fiber_dimension(&e2, &[int(1), int(-6)], &cfg()).unwrap(), FiberLength::Length(2));
    let n2 = sys(&["x+y", "x^2+y^2"]);
    assert_eq!(fiber_dimension(&n2, &[int(0), int(0)], &cfg()).unwrap(), FiberLength::Length(2));
    let bad = sys(&["x^2", "x*y"]);
    assert_eq!(fiber_dimension(&bad, &[int(0), int(0)], &cfg()).unwrap(), FiberLength::PositiveDimensional);
    assert!(fiber_dimension(&bad, &[int(0)], &cfg()).is_err());
}

#[test]
fn generator_set_enumeration() {
    let g = GeneratorSet { c: 3, arity: 2 };
    let all: Vec<Monomial> = g.iter().collect();
    assert_eq!(all.len(), 9);
    assert!(all.iter().all(|m| g.contains(m)));
    assert!(!g.contains(&Monomial::new(vec![3, 0])));
}

#[test]
fn certificate_json_round_trip_is_bit_exact() {
    for exprs in [&["x+y", "x^2+y^2"][..], &["x+y", "x*y"], &["x", "y"], &["2*x^3"]] {
        let s = sys(exprs);
        let cert = finiteness_certificate(&s, &cfg()).unwrap();
        let file = serial::CertificateFile::new(&s, cert);
        let json = file.to_json();
        let back = serial::CertificateFile::from_json(&json).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_json(), json);
        back.verify_against(&s).unwrap();
    }
}

#[test]
fn certificate_for_another_system_fails_hash_check() {
    let s = sys(&["x+y", "x*y"]);
    let file = serial::CertificateFile::new(&s, finiteness_certificate(&s, &cfg()).unwrap());
    let other = sys(&["x+y", "x*y + y^2"]);
    assert!(matches!(file.verify_against(&other), Err(CertError::CertificateInvalid(m)) if m.contains("hash")));
}

#[test]
fn hash_binds_to_system() {
    let a = serial::system_hash(&sys(&["x+y", "x^2+y^2"]));
    let b = serial::system_hash(&sys(&["x+y", "x^2+2*y^2"]));
    assert_ne!(a, b);
    assert_eq!(serial::canonical_system_text(&sys(&["x+y", "x^2+y^2"])), "n=2\n1,0:1/1;0,1:1/1\n2,0:1/1;0,2:1/1\n");
    assert!(a.starts_with("fnv1a64:"));
    // FNV-1a reference value for the empty input
    assert_eq!(serial::fnv1a64(b""), 0xcbf29ce484222325);
    assert_eq!(serial::fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
}

#[test]
fn malformed_documents_are_rejected() {
    let s = sys(&["x+y", "x*y"]);
    let json = serial::CertificateFile::new(&s, finiteness_certificate(&s, &cfg()).unwrap()).to_json();
    for (from, to) in [("\"1/1\"", "\"2/2\""), ("\"format\"", "\"fmt\""), ("\"chart\": 1", "\"chart\": 0")] {
        let bad = json.replacen(from, to, 1);
        assert!(matches!(serial::CertificateFile::from_json(&bad), Err(CertError::Malformed(_))), "{from}");
    }
    assert!(serial::CertificateFile::from_json("{").is_err());
}

#[test]
fn scaling_symmetry_on_fiber_points() {
    // P_1 = x + y vanishes on (1, -1); P_2 = x^2 + y^2 scales by ξ^2.
    let s = sys(&["x+y", "x^2+y^2"]);
    let pt = [int(1), int(-1)];
    for xi in [int(-1), int(2), frac(-3, 7)] {
        let scaled: Vec<Scalar> = pt.iter().map(|v| v * &xi).collect();
        assert_eq!(s.polys()[0].evaluate(&scaled).unwrap(), int(0));
        assert_eq!(
            s.polys()[1].evaluate(&scaled).unwrap(),
            &xi * &xi * s.polys()[1].evaluate(&pt).unwrap()
        );
    }
}

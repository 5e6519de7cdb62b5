//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use finicert_core::certifier::serial::CertificateFile;
use finicert_core::certifier::{
    check_origin_only_zero, fiber_dimension, finiteness_certificate, verify_certificate, CertifierConfig, FiberLength,
    Rewriter, SquareSystem, Verdict,
};
use finicert_core::corpus::{self, monomials_of_degree, SplitMix64};
use finicert_core::groebner::{buchberger_with, reduce, GroebnerConfig, MonomialOrder, OrderKind};
use finicert_core::liealg::{isotropy_duality_check, parabolic_perp, LieAlgebraSpec, ParabolicSpec};
use finicert_core::linalg::same_span;
use finicert_core::polyring::{scalar, Monomial, Polynomial, RingContext, Scalar};
use serde_json::Value;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> CertifierConfig {
    CertifierConfig::default()
}

fn finite_corpus() -> Vec<(String, SquareSystem)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("newton-{n}"), corpus::newton_system(n)));
        out.push((format!("elementary-{n}"), corpus::elementary_symmetric_system(n)));
    }
    out
}

fn criterion_1() -> Check {
    for (name, sys) in finite_corpus() {
        let cert = finiteness_certificate(&sys, &cfg()).map_err(|e| format!("{name}: {e}"))?;
        ensure(verify_certificate(&sys, &cert), || format!("{name}: verifier rejected"))?;
        // the stored document goes through the independent verifier too
        let file = CertificateFile::new(&sys, cert.clone());
        let back = CertificateFile::from_json(&file.to_json()).map_err(|e| format!("{name}: {e}"))?;
        back.verify_against(&sys).map_err(|e| format!("{name}: {e}"))?;
        if sys.arity() == 2 {
            ensure(cert.c == 3, || format!("{name}: c = {}, expected 3", cert.c))?;
        }
    }
    let r = RingContext::new(["x", "y"]).unwrap();
    let p = |s: &str| r.parse(s).unwrap();
    let x3 = p("x^3");
    let newton = p("1/2*x*(x - y)") * p("x + y") + p("1/2*x") * p("x^2 + y^2");
    ensure(newton == x3, || format!("Newton identity expands to {}", r.format(&newton)))?;
    let elem = p("x^2") * p("x + y") - p("x") * p("x*y");
    ensure(elem == x3, || format!("elementary identity expands to {}", r.format(&elem)))?;
    // and these are the lifts the certifier itself produced for chart 1
    let n2 = finiteness_certificate(&corpus::newton_system(2), &cfg()).unwrap();
    ensure(n2.lifted[0] == vec![p("1/2*x*(x - y)"), p("1/2*x")], || "Newton n=2 lifts differ".into())?;
    let e2 = finiteness_certificate(&corpus::elementary_symmetric_system(2), &cfg()).unwrap();
    ensure(e2.lifted[0] == vec![p("x^2"), p("-x")], || "elementary n=2 lifts differ".into())?;
    Ok("6 systems certified and verified; c = 3 for n = 2; both x^3 identities expand exactly".into())
}

fn criterion_2() -> Check {
    let suite = corpus::rejection_suite();
    for entry in &suite {
        let sys = entry.system().map_err(|e| e.to_string())?;
        match check_origin_only_zero(&sys, &cfg()).map_err(|e| e.to_string())? {
            Verdict::RejectedPositiveDimensional(w) => {
                let proper = !w.basis.basis().is_empty() && w.basis.basis().iter().all(|g| !g.is_constant());
                ensure(proper, || format!("{}: witness basis is not proper", entry.name))?;
                ensure(w.audit(&sys), || format!("{}: witness audit failed", entry.name))?;
            }
            other => return Err(format!("{}: {other:?}", entry.name)),
        }
    }
    Ok(format!("{} systems rejected with audited witnesses", suite.len()))
}

fn criterion_3() -> Check {
    let mut total = 0;
    for (name, sys) in finite_corpus() {
        let max_deg = match sys.arity() {
            2 => 12,
            3 => 8,
            _ => continue,
        };
        let cert = finiteness_certificate(&sys, &cfg()).map_err(|e| format!("{name}: {e}"))?;
        let mut rw = Rewriter::new(&sys, &cert).map_err(|e| format!("{name}: {e}"))?;
        let mut count = 0;
        for d in 0..=max_deg {
            for alpha in monomials_of_degree(sys.arity(), d) {
                let r = rw.rewrite(&alpha).map_err(|e| format!("{name} {alpha:?}: {e}"))?;
                ensure(r.terms.keys().all(|s| rw.generators().contains(s)), || format!("{name}: term outside generators"))?;
                count += 1;
            }
        }
        if sys.arity() == 2 {
            ensure(count >= 90, || format!("{name}: only {count} monomials"))?;
        }
        total += count;
    }
    Ok(format!("{total} rewrites passed the substitution check (n=2 to degree 12, n=3 to degree 8)"))
}

fn criterion_4() -> Check {
    let mut rng = SplitMix64::new(4);
    let mut checked = 0;
    for (name, sys) in finite_corpus() {
        let n = sys.arity();
        let expected = FiberLength::Length(sys.degree_product() as usize);
        let mut targets = vec![vec![scalar::int(0); n]];
        for _ in 0..20 {
            targets.push((0..n).map(|_| scalar::frac(rng.range_i64(-9, 9), rng.range_i64(1, 5))).collect());
        }
        for t in &targets {
            let got = fiber_dimension(&sys, t, &cfg()).map_err(|e| format!("{name}: {e}"))?;
            ensure(got == expected, || format!("{name} at {t:?}: {got}, expected {expected}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} fibers have length equal to the degree product"))
}

fn criterion_5() -> Check {
    let mut rng = SplitMix64::new(5);
    let mut nilpotent = 0;
    for name in ["sl2", "sl3"] {
        let g = LieAlgebraSpec::by_name(name).unwrap();
        for _ in 0..1000 {
            let x = g.random_element(&mut rng, 3);
            if g.is_nilpotent(&x).map_err(|e| format!("{name}: {e}"))? {
                nilpotent += 1;
            }
        }
        for _ in 0..100 {
            let x = g.random_nilpotent(&mut rng);
            let routes = g.nilpotency_routes(&x).map_err(|e| e.to_string())?;
            ensure(routes == (true, true), || format!("{name}: constructed nilpotent {x:?} gave {routes:?}"))?;
        }
    }
    Ok(format!("2 x (1000 random + 100 constructed), 0 disagreements; {nilpotent} random samples were nilpotent"))
}

fn criterion_6() -> Check {
    let cases = [(LieAlgebraSpec::sl(2), ParabolicSpec::borel_sl2()), (LieAlgebraSpec::sl(3), ParabolicSpec::new(3, 1).unwrap()), (LieAlgebraSpec::sl(3), ParabolicSpec::new(3, 2).unwrap())];
    for (g, p) in &cases {
        let label = format!("{} {:?}", g.name(), p.blocks());
        let perp = parabolic_perp(g, p).map_err(|e| format!("{label}: {e}"))?;
        let nil: Vec<Vec<Scalar>> = p.nilradical_indices(g).unwrap().iter().map(|&i| g.basis_vector(i)).collect();
        ensure(same_span(&perp, &nil), || format!("{label}: perp is not the nilradical"))?;
        ensure(perp.len() == p.codim(), || format!("{label}: dim perp = {}", perp.len()))?;
        ensure(isotropy_duality_check(g, p) == Ok(true), || format!("{label}: pairing degenerate"))?;
    }
    Ok("sl2 Borel, sl3 (1,2) and (2,1): perp = nilradical, pairing nondegenerate".into())
}

fn criterion_7() -> Check {
    let mut count = 0;
    for name in LieAlgebraSpec::names() {
        let g = LieAlgebraSpec::by_name(name).unwrap();
        let max_k = if g.trace_invariants().is_some() { g.dim() as u32 } else { 4 };
        for k in 1..=max_k {
            ensure(g.trace_invariant(k).grading_check(k), || format!("{name}: Tr(ad^{k}) not graded"))?;
            count += 1;
        }
        for (i, p) in g.char_poly_invariants().iter().enumerate() {
            let d = i as u32 + 2;
            ensure(p.grading_check(d), || format!("{name}: char-poly invariant of degree {d} not graded"))?;
            count += 1;
        }
    }
    let mut polys: Vec<(String, Polynomial)> = Vec::new();
    for e in corpus::all_entries() {
        polys.extend(e.polys.iter().map(|p| (e.name.clone(), p.clone())));
    }
    for seed in 0..50 {
        let s = corpus::random_system(2, &[2, 2], seed).unwrap();
        polys.extend(s.polys().iter().map(|p| (format!("random seed {seed}"), p.clone())));
    }
    for (name, p) in &polys {
        let d = p.degree().finite().ok_or_else(|| format!("{name}: zero polynomial"))?;
        ensure(p.grading_check(d), || format!("{name}: not graded"))?;
        count += 1;
    }
    Ok(format!("{count} polynomials pass the grading check"))
}

fn random_gens(rng: &mut SplitMix64) -> (usize, Vec<Polynomial>) {
    let n = 1 + rng.below(3) as usize;
    let count = 1 + rng.below(3) as usize;
    let gens = (0..count)
        .map(|_| {
            let terms = 1 + rng.below(4) as usize;
            let mut p = Polynomial::zero(n);
            for _ in 0..terms {
                let mut e = vec![0u32; n];
                let deg = rng.below(4) as u32;
                for _ in 0..deg {
                    e[rng.below(n as u64) as usize] += 1;
                }
                let c = scalar::int(rng.range_i64(-3, 3));
                p = &p + &Polynomial::term(Monomial::new(e), c);
            }
            p
        })
        .collect();
    (n, gens)
}

fn criterion_8() -> Check {
    let mut rng = SplitMix64::new(8);
    for case in 0..100 {
        let (n, gens) = random_gens(&mut rng);
        let kind = if case % 2 == 0 { OrderKind::Grevlex } else { OrderKind::Lex };
        let order = MonomialOrder::of_kind(kind, n);
        let gb = match buchberger_with(&gens, &GroebnerConfig::new(order.clone())) {
            Ok(gb) => gb,
            Err(e) => return Err(format!("case {case}: {e}")),
        };
        ensure(gb.audit_s_polynomials(), || format!("case {case}: S-polynomial audit failed"))?;
        ensure(gb.audit_cofactors(), || format!("case {case}: cofactor audit failed"))?;
        let (_, probe) = random_gens(&mut rng);
        for p in probe.iter().filter(|p| p.arity() == n) {
            let r = reduce(p, gb.basis(), &order).unwrap().remainder;
            let again = reduce(&r, gb.basis(), &order).unwrap();
            ensure(again.remainder == r && again.quotients.iter().all(Polynomial::is_zero), || {
                format!("case {case}: reduce not idempotent")
            })?;
        }
    }
    Ok("100 random systems pass both audits; reduce is idempotent on remainders".into())
}

fn mutate(doc: &mut Value, rng: &mut SplitMix64) -> String {
    let charts = doc["charts"].as_array().unwrap().len();
    let chart = rng.below(charts as u64) as usize;
    match rng.below(3) {
        0 => {
            let c = doc["c"].as_u64().unwrap();
            let new = if rng.below(2) == 0 || c <= 1 { c + 1 } else { c - 1 };
            doc["c"] = Value::from(new);
            format!("c {c} -> {new}")
        }
        1 => {
            let degs = doc["charts"][chart]["cofactor_degrees"].as_array_mut().unwrap();
            let i = rng.below(degs.len() as u64) as usize;
            let old = degs[i].clone();
            degs[i] = match old.as_u64() {
                Some(d) => Value::from(d + 1 + rng.below(2)),
                None => Value::from(0u64),
            };
            format!("chart {} cofactor degree {i}: {old} -> {}", chart + 1, degs[i])
        }
        _ => {
            let field = if rng.below(2) == 0 { "cofactors" } else { "lifted" };
            let polys = doc["charts"][chart][field].as_array_mut().unwrap();
            let nonempty: Vec<usize> = (0..polys.len()).filter(|&i| !polys[i].as_array().unwrap().is_empty()).collect();
            let pi = nonempty[rng.below(nonempty.len() as u64) as usize];
            let terms = polys[pi].as_array_mut().unwrap();
            let ti = rng.below(terms.len() as u64) as usize;
            let old = scalar::parse_canonical(terms[ti][1].as_str().unwrap()).unwrap();
            let mut new = &old + scalar::int(1 + rng.below(3) as i64);
            if num_traits::Zero::is_zero(&new) {
                new = &old + scalar::int(5);
            }
            terms[ti][1] = Value::from(scalar::to_canonical(&new));
            format!("chart {} {field}[{pi}] term {ti}: {} -> {}", chart + 1, scalar::to_display(&old), scalar::to_display(&new))
        }
    }
}

fn criterion_9() -> Check {
    let bin = env!("CARGO_BIN_EXE_finicert");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |args: &[&Path]| Command::new(bin).arg("verify").args(args).output().map_err(|e| e.to_string());
    let systems: Vec<(String, SquareSystem)> = finite_corpus().into_iter().filter(|(_, s)| s.arity() >= 2).collect();
    let mut docs = Vec::new();
    for (name, sys) in &systems {
        let sys_path = dir.path().join(format!("{name}.sys"));
        let text = corpus::entry_by_name(name).unwrap().to_system_file();
        std::fs::write(&sys_path, text).map_err(|e| e.to_string())?;
        let json = CertificateFile::new(sys, finiteness_certificate(sys, &cfg()).unwrap()).to_json();
        let cert_path = dir.path().join(format!("{name}.json"));
        std::fs::write(&cert_path, &json).map_err(|e| e.to_string())?;
        let out = run(&[&sys_path, &cert_path])?;
        ensure(out.status.code() == Some(0), || format!("{name}: unmutated certificate rejected"))?;
        docs.push((sys_path, serde_json::from_str::<Value>(&json).unwrap()));
    }
    let mut rng = SplitMix64::new(2024);
    let mut caught = 0;
    for i in 0..50 {
        let (sys_path, doc) = &docs[i % docs.len()];
        let mut doc = doc.clone();
        let what = mutate(&mut doc, &mut rng);
        let path = dir.path().join(format!("mut{i}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap()).map_err(|e| e.to_string())?;
        let out = run(&[sys_path, &path])?;
        ensure(out.status.code() == Some(1), || {
            format!("mutation {i} ({what}) exited with {:?}", out.status.code())
        })?;
        caught += 1;
    }
    Ok(format!("{caught}/50 mutations rejected by `finicert verify` (exit 1)"))
}

type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn main() {
    let criteria: [Criterion; 9] = [
        ("certify newton/elementary n=1..3", criterion_1, Some(Duration::from_secs(10))),
        ("reject positive-dimensional systems", criterion_2, Some(Duration::from_secs(5))),
        ("integrality witness rewrites", criterion_3, None),
        ("constant fiber length", criterion_4, None),
        ("nilpotent-cone route agreement", criterion_5, None),
        ("parabolic perp and Killing duality", criterion_6, None),
        ("grading of invariants and corpus", criterion_7, None),
        ("Groebner engine audits", criterion_8, None),
        ("tamper detection", criterion_9, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = f();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&result, limit) {
            if elapsed > *limit {
                result = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

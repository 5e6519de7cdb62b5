use num_traits::Zero;

use crate::corpus::SplitMix64;
use crate::polyring::Scalar;

use super::algebras::preserved_form;
use super::{isotropy_duality_check, parabolic_perp, AlgebraKind, LieAlgebraSpec, ParabolicSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    pub seed: u64,
    pub random_elements: usize,
    pub nilpotents: usize,
    pub killing_triples: usize,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { seed: 0, random_elements: 1000, nilpotents: 100, killing_triples: 100 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn line(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> AuditLine {
    AuditLine { name: name.into(), passed, detail: detail.into() }
}

/// Runs the invariant suite on one algebra; one line per property.
pub fn audit_suite(g: &LieAlgebraSpec, opts: &AuditOptions) -> Vec<AuditLine> {
    let dim = g.dim();
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(opts.seed);

    let antisym = (0..dim).all(|i| {
        (0..dim).all(|j| {
            g.structure_constants(i, j).iter().zip(g.structure_constants(j, i)).all(|(a, b)| (a + b).is_zero())
        })
    });
    out.push(line("antisymmetry", antisym, format!("{dim}x{dim} basis pairs")));

    let mut jacobi = true;
    'outer: for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let (x, y, z) = (g.basis_vector(i), g.basis_vector(j), g.basis_vector(k));
                let t1 = g.bracket(&x, &g.bracket(&y, &z).unwrap()).unwrap();
                let t2 = g.bracket(&y, &g.bracket(&z, &x).unwrap()).unwrap();
                let t3 = g.bracket(&z, &g.bracket(&x, &y).unwrap()).unwrap();
                if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                    jacobi = false;
                    break 'outer;
                }
            }
        }
    }
    out.push(line("jacobi", jacobi, format!("{} basis triples", dim * dim * dim)));

    if let Some(j) = preserved_form(g.kind()) {
        let ok = g.basis_matrices().iter().all(|b| (&(&b.transpose() * &j) + &(&j * b)).is_zero());
        out.push(line("realization preserves form", ok, "X^T J + J X = 0 on the basis"));
    }

    let killing = g.killing_form();
    let symmetric = killing == killing.transpose();
    let det = killing.determinant();
    out.push(line("killing nondegenerate", symmetric && !det.is_zero(), format!("det = {det}")));

    let mut invariance = true;
    for _ in 0..opts.killing_triples {
        let x = g.random_element(&mut rng, 3);
        let y = g.random_element(&mut rng, 3);
        let z = g.random_element(&mut rng, 3);
        let lhs = g.killing(&g.bracket(&x, &y).unwrap(), &z).unwrap() + g.killing(&y, &g.bracket(&x, &z).unwrap()).unwrap();
        if !lhs.is_zero() {
            invariance = false;
            break;
        }
    }
    out.push(line("killing invariance", invariance, format!("{} random triples", opts.killing_triples)));

    let max_k = if g.trace_invariants().is_some() { dim as u32 } else { 4 };
    let graded = (1..=max_k).all(|k| g.trace_invariant(k).grading_check(k));
    out.push(line("trace invariants graded", graded, format!("k = 1..{max_k}")));

    let cp = g.char_poly_invariants();
    let graded = cp.iter().enumerate().all(|(i, p)| p.grading_check(i as u32 + 2));
    out.push(line("char-poly invariants graded", graded, format!("degrees 2..{}", cp.len() + 1)));

    let mut disagreements = 0usize;
    let mut errors = 0usize;
    for _ in 0..opts.random_elements {
        match g.nilpotency_routes(&g.random_element(&mut rng, 3)) {
            Ok((a, b)) if a != b => disagreements += 1,
            Ok(_) => {}
            Err(_) => errors += 1,
        }
    }
    let mut missed = 0usize;
    for _ in 0..opts.nilpotents {
        match g.nilpotency_routes(&g.random_nilpotent(&mut rng)) {
            Ok((true, true)) => {}
            Ok((a, b)) if a != b => disagreements += 1,
            _ => missed += 1,
        }
    }
    out.push(line(
        "nilpotency routes agree",
        disagreements == 0 && errors == 0 && missed == 0,
        format!(
            "{} random + {} conjugated nilpotents; {disagreements} disagreements, {missed} constructed nilpotents not detected",
            opts.random_elements, opts.nilpotents
        ),
    ));

    if let AlgebraKind::Sl(n) = g.kind() {
        for p in ParabolicSpec::all(n) {
            let (a, b) = p.blocks();
            let name = format!("parabolic ({a},{b})");
            let sub = p.is_subalgebra(g).unwrap_or(false);
            let codim = p.parabolic_indices(g).map(|idx| dim - idx.len() == p.codim()).unwrap_or(false);
            let perp = parabolic_perp(g, &p);
            let dual = isotropy_duality_check(g, &p);
            let ok = sub && codim && perp.is_ok() && dual == Ok(true);
            let detail = match (&perp, &dual) {
                (Err(e), _) | (_, Err(e)) => e.to_string(),
                (Ok(v), Ok(d)) => format!("perp = nilradical, dim {}; pairing nondegenerate: {d}", v.len()),
            };
            out.push(line(name, ok, detail));
        }
    }
    out
}

/// Ratio `p(x) / q(x)` over samples where `q(x) ≠ 0`; `None` if it varies.
pub fn stable_ratio(samples: impl Iterator<Item = (Scalar, Scalar)>) -> Option<Scalar> {
    let mut ratio: Option<Scalar> = None;
    for (p, q) in samples {
        if q.is_zero() {
            if !p.is_zero() {
                return None;
            }
            continue;
        }
        let r = p / q;
        match &ratio {
            None => ratio = Some(r),
            Some(prev) if *prev != r => return None,
            _ => {}
        }
    }
    ratio
}

use crate::polyring::{Degree, Monomial, Polynomial};

use super::{chart_bases, CertError, CertifierConfig, RejectionWitness, SquareSystem};

/// Cofactors of one chart: `Σ_i U_i^k · P_i^k = 1` in the chart variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartCertificate {
    /// 0-based chart index `k`.
    pub chart: usize,
    pub cofactors: Vec<Polynomial>,
    /// `deg U_i^k`, the data the bound `c` is checked against.
    pub degrees: Vec<Degree>,
}

/// The bound `c`, the chart cofactors and their lifts with
/// `X_k^c = Σ_i lifted[k][i] · P_i` for every `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessCertificate {
    pub c: u32,
    pub charts: Vec<ChartCertificate>,
    pub lifted: Vec<Vec<Polynomial>>,
}

/// Builds the certificate and verifies it before returning.
pub fn finiteness_certificate(sys: &SquareSystem, config: &CertifierConfig) -> Result<FinitenessCertificate, CertError> {
    let n = sys.arity();
    let bases = chart_bases(sys, config, true)?;
    let mut charts = Vec::with_capacity(n);
    for (chart, basis) in bases.into_iter().enumerate() {
        let Some(cofactors) = basis.contains_one() else {
            return Err(CertError::NotFinite(Box::new(RejectionWitness { chart, basis })));
        };
        let degrees = cofactors.iter().map(Polynomial::degree).collect();
        charts.push(ChartCertificate { chart, cofactors, degrees });
    }

    // smallest c with c > d_i + e_ik over all nonzero cofactors
    let c = charts
        .iter()
        .flat_map(|ch| ch.degrees.iter().zip(sys.degrees()).filter_map(|(e, d)| e.finite().map(|e| d + e)))
        .max()
        .map_or(1, |m| m + 1);

    let mut lifted = Vec::with_capacity(n);
    for ch in &charts {
        let row = ch
            .cofactors
            .iter()
            .zip(sys.degrees())
            .map(|(u, &d)| match u.degree() {
                Degree::NegInfinity => Ok(Polynomial::zero(n)),
                Degree::Finite(e) => {
                    let h = u.homogenize(ch.chart, e)?;
                    let pad = Monomial::var(n, ch.chart, c - d - e);
                    Ok(h.mul_term(&pad, &num_traits::One::one()))
                }
            })
            .collect::<Result<Vec<_>, CertError>>()?;
        lifted.push(row);
    }

    let cert = FinitenessCertificate { c, charts, lifted };
    verify_detailed(sys, &cert)?;
    Ok(cert)
}

pub fn verify_certificate(sys: &SquareSystem, cert: &FinitenessCertificate) -> bool {
    verify_detailed(sys, cert).is_ok()
}

/// Re-expands every identity and degree constraint. Uses only polynomial
/// arithmetic and dehomogenization, never the construction path.
pub fn verify_detailed(sys: &SquareSystem, cert: &FinitenessCertificate) -> Result<(), CertError> {
    let fail = |msg: String| Err(CertError::CertificateInvalid(msg));
    let n = sys.arity();
    let c = cert.c;
    if c == 0 {
        return fail("bound c must be positive".into());
    }
    if cert.charts.len() != n || cert.lifted.len() != n {
        return fail(format!("expected {n} charts"));
    }
    for (k, (ch, lifted)) in cert.charts.iter().zip(&cert.lifted).enumerate() {
        let label = k + 1;
        if ch.chart != k {
            return fail(format!("chart {label} is labelled {}", ch.chart + 1));
        }
        if ch.cofactors.len() != n || ch.degrees.len() != n || lifted.len() != n {
            return fail(format!("chart {label}: expected {n} cofactors"));
        }
        if ch.cofactors.iter().any(|u| u.arity() != n - 1) || lifted.iter().any(|u| u.arity() != n) {
            return fail(format!("chart {label}: cofactor in the wrong ring"));
        }
        // chart identity Σ U_i^k P_i^k = 1
        let mut sum = Polynomial::zero(n - 1);
        for (u, p) in ch.cofactors.iter().zip(sys.polys()) {
            sum = &sum + &(u * &p.dehomogenize_chart(k)?);
        }
        if sum != Polynomial::one(n - 1) {
            return fail(format!("chart {label}: cofactors do not sum to 1"));
        }
        for (i, ((u, e), d)) in ch.cofactors.iter().zip(&ch.degrees).zip(sys.degrees()).enumerate() {
            let idx = i + 1;
            if u.degree() != *e {
                return fail(format!("chart {label}: recorded degree of U_{idx} is {e}, actual {}", u.degree()));
            }
            if let Degree::Finite(e) = e {
                if c <= d + e {
                    return fail(format!("chart {label}: c = {c} does not exceed d_{idx} + e = {}", d + e));
                }
            }
            let lift = &lifted[i];
            let expected = if u.is_zero() { Degree::NegInfinity } else { Degree::Finite(c - d) };
            if lift.is_homogeneous() != Some(expected) {
                return fail(format!("chart {label}: lifted cofactor {idx} is not homogeneous of degree c - d_{idx}"));
            }
            if lift.dehomogenize_chart(k)? != *u {
                return fail(format!("chart {label}: lifted cofactor {idx} does not restrict to U_{idx}"));
            }
        }
        // lifted identity X_k^c = Σ Ũ_i^k P_i
        let mut sum = Polynomial::zero(n);
        for (u, p) in lifted.iter().zip(sys.polys()) {
            sum = &sum + &(u * p);
        }
        if sum != Polynomial::var(n, k).pow(c) {
            return fail(format!("chart {label}: lifted cofactors do not reproduce X_{label}^{c}"));
        }
    }
    Ok(())
}

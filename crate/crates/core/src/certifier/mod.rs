//! Finiteness certificates for square homogeneous polynomial maps.
//!
//! For `f = (P_1, …, P_n)` with each `P_i` homogeneous of degree `d_i ≥ 1`,
//! the pipeline is:
//!
//! 1. For each chart `k` dehomogenize (`X_k := 1`) and run Buchberger on the
//!    chart system. The zero fiber is the origin alone iff every chart ideal is
//!    the unit ideal; a proper chart ideal is returned as a rejection witness.
//! 2. From the chart cofactors `Σ_i U_i^k P_i^k = 1` pick the smallest
//!    `c > d_i + deg U_i^k` and lift to `X_k^c = Σ_i Ũ_i^k P_i` with
//!    `Ũ_i^k = X_k^(c - d_i - e) · homogenize(U_i^k, e)`, `e = deg U_i^k`.
//! 3. The monomials with every exponent below `c` then generate
//!    `Q[X_1..X_n]` as a module over `Q[P_1..P_n]`; [`Rewriter`] produces
//!    the explicit expression of any monomial.

mod certificate;
mod fiber;
mod rewrite;
pub mod serial;

use thiserror::Error;

pub use certificate::{finiteness_certificate, verify_certificate, verify_detailed, ChartCertificate, FinitenessCertificate};
pub use fiber::{fiber_dimension, FiberLength};
pub use rewrite::{rewrite_monomial, GeneratorSet, RewriteResult, Rewriter};

use crate::groebner::{buchberger_with, GroebnerBasis, GroebnerConfig, GroebnerError, MonomialOrder, OrderKind, DEFAULT_BUDGET};
use crate::polyring::{Degree, PolyError, Polynomial, RingContext};

#[derive(Debug, Clone, Error)]
pub enum CertError {
    #[error("expected as many polynomials as variables, got {polys} polynomials in {vars} variables")]
    NotSquare { polys: usize, vars: usize },
    #[error("polynomial {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("polynomial {index} must be homogeneous of degree at least 1")]
    DegreeTooLow { index: usize },
    #[error("zero fiber is positive dimensional (chart {} ideal is proper)", .0.chart + 1)]
    NotFinite(Box<RejectionWitness>),
    #[error("step budget of {0} exceeded")]
    ResourceBudgetExceeded(u64),
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<GroebnerError> for CertError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::ResourceBudgetExceeded(b) => CertError::ResourceBudgetExceeded(b),
            GroebnerError::Poly(p) => CertError::Poly(p),
            GroebnerError::EmptyInput => CertError::NotSquare { polys: 0, vars: 0 },
        }
    }
}

/// `n` homogeneous polynomials of positive degree in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareSystem {
    ring: RingContext,
    polys: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl SquareSystem {
    pub fn new(ring: RingContext, polys: Vec<Polynomial>) -> Result<Self, CertError> {
        let n = ring.arity();
        if polys.len() != n {
            return Err(CertError::NotSquare { polys: polys.len(), vars: n });
        }
        let mut degrees = Vec::with_capacity(n);
        for (index, p) in polys.iter().enumerate() {
            if p.arity() != n {
                return Err(PolyError::ArityMismatch { left: n, right: p.arity() }.into());
            }
            match p.is_homogeneous() {
                None => return Err(CertError::NotHomogeneous { index }),
                Some(Degree::Finite(d)) if d >= 1 => degrees.push(d),
                Some(_) => return Err(CertError::DegreeTooLow { index }),
            }
        }
        Ok(SquareSystem { ring, polys, degrees })
    }

    /// Parses each expression in `ring`.
    pub fn parse(ring: RingContext, exprs: &[&str]) -> Result<Self, CertError> {
        let polys = exprs.iter().map(|e| ring.parse(e)).collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, polys)
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    /// `P_i^k` for all `i`, in `n - 1` chart variables.
    pub fn chart_polys(&self, chart: usize) -> Result<Vec<Polynomial>, PolyError> {
        self.polys.iter().map(|p| p.dehomogenize_chart(chart)).collect()
    }

    /// `Π d_i`, the generic fiber length of a finite map.
    pub fn degree_product(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }
}

#[derive(Debug, Clone)]
pub struct CertifierConfig {
    pub order: OrderKind,
    pub budget: Option<u64>,
}

impl Default for CertifierConfig {
    fn default() -> Self {
        CertifierConfig { order: OrderKind::Grevlex, budget: Some(DEFAULT_BUDGET) }
    }
}

impl CertifierConfig {
    pub(crate) fn groebner(&self, arity: usize) -> GroebnerConfig {
        GroebnerConfig::new(MonomialOrder::of_kind(self.order, arity)).with_budget(self.budget)
    }
}

/// A chart whose dehomogenized ideal is proper, with its reduced basis.
/// `chart` is 0-based.
#[derive(Debug, Clone)]
pub struct RejectionWitness {
    pub chart: usize,
    pub basis: GroebnerBasis,
}

impl RejectionWitness {
    /// Re-derives that the recorded basis is a reduced Gröbner basis of the
    /// chart ideal and that the ideal is proper.
    pub fn audit(&self, sys: &SquareSystem) -> bool {
        let Ok(chart_polys) = sys.chart_polys(self.chart) else {
            return false;
        };
        let basis = &self.basis;
        let same_gens = basis.generators() == chart_polys.as_slice();
        let proper = !basis.basis().is_empty() && basis.basis().iter().all(|g| !g.is_constant());
        let members = chart_polys.iter().all(|p| {
            crate::groebner::reduce(p, basis.basis(), basis.order()).is_ok_and(|nf| nf.remainder.is_zero())
        });
        same_gens && proper && members && basis.is_reduced() && basis.audit_s_polynomials()
    }
}

#[derive(Debug, Clone)]
pub enum Verdict {
    CertifiedFinite,
    RejectedPositiveDimensional(RejectionWitness),
    InputError(String),
}

impl Verdict {
    /// Builds the system and checks it, folding construction errors into
    /// [`Verdict::InputError`].
    pub fn of(ring: RingContext, polys: Vec<Polynomial>, config: &CertifierConfig) -> Result<Verdict, CertError> {
        match SquareSystem::new(ring, polys) {
            Ok(sys) => check_origin_only_zero(&sys, config),
            Err(e) => Ok(Verdict::InputError(e.to_string())),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::CertifiedFinite)
    }
}

/// Runs Buchberger on every chart concurrently; results come back in chart
/// order.
pub(crate) fn chart_bases(sys: &SquareSystem, config: &CertifierConfig, cofactors: bool) -> Result<Vec<GroebnerBasis>, CertError> {
    let n = sys.arity();
    let mut gb_config = config.groebner(n - 1);
    if !cofactors {
        gb_config = gb_config.without_cofactors();
    }
    let results: Vec<Result<GroebnerBasis, CertError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..n)
            .map(|k| {
                let gb_config = &gb_config;
                scope.spawn(move || {
                    let polys = sys.chart_polys(k)?;
                    Ok(buchberger_with(&polys, gb_config)?)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("chart worker panicked")).collect()
    });
    results.into_iter().collect()
}

/// Decides whether the only common zero of the system is the origin.
///
/// A nonzero common zero can be scaled so one coordinate is 1, landing in a
/// chart; conversely a chart zero lifts to a nonzero common zero. So the
/// zero fiber is `{0}` exactly when every chart ideal is the unit ideal.
pub fn check_origin_only_zero(sys: &SquareSystem, config: &CertifierConfig) -> Result<Verdict, CertError> {
    let bases = chart_bases(sys, config, false)?;
    Ok(match bases.into_iter().enumerate().find(|(_, gb)| !gb.is_unit()) {
        None => Verdict::CertifiedFinite,
        Some((chart, basis)) => Verdict::RejectedPositiveDimensional(RejectionWitness { chart, basis }),
    })
}

#[cfg(test)]
mod tests;

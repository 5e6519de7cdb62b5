//! Exact scalar arithmetic and sparse multivariate polynomials over the
//! rationals, with the chart (de)homogenization used by the certifier.

mod monomial;
mod polynomial;
pub mod scalar;

use thiserror::Error;

pub use monomial::{Degree, Monomial};
pub use polynomial::Polynomial;
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("index {index} out of range for {arity} variables")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("target degree {target} is below polynomial degree {degree}")]
    TargetTooSmall { target: u32, degree: u32 },
    #[error("invalid scalar {0:?}")]
    BadScalar(String),
    #[error("invalid variable list: {0}")]
    BadVariables(String),
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

/// Ordered, distinct variable names of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(PolyError::BadVariables("a ring needs at least one variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !crate::parse::is_identifier(n) {
                return Err(PolyError::BadVariables(format!("{n:?} is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(PolyError::BadVariables(format!("duplicate variable {n:?}")));
            }
        }
        Ok(RingContext { names })
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Variable names of chart `k`: `t` for a two-variable ring, otherwise
    /// `t1, …` numbered by the surviving coordinates.
    pub fn chart_names(&self, chart: usize) -> Vec<String> {
        let n = self.arity();
        if n == 2 {
            return vec!["t".to_string()];
        }
        (0..n).filter(|&j| j != chart).map(|j| format!("t{}", j + 1)).collect()
    }

    pub fn format(&self, p: &Polynomial) -> String {
        crate::parse::format_polynomial(p, &self.names)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial, PolyError> {
        crate::parse::parse_polynomial(text, &self.names)
    }
}

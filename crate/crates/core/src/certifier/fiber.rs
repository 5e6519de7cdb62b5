use std::fmt;

use crate::groebner::buchberger_with;
use crate::polyring::{PolyError, Polynomial, Scalar};

use super::{CertError, CertifierConfig, SquareSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberLength {
    /// Vector-space dimension of `Q[X] / ⟨P_i - target_i⟩`, counted with
    /// multiplicity; 0 means the fiber is empty.
    Length(usize),
    PositiveDimensional,
}

impl fmt::Display for FiberLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberLength::Length(n) => write!(f, "length {n}"),
            FiberLength::PositiveDimensional => f.write_str("POSITIVE_DIMENSIONAL"),
        }
    }
}

/// Length of the scheme-theoretic fiber `f⁻¹(target)`.
pub fn fiber_dimension(sys: &SquareSystem, target: &[Scalar], config: &CertifierConfig) -> Result<FiberLength, CertError> {
    let n = sys.arity();
    if target.len() != n {
        return Err(PolyError::ArityMismatch { left: n, right: target.len() }.into());
    }
    let gens: Vec<Polynomial> = sys
        .polys()
        .iter()
        .zip(target)
        .map(|(p, t)| p - &Polynomial::constant(n, t.clone()))
        .collect();
    let gb_config = config.groebner(n).without_cofactors();
    let gb = buchberger_with(&gens, &gb_config)?;
    Ok(match gb.quotient_basis() {
        Some(qb) => FiberLength::Length(qb.len()),
        None => FiberLength::PositiveDimensional,
    })
}

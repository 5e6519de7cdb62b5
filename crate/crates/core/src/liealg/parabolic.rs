use num_traits::Zero;

use crate::linalg::{same_span, span_rank, Matrix};
use crate::polyring::Scalar;

use super::{AlgebraKind, LieAlgebraSpec, LieError};

/// Standard maximal parabolic of `sl_n` with diagonal blocks `(a, n - a)`:
/// block upper triangular matrices. Membership of a basis element is decided
/// from its realizing matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParabolicSpec {
    n: usize,
    a: usize,
}

impl ParabolicSpec {
    pub fn new(n: usize, a: usize) -> Result<Self, LieError> {
        if n < 2 || a == 0 || a >= n {
            return Err(LieError::BadParabolic(format!("block sizes ({a}, {}) do not split n = {n}", n as i64 - a as i64)));
        }
        Ok(ParabolicSpec { n, a })
    }

    /// The upper Borel of `sl2`.
    pub fn borel_sl2() -> Self {
        ParabolicSpec { n: 2, a: 1 }
    }

    /// Every standard maximal parabolic of `sl_n`.
    pub fn all(n: usize) -> Vec<Self> {
        (1..n).map(|a| ParabolicSpec { n, a }).collect()
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.a, self.n - self.a)
    }

    pub fn codim(&self) -> usize {
        self.a * (self.n - self.a)
    }

    fn check_algebra(&self, g: &LieAlgebraSpec) -> Result<(), LieError> {
        if g.kind() == AlgebraKind::Sl(self.n) {
            Ok(())
        } else {
            Err(LieError::BadParabolic(format!("parabolic of sl{} used with {}", self.n, g.name())))
        }
    }

    fn classify(&self, g: &LieAlgebraSpec, keep: impl Fn(usize, usize) -> bool) -> Result<Vec<usize>, LieError> {
        self.check_algebra(g)?;
        let n = self.n;
        Ok((0..g.dim())
            .filter(|&i| {
                let m = &g.basis_matrices()[i];
                (0..n).all(|r| (0..n).all(|c| m[(r, c)].is_zero() || keep(r, c)))
            })
            .collect())
    }

    /// Basis indices spanning `𝔭` (zero lower-left block).
    pub fn parabolic_indices(&self, g: &LieAlgebraSpec) -> Result<Vec<usize>, LieError> {
        let a = self.a;
        self.classify(g, |r, c| !(r >= a && c < a))
    }

    /// Basis indices spanning the nilradical (upper-right block only).
    pub fn nilradical_indices(&self, g: &LieAlgebraSpec) -> Result<Vec<usize>, LieError> {
        let a = self.a;
        self.classify(g, |r, c| r < a && c >= a)
    }

    /// Basis indices spanning a complement of `𝔭` (lower-left block only).
    pub fn complement_indices(&self, g: &LieAlgebraSpec) -> Result<Vec<usize>, LieError> {
        let a = self.a;
        self.classify(g, |r, c| r >= a && c < a)
    }

    /// Whether `𝔭` is closed under the bracket.
    pub fn is_subalgebra(&self, g: &LieAlgebraSpec) -> Result<bool, LieError> {
        let p = self.parabolic_indices(g)?;
        let outside: Vec<usize> = (0..g.dim()).filter(|i| !p.contains(i)).collect();
        for &i in &p {
            for &j in &p {
                let br = g.bracket(&g.basis_vector(i), &g.basis_vector(j))?;
                if outside.iter().any(|&o| !br[o].is_zero()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `𝔭^⊥ = {y : B(y, 𝔭) = 0}`, after checking it has dimension
/// `dim 𝔤 - dim 𝔭` and equals the nilradical.
pub fn parabolic_perp(g: &LieAlgebraSpec, p: &ParabolicSpec) -> Result<Vec<Vec<Scalar>>, LieError> {
    let pidx = p.parabolic_indices(g)?;
    let killing = g.killing_form();
    let rows: Vec<Vec<Scalar>> = pidx.iter().map(|&i| (0..g.dim()).map(|j| killing[(i, j)].clone()).collect()).collect();
    let perp = Matrix::from_rows(rows).nullspace();
    let expected = g.dim() - pidx.len();
    if perp.len() != expected {
        return Err(LieError::ParabolicMismatch(format!("perp has dimension {}, expected {expected}", perp.len())));
    }
    let nil: Vec<Vec<Scalar>> = p.nilradical_indices(g)?.iter().map(|&i| g.basis_vector(i)).collect();
    if !same_span(&perp, &nil) {
        return Err(LieError::ParabolicMismatch("perp differs from the nilradical".into()));
    }
    Ok(perp)
}

/// Whether the Killing pairing between `𝔤/𝔭` (represented by the
/// lower-left complement) and `candidate` is a perfect pairing.
pub fn pairing_nondegenerate(g: &LieAlgebraSpec, p: &ParabolicSpec, candidate: &[Vec<Scalar>]) -> Result<bool, LieError> {
    let comp = p.complement_indices(g)?;
    if candidate.len() != comp.len() || span_rank(candidate) != candidate.len() {
        return Ok(false);
    }
    let killing = g.killing_form();
    let mut pairing = Matrix::zeros(comp.len(), candidate.len());
    for (r, &i) in comp.iter().enumerate() {
        for (c, v) in candidate.iter().enumerate() {
            if v.len() != g.dim() {
                return Err(LieError::DimensionMismatch { expected: g.dim(), got: v.len() });
            }
            pairing[(r, c)] = (0..g.dim()).map(|j| &killing[(i, j)] * &v[j]).sum();
        }
    }
    Ok(!pairing.determinant().is_zero())
}

/// `𝔤/𝔭 × 𝔭^⊥ → Q` is nondegenerate, exhibiting `𝔭^⊥ ≅ (𝔤/𝔭)^*`.
pub fn isotropy_duality_check(g: &LieAlgebraSpec, p: &ParabolicSpec) -> Result<bool, LieError> {
    let perp = parabolic_perp(g, p)?;
    pairing_nondegenerate(g, p, &perp)
}

//! Small semisimple Lie algebras given by exact structure constants.
//!
//! Each shipped algebra is built from a matrix realization: the structure
//! constants are read off by solving `[b_i, b_j] = Σ_m c_ij^m b_m` exactly,
//! then audited (antisymmetry, Jacobi) before use.
//!
//! Coordinates of an element are a plain slice, of [`Scalar`]s for a point or
//! of [`Polynomial`]s for a symbolic point.

mod algebras;
mod audit;
mod parabolic;

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::corpus::SplitMix64;
use crate::linalg::Matrix;
use crate::polyring::{scalar, Polynomial, RingContext, Scalar};

pub use audit::{audit_suite, stable_ratio, AuditLine, AuditOptions};
pub use parabolic::{isotropy_duality_check, pairing_nondegenerate, parabolic_perp, ParabolicSpec};

/// Route B evaluates the symbolic trace invariants directly up to this
/// dimension; beyond it the polynomials are too large to expand and the
/// route specializes `Tr(ad(x)^k)` at the point instead.
pub const SYMBOLIC_ROUTE_MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unknown algebra {0:?} (known: sl2, sl3, sl4, so4, sp4)")]
    UnknownAlgebra(String),
    #[error("nilpotency routes disagree: ad-power says {route_a}, trace invariants say {route_b}")]
    RouteDisagreement { route_a: bool, route_b: bool },
    #[error("matrix is not in the span of the basis")]
    NotInAlgebra,
    #[error("bad parabolic: {0}")]
    BadParabolic(String),
    #[error("parabolic check failed: {0}")]
    ParabolicMismatch(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `sl_n`, traceless `n × n` matrices.
    Sl(usize),
    /// `so_4` preserving `[[0, I], [I, 0]]`.
    So4,
    /// `sp_4` preserving `[[0, I], [-I, 0]]`.
    Sp4,
}

/// Polynomial-entry matrix, row-major.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

#[derive(Debug)]
pub struct LieAlgebraSpec {
    name: String,
    kind: AlgebraKind,
    labels: Vec<String>,
    basis: Vec<Matrix>,
    /// `structure[i][j][m] = c_ij^m`
    structure: Vec<Vec<Vec<Scalar>>>,
    /// Indices spanning a nilpotent subalgebra, used to build nilpotents.
    positive: Vec<usize>,
    /// Matrix entries on which the basis is invertible, with the inverse.
    coord_rows: Vec<(usize, usize)>,
    coord_inverse: Matrix,
    trace_cache: OnceLock<Vec<Polynomial>>,
}

impl LieAlgebraSpec {
    /// `sl2`, `sl3`, `sl4`, `so4` or `sp4`.
    pub fn by_name(name: &str) -> Result<Self, LieError> {
        match name {
            "sl2" => Ok(Self::sl(2)),
            "sl3" => Ok(Self::sl(3)),
            "sl4" => Ok(Self::sl(4)),
            "so4" => Ok(Self::so4()),
            "sp4" => Ok(Self::sp4()),
            _ => Err(LieError::UnknownAlgebra(name.to_string())),
        }
    }

    pub fn names() -> &'static [&'static str] {
        &["sl2", "sl3", "sl4", "so4", "sp4"]
    }

    /// Basis `h_1 … h_{n-1}` (`h_i = E_ii - E_{i+1,i+1}`) then `E_ij`,
    /// `i ≠ j`, row-major. For `sl2` this is `(h, e, f)`, so coordinates
    /// `(a, b, c)` are the matrix `[[a, b], [c, -a]]`.
    ///
    /// # Panics
    /// Unless `2 ≤ n ≤ 4`.
    pub fn sl(n: usize) -> Self {
        assert!((2..=4).contains(&n), "sl_n is shipped for n = 2, 3, 4");
        algebras::sl(n)
    }

    pub fn so4() -> Self {
        algebras::so4()
    }

    pub fn sp4() -> Self {
        algebras::sp4()
    }

    fn from_realization(name: String, kind: AlgebraKind, labels: Vec<String>, basis: Vec<Matrix>, positive: Vec<usize>) -> Self {
        let size = basis[0].rows();
        let dim = basis.len();
        // rows of the (size² × dim) matrix whose columns are the flattened basis
        let flat = Matrix::from_columns(&basis.iter().map(|b| b.entries().to_vec()).collect::<Vec<_>>(), size * size);
        let (_, pivots) = flat.transpose().rref();
        assert_eq!(pivots.len(), dim, "basis of {name} is not linearly independent");
        let coord_rows: Vec<(usize, usize)> = pivots.iter().map(|&p| (p / size, p % size)).collect();
        let square = Matrix::from_rows(pivots.iter().map(|&p| (0..dim).map(|j| flat[(p, j)].clone()).collect()).collect());
        let coord_inverse = square.inverse().expect("pivot rows are independent");
        let mut spec = LieAlgebraSpec {
            name,
            kind,
            labels,
            basis,
            structure: Vec::new(),
            positive,
            coord_rows,
            coord_inverse,
            trace_cache: OnceLock::new(),
        };
        let structure = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let (bi, bj) = (&spec.basis[i], &spec.basis[j]);
                        let br = &(bi * bj) - &(bj * bi);
                        spec.coordinates(&br).expect("realization is closed under bracket")
                    })
                    .collect()
            })
            .collect();
        spec.structure = structure;
        spec
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Size of the realizing matrices.
    pub fn matrix_size(&self) -> usize {
        self.basis[0].rows()
    }

    pub fn basis_matrices(&self) -> &[Matrix] {
        &self.basis
    }

    /// `c_ij^m` for all `m`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i][j]
    }

    pub fn positive_indices(&self) -> &[usize] {
        &self.positive
    }

    /// Ring whose variables are the coordinates, named by the basis labels.
    pub fn coordinate_ring(&self) -> RingContext {
        RingContext::new(self.labels.iter().map(String::as_str)).expect("labels are identifiers")
    }

    fn check_len(&self, len: usize) -> Result<(), LieError> {
        if len == self.dim() {
            Ok(())
        } else {
            Err(LieError::DimensionMismatch { expected: self.dim(), got: len })
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    /// The matrix `Σ x_i b_i`.
    pub fn realize(&self, x: &[Scalar]) -> Result<Matrix, LieError> {
        self.check_len(x.len())?;
        let n = self.matrix_size();
        let mut m = Matrix::zeros(n, n);
        for (xi, b) in x.iter().zip(&self.basis) {
            if !xi.is_zero() {
                m = &m + &b.scale(xi);
            }
        }
        Ok(m)
    }

    /// Symbolic realization with polynomial entries.
    pub fn realize_symbolic(&self, x: &[Polynomial]) -> Result<PolyMatrix, LieError> {
        self.check_len(x.len())?;
        let n = self.matrix_size();
        let arity = x.first().map_or(0, Polynomial::arity);
        let mut m = vec![vec![Polynomial::zero(arity); n]; n];
        for (xi, b) in x.iter().zip(&self.basis) {
            for (r, row) in m.iter_mut().enumerate() {
                for (c, entry) in row.iter_mut().enumerate() {
                    let v = &b[(r, c)];
                    if !v.is_zero() {
                        *entry = &*entry + &xi.scale(v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Coordinates of a matrix in the basis, if it lies in the algebra.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let n = self.matrix_size();
        if m.rows() != n || m.cols() != n {
            return None;
        }
        let rhs: Vec<Scalar> = self.coord_rows.iter().map(|&(r, c)| m[(r, c)].clone()).collect();
        let x = self.coord_inverse.mul_vec(&rhs);
        (self.realize(&x).ok()? == *m).then_some(x)
    }

    /// `[x, y]` in coordinates.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let f = xi * yj;
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    if !c.is_zero() {
                        *o += &f * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ad(x)`: column `j` is the coordinate vector of `[x, b_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix, LieError> {
        self.check_len(x.len())?;
        let dim = self.dim();
        let mut m = Matrix::zeros(dim, dim);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, column) in self.structure[i].iter().enumerate() {
                for (row, c) in column.iter().enumerate() {
                    if !c.is_zero() {
                        m[(row, j)] += xi * c;
                    }
                }
            }
        }
        Ok(m)
    }

    /// `ad(x)` for symbolic coordinates.
    pub fn ad_matrix_symbolic(&self, x: &[Polynomial]) -> Result<PolyMatrix, LieError> {
        self.check_len(x.len())?;
        let dim = self.dim();
        let arity = x.first().map_or(0, Polynomial::arity);
        let mut m = vec![vec![Polynomial::zero(arity); dim]; dim];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, column) in self.structure[i].iter().enumerate() {
                for (row, c) in column.iter().enumerate() {
                    if !c.is_zero() {
                        m[row][j] = &m[row][j] + &xi.scale(c);
                    }
                }
            }
        }
        Ok(m)
    }

    /// The generic element `Σ X_i b_i` in the coordinate ring.
    pub fn generic_element(&self) -> Vec<Polynomial> {
        (0..self.dim()).map(|i| Polynomial::var(self.dim(), i)).collect()
    }

    /// `B_ij = Tr(ad b_i · ad b_j)`.
    pub fn killing_form(&self) -> Matrix {
        let dim = self.dim();
        let ads: Vec<Matrix> = (0..dim).map(|i| self.ad_matrix(&self.basis_vector(i)).unwrap()).collect();
        let mut b = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                b[(i, j)] = (&ads[i] * &ads[j]).trace();
            }
        }
        b
    }

    /// `B(x, y)` in coordinates.
    pub fn killing(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar, LieError> {
        Ok((&self.ad_matrix(x)? * &self.ad_matrix(y)?).trace())
    }

    /// The polynomial `x ↦ Tr(ad(x)^k)` in the coordinates.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn trace_invariant(&self, k: u32) -> Polynomial {
        assert!(k >= 1, "trace invariants start at k = 1");
        if let Some(cache) = self.trace_cache.get() {
            if let Some(p) = cache.get(k as usize - 1) {
                return p.clone();
            }
        }
        trace_powers(&self.ad_matrix_symbolic(&self.generic_element()).unwrap(), k)
            .pop()
            .unwrap()
    }

    /// `trace_invariant(k)` for `k = 1..=dim`, computed once and cached.
    /// `None` above [`SYMBOLIC_ROUTE_MAX_DIM`].
    pub fn trace_invariants(&self) -> Option<&[Polynomial]> {
        if self.dim() > SYMBOLIC_ROUTE_MAX_DIM {
            return None;
        }
        Some(self.trace_cache.get_or_init(|| {
            trace_powers(&self.ad_matrix_symbolic(&self.generic_element()).unwrap(), self.dim() as u32)
        }))
    }

    /// Characteristic-polynomial invariants `(-1)^i Tr(Λ^i x)` of the
    /// realizing matrix for `i = 2..=size`, as polynomials in the
    /// coordinates. The `i = 1` coefficient vanishes on trace-free matrices
    /// and is dropped.
    pub fn char_poly_invariants(&self) -> Vec<Polynomial> {
        let m = self.realize_symbolic(&self.generic_element()).unwrap();
        let coeffs = char_poly_coefficients(&m);
        debug_assert!(coeffs[0].is_zero(), "realization should be trace-free");
        coeffs[1..].to_vec()
    }

    /// Route A: `ad(x)^dim = 0`.
    pub fn nilpotent_by_ad_power(&self, x: &[Scalar]) -> Result<bool, LieError> {
        Ok(self.ad_matrix(x)?.pow(self.dim() as u32).is_zero())
    }

    /// Route B: every trace invariant `k = 1..=dim` vanishes at `x`.
    pub fn nilpotent_by_traces(&self, x: &[Scalar]) -> Result<bool, LieError> {
        self.check_len(x.len())?;
        if let Some(invariants) = self.trace_invariants() {
            for p in invariants {
                if !p.evaluate(x).expect("arity matches dim").is_zero() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let ad = self.ad_matrix(x)?;
        let mut power = ad.clone();
        for _ in 0..self.dim() {
            if !power.trace().is_zero() {
                return Ok(false);
            }
            power = &power * &ad;
        }
        Ok(true)
    }

    /// Route A's verdict, after checking that route B agrees.
    pub fn is_nilpotent(&self, x: &[Scalar]) -> Result<bool, LieError> {
        let (a, b) = self.nilpotency_routes(x)?;
        if a != b {
            return Err(LieError::RouteDisagreement { route_a: a, route_b: b });
        }
        Ok(a)
    }

    pub fn nilpotency_routes(&self, x: &[Scalar]) -> Result<(bool, bool), LieError> {
        Ok((self.nilpotent_by_ad_power(x)?, self.nilpotent_by_traces(x)?))
    }

    /// Integer coordinates drawn uniformly from `[-bound, bound]`.
    pub fn random_element(&self, rng: &mut SplitMix64, bound: i64) -> Vec<Scalar> {
        (0..self.dim()).map(|_| scalar::int(rng.range_i64(-bound, bound))).collect()
    }

    /// A random element of the positive nilpotent subalgebra, conjugated by
    /// a product of `exp(r·b)` over square-zero basis elements `b`.
    pub fn random_nilpotent(&self, rng: &mut SplitMix64) -> Vec<Scalar> {
        let mut x = vec![Scalar::zero(); self.dim()];
        for &i in &self.positive {
            x[i] = scalar::int(rng.range_i64(-3, 3));
        }
        let n = self.realize(&x).unwrap();
        let size = self.matrix_size();
        let unipotent: Vec<usize> = (0..self.dim()).filter(|&i| (&self.basis[i] * &self.basis[i]).is_zero()).collect();
        let mut g = Matrix::identity(size);
        let mut g_inv = Matrix::identity(size);
        for _ in 0..6 {
            let b = &self.basis[unipotent[rng.below(unipotent.len() as u64) as usize]];
            let r = scalar::int(rng.range_i64(-2, 2));
            g = &g * &(&Matrix::identity(size) + &b.scale(&r));
            g_inv = &(&Matrix::identity(size) - &b.scale(&r)) * &g_inv;
        }
        debug_assert_eq!(&g * &g_inv, Matrix::identity(size));
        let conj = &(&g * &n) * &g_inv;
        self.coordinates(&conj).expect("conjugation preserves the algebra")
    }
}

/// `[Tr(m), Tr(m^2), …, Tr(m^k)]` for a square polynomial matrix.
pub fn trace_powers(m: &PolyMatrix, k: u32) -> Vec<Polynomial> {
    let dim = m.len();
    let arity = m.first().and_then(|r| r.first()).map_or(0, Polynomial::arity);
    let mut traces = vec![Polynomial::zero(arity); k as usize];
    // Tr(m^s) = Σ_i (m^s e_i)_i, iterating column vectors to keep memory small.
    for i in 0..dim {
        let mut v: Vec<Polynomial> = (0..dim).map(|r| m[r][i].clone()).collect();
        for (s, trace) in traces.iter_mut().enumerate() {
            if s > 0 {
                v = poly_mat_vec(m, &v);
            }
            *trace = &*trace + &v[i];
        }
    }
    traces
}

fn poly_mat_vec(m: &PolyMatrix, v: &[Polynomial]) -> Vec<Polynomial> {
    let arity = v.first().map_or(0, Polynomial::arity);
    m.iter()
        .map(|row| {
            let mut acc = Polynomial::zero(arity);
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
        .collect()
}

pub fn poly_mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let cols = b.first().map_or(0, Vec::len);
    let arity = a.first().and_then(|r| r.first()).map_or(0, Polynomial::arity);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Polynomial::zero(arity);
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(x * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Faddeev–LeVerrier: for `det(tI - m) = t^n + c_1 t^{n-1} + … + c_n`
/// returns `[c_1, …, c_n]`, where `c_i = (-1)^i Tr(Λ^i m)`.
pub fn char_poly_coefficients(m: &PolyMatrix) -> Vec<Polynomial> {
    let n = m.len();
    let arity = m.first().and_then(|r| r.first()).map_or(0, Polynomial::arity);
    let identity: PolyMatrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Polynomial::one(arity) } else { Polynomial::zero(arity) }).collect())
        .collect();
    let mut coeffs = Vec::with_capacity(n);
    // M_1 = I; c_k = -Tr(m M_k) / k; M_{k+1} = m M_k + c_k I
    let mut mk = identity.clone();
    for k in 1..=n {
        let am = poly_mat_mul(m, &mk);
        let tr = (0..n).fold(Polynomial::zero(arity), |acc, i| &acc + &am[i][i]);
        let c = tr.scale(&-scalar::frac(1, k as i64));
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] = &row[i] + &c;
        }
        coeffs.push(c);
    }
    coeffs
}

/// `φ = [[0, ν], [0, 0]]`.
pub fn nilpotent_from_flag(nu: &Scalar) -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    m[(0, 1)] = nu.clone();
    m
}

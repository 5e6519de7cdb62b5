use crate::linalg::Matrix;
use crate::polyring::scalar;

use super::{AlgebraKind, LieAlgebraSpec};

pub(super) fn sl(n: usize) -> LieAlgebraSpec {
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n - 1 {
        labels.push(if n == 2 { "h".to_string() } else { format!("h{}", i + 1) });
        basis.push(&Matrix::unit(n, i, i) - &Matrix::unit(n, i + 1, i + 1));
    }
    let mut positive = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if i < j {
                positive.push(basis.len());
            }
            labels.push(match (n, i < j) {
                (2, true) => "e".to_string(),
                (2, false) => "f".to_string(),
                _ => format!("e{}{}", i + 1, j + 1),
            });
            basis.push(Matrix::unit(n, i, j));
        }
    }
    LieAlgebraSpec::from_realization(format!("sl{n}"), AlgebraKind::Sl(n), labels, basis, positive)
}

/// `[[a, b], [c, d]]` from 2×2 blocks.
fn blocks(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = a[(i, j)].clone();
            m[(i, j + 2)] = b[(i, j)].clone();
            m[(i + 2, j)] = c[(i, j)].clone();
            m[(i + 2, j + 2)] = d[(i, j)].clone();
        }
    }
    m
}

/// Block form `[[A, B], [C, -Aᵀ]]` shared by the split `so4` and `sp4`;
/// `off_diagonal` lists the allowed `B` (and `C`) blocks.
fn split_form(name: &str, kind: AlgebraKind, off_diagonal: &[(&str, Matrix)]) -> LieAlgebraSpec {
    let z = Matrix::zeros(2, 2);
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    let mut positive = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let a = Matrix::unit(2, i, j);
            if i < j {
                positive.push(basis.len());
            }
            labels.push(format!("a{}{}", i + 1, j + 1));
            basis.push(blocks(&a, &z, &z, &a.transpose().scale(&scalar::int(-1))));
        }
    }
    for (suffix, blk) in off_diagonal {
        positive.push(basis.len());
        labels.push(format!("b{suffix}"));
        basis.push(blocks(&z, blk, &z, &z));
    }
    for (suffix, blk) in off_diagonal {
        labels.push(format!("c{suffix}"));
        basis.push(blocks(&z, &z, blk, &z));
    }
    LieAlgebraSpec::from_realization(name.to_string(), kind, labels, basis, positive)
}

pub(super) fn so4() -> LieAlgebraSpec {
    let anti = &Matrix::unit(2, 0, 1) - &Matrix::unit(2, 1, 0);
    split_form("so4", AlgebraKind::So4, &[("12", anti)])
}

pub(super) fn sp4() -> LieAlgebraSpec {
    let sym = &Matrix::unit(2, 0, 1) + &Matrix::unit(2, 1, 0);
    split_form(
        "sp4",
        AlgebraKind::Sp4,
        &[("11", Matrix::unit(2, 0, 0)), ("12", sym), ("22", Matrix::unit(2, 1, 1))],
    )
}

/// The bilinear form preserved by the realization, if any.
pub(super) fn preserved_form(kind: AlgebraKind) -> Option<Matrix> {
    let i = Matrix::identity(2);
    let z = Matrix::zeros(2, 2);
    match kind {
        AlgebraKind::Sl(_) => None,
        AlgebraKind::So4 => Some(blocks(&z, &i, &i, &z)),
        AlgebraKind::Sp4 => Some(blocks(&z, &i, &i.scale(&scalar::int(-1)), &z)),
    }
}

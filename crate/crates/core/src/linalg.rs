//! Dense complex/real matrix kernels shared by the matrix-group layer:
//! matrix exponential, eigendecomposition of diagonalizable matrices, and
//! numeric rank/kernel helpers.
//!
//! Everything is built on `nalgebra`; the eigendecomposition composes
//! nalgebra's complex Schur form with triangular back-substitution for the
//! eigenvectors.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;
pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}×{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is numerically singular")]
    Singular,
    #[error("Schur iteration failed to converge")]
    SchurFailed,
    #[error("matrix norm {norm:.3e} too large for the exponential")]
    Overflow { norm: f64 },
}

pub fn frobenius_norm(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn one_norm(m: &CMatrix) -> f64 {
    (0..m.ncols())
        .map(|j| m.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

/// ‖AB − BA‖_F, the commutation defect of a pair.
pub fn commutator_norm(a: &CMatrix, b: &CMatrix) -> f64 {
    frobenius_norm(&(a * b - b * a))
}

pub fn inverse(a: &CMatrix) -> Result<CMatrix, LinalgError> {
    a.clone().try_inverse().ok_or(LinalgError::Singular)
}

/// Integer power with inverse support; `a` must be invertible for k < 0.
pub fn matrix_power(a: &CMatrix, k: i64) -> Result<CMatrix, LinalgError> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(LinalgError::NotSquare {
            rows: n,
            cols: a.ncols(),
        });
    }
    let base = if k < 0 { inverse(a)? } else { a.clone() };
    let mut out = identity(n);
    for _ in 0..k.unsigned_abs() {
        out = &out * &base;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// matrix exponential, scaling-and-squaring with Padé(13)
// ---------------------------------------------------------------------------

// Padé(13) coefficients from Higham, "The Scaling and Squaring Method for
// the Matrix Exponential Revisited".
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];
const THETA13: f64 = 5.371920351148152;

/// exp(B) by scaling-and-squaring with a diagonal Padé(13) approximant.
pub fn matrix_exp(b: &CMatrix) -> Result<CMatrix, LinalgError> {
    let n = b.nrows();
    if n != b.ncols() {
        return Err(LinalgError::NotSquare {
            rows: n,
            cols: b.ncols(),
        });
    }
    let norm = one_norm(b);
    if !norm.is_finite() || norm > 700.0 {
        return Err(LinalgError::Overflow { norm });
    }
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = Complex64::new((0.5f64).powi(squarings as i32), 0.0);
    let a = b * scale;

    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let eye = identity(n);

    let c = |i: usize| Complex64::new(PADE13[i], 0.0);
    let u_inner = &a6 * c(13) + &a4 * c(11) + &a2 * c(9);
    let u = &a * (&a6 * u_inner + &a6 * c(7) + &a4 * c(5) + &a2 * c(3) + &eye * c(1));
    let v_inner = &a6 * c(12) + &a4 * c(10) + &a2 * c(8);
    let v = &a6 * v_inner + &a6 * c(6) + &a4 * c(4) + &a2 * c(2) + &eye * c(0);

    let denom = &v - &u;
    let numer = &v + &u;
    let mut result = denom
        .lu()
        .solve(&numer)
        .ok_or(LinalgError::Singular)?;
    for _ in 0..squarings {
        result = &result * &result;
    }
    Ok(result)
}

// ---------------------------------------------------------------------------
// eigendecomposition of (numerically) diagonalizable complex matrices
// ---------------------------------------------------------------------------

/// Eigendecomposition A = S · diag(values) · S⁻¹ with unit eigenvector
/// columns. `vector_condition` is cond₂(S), the witness for numerical
/// diagonalizability.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<Complex64>,
    pub vectors: CMatrix,
    pub vector_condition: f64,
}

pub fn eigen_decompose(a: &CMatrix) -> Result<EigenDecomposition, LinalgError> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(LinalgError::NotSquare {
            rows: n,
            cols: a.ncols(),
        });
    }
    if n == 0 {
        return Ok(EigenDecomposition {
            values: Vec::new(),
            vectors: CMatrix::zeros(0, 0),
            vector_condition: 1.0,
        });
    }
    let schur = a
        .clone()
        .try_schur(f64::EPSILON, 100_000)
        .ok_or(LinalgError::SchurFailed)?;
    let (q, t) = schur.unpack();
    let t_scale = frobenius_norm(&t).max(1.0);
    let guard = f64::EPSILON * t_scale;
    let mut vectors = CMatrix::zeros(n, n);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let lambda = t[(i, i)];
        values.push(lambda);
        // back-substitute (T − λI) y = 0 with y[i] = 1
        let mut y = vec![Complex64::new(0.0, 0.0); n];
        y[i] = Complex64::new(1.0, 0.0);
        for j in (0..i).rev() {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in (j + 1)..=i {
                acc += t[(j, k)] * y[k];
            }
            let mut den = t[(j, j)] - lambda;
            if den.norm() < guard {
                // repeated eigenvalue: nudging the pivot keeps the solve
                // bounded; for diagonalizable input the coupling term is
                // itself O(eps), so the vector stays accurate
                den = Complex64::new(guard, 0.0);
            }
            y[j] = -acc / den;
        }
        let mut v = &q * CVector::from_vec(y);
        let norm = v.norm();
        if norm > 0.0 {
            v /= Complex64::new(norm, 0.0);
        }
        vectors.set_column(i, &v);
    }
    let vector_condition = condition_number(&vectors);
    Ok(EigenDecomposition {
        values,
        vectors,
        vector_condition,
    })
}

/// cond₂ = σ_max / σ_min (∞ when numerically singular).
pub fn condition_number(m: &CMatrix) -> f64 {
    let svd = m.clone().svd(false, false);
    let max = svd.singular_values.max();
    let min = svd.singular_values.min();
    if min <= 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let svd = m.clone().svd(false, false);
    svd.singular_values.iter().copied().collect()
}

// ---------------------------------------------------------------------------
// real numeric rank / kernel / least squares
// ---------------------------------------------------------------------------

/// Numeric rank of a real matrix together with an orthonormal basis of its
/// (right) kernel. Singular values below `rel_tol · σ_max` count as zero.
///
/// The matrix is zero-padded to square so the SVD exposes the full set of
/// right singular vectors.
pub fn numeric_rank_kernel(x: &RMatrix, rel_tol: f64) -> (usize, RMatrix) {
    let (rows, cols) = (x.nrows(), x.ncols());
    let dim = rows.max(cols);
    let mut padded = RMatrix::zeros(dim, cols);
    padded.view_mut((0, 0), (rows, cols)).copy_from(x);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let sigma_max = svd.singular_values.max();
    let threshold = if sigma_max > 0.0 {
        rel_tol * sigma_max
    } else {
        0.0
    };
    let mut kernel_cols = Vec::new();
    let mut rank = 0usize;
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if sigma_max > 0.0 && s > threshold {
            rank += 1;
        } else {
            kernel_cols.push(v_t.row(i).transpose());
        }
    }
    // rows of V^T may be fewer than cols only when cols > dim, impossible here
    let mut kernel = RMatrix::zeros(cols, kernel_cols.len());
    for (j, col) in kernel_cols.iter().enumerate() {
        kernel.set_column(j, col);
    }
    (rank, kernel)
}

/// Least squares min‖Ax − b‖₂ via SVD; returns (solution, residual norm).
pub fn least_squares(a: &RMatrix, b: &RVector, rel_tol: f64) -> (RVector, f64) {
    let svd = a.clone().svd(true, true);
    let x = svd
        .solve(b, rel_tol * svd.singular_values.max().max(f64::MIN_POSITIVE))
        .expect("svd solve is infallible with both factors");
    let residual = (a * &x - b).norm();
    (x, residual)
}

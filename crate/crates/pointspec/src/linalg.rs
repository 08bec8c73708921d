//! Dense Hermitian linear algebra on the small matrices this crate works
//! with (m rarely above 20). Eigendecompositions, null spaces and solves are
//! delegated to nalgebra behind a validated [`HermitianMatrix`] wrapper;
//! eigenvalues are always returned ascending with matching eigenvectors.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

/// Largest entry magnitude; cheap scale estimate for tolerances.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().fold(0.0f64, |acc, v| acc.max(v.norm()))
}

/// A square complex matrix verified (and stored) Hermitian.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    data: CMatrix,
}

impl HermitianMatrix {
    /// Validates hermiticity within `1e-12 * scale` and stores the
    /// symmetrised matrix `(A + A*)/2`.
    pub fn new(a: CMatrix) -> Result<Self> {
        if a.nrows() != a.ncols() {
            return Err(Error::precondition(
                "hermitian_matrix",
                format!("matrix must be square, got {}x{}", a.nrows(), a.ncols()),
            ));
        }
        let scale = max_abs(&a).max(1.0);
        let mut defect = 0.0f64;
        for i in 0..a.nrows() {
            for j in 0..=i {
                defect = defect.max((a[(i, j)] - a[(j, i)].conj()).norm());
            }
        }
        if defect > 1e-12 * scale {
            return Err(Error::precondition(
                "hermitian_matrix",
                format!("matrix is not Hermitian: defect {defect:.3e} exceeds 1e-12 * {scale:.3e}"),
            ));
        }
        let sym = (&a + a.adjoint()).scale(0.5);
        Ok(HermitianMatrix { data: sym })
    }

    pub fn from_real(a: &DMatrix<f64>) -> Result<Self> {
        Self::new(a.map(|v| Complex64::new(v, 0.0)))
    }

    pub fn order(&self) -> usize {
        self.data.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.data
    }
}

/// Ascending eigenvalues and matching orthonormal eigenvectors.
pub fn eigen_hermitian(a: &HermitianMatrix) -> (Vec<f64>, CMatrix) {
    let m = a.order();
    if m == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let se = a.data.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| se.eigenvalues[i].total_cmp(&se.eigenvalues[j]));
    let values: Vec<f64> = order.iter().map(|&i| se.eigenvalues[i]).collect();
    let mut vectors = CMatrix::zeros(m, m);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &se.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(a: &HermitianMatrix) -> f64 {
    let (values, _) = eigen_hermitian(a);
    values.first().copied().unwrap_or(0.0)
}

/// Orthonormal basis of the span of eigenvectors with `|lambda| <= tol`.
pub fn null_space(a: &HermitianMatrix, tol: f64) -> CMatrix {
    let (values, vectors) = eigen_hermitian(a);
    let idx: Vec<usize> = (0..values.len()).filter(|&k| values[k].abs() <= tol).collect();
    let mut basis = CMatrix::zeros(a.order(), idx.len());
    for (dst, &src) in idx.iter().enumerate() {
        basis.set_column(dst, &vectors.column(src));
    }
    basis
}

/// Solve `A x = b` through the eigendecomposition; rejects matrices whose
/// smallest eigenvalue magnitude is below `1e-14 * norm`.
pub fn solve(a: &HermitianMatrix, b: &CVector) -> Result<CVector> {
    if b.len() != a.order() {
        return Err(Error::precondition(
            "solve",
            format!("rhs length {} does not match order {}", b.len(), a.order()),
        ));
    }
    let (values, vectors) = eigen_hermitian(a);
    let norm = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let cutoff = 1e-14 * norm;
    if values.iter().any(|v| v.abs() <= cutoff) || norm == 0.0 {
        return Err(Error::Singular { op: "solve" });
    }
    // x = V diag(1/lambda) V^* b
    let coeffs = vectors.adjoint() * b;
    let scaled = CVector::from_iterator(
        a.order(),
        coeffs.iter().zip(values.iter()).map(|(c, &l)| c / Complex64::new(l, 0.0)),
    );
    Ok(&vectors * scaled)
}

/// Smallest singular value of a general square complex matrix.
pub fn smallest_singular_value(a: &CMatrix) -> f64 {
    let svd = a.clone().svd(false, false);
    svd.singular_values.iter().fold(f64::INFINITY, |acc, &s| acc.min(s))
}

/// Largest singular value (spectral norm) of a general complex matrix.
pub fn largest_singular_value(a: &CMatrix) -> f64 {
    let svd = a.clone().svd(false, false);
    svd.singular_values.iter().fold(0.0f64, |acc, &s| acc.max(s))
}

/// Solve the general square system `A X = B` by LU with partial pivoting.
pub fn solve_general(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let lu = a.clone().lu();
    lu.solve(b).ok_or(Error::Singular { op: "solve_general" })
}

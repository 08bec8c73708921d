//! The Weyl function matrix M(z) of the point-interaction boundary triplet,
//! its boundary values on the positive half-axis, the zero-energy limits, and
//! the gamma-field that evaluates defect elements (and hence eigenfunctions).
//!
//! 3D entries:  M(z) = (i sqrt(z)/(4 pi)) I + (e^{i sqrt(z) r}/(4 pi r))
//! 2D entries:  M(z) = (1/(2 pi))(psi(1) - ln(sqrt(z)/(2i))) I
//!                     + (i/4) H0^(1)(sqrt(z) r)
//! with the square-root branch mapping onto the closed upper half-plane.
//! On the negative half-axis both matrices are real symmetric; the 2D
//! off-diagonal is evaluated through K0 to keep that exact.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::config::{Dimension, PointConfiguration};
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, CMatrix, CVector, HermitianMatrix};
use crate::specfun::{self, SpectralPoint, EULER_GAMMA};

/// The m x m Weyl matrix at a spectral point.
#[derive(Clone, Debug)]
pub struct WeylSample {
    pub point: SpectralPoint,
    pub matrix: CMatrix,
    pub dimension: Dimension,
}

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;
const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

fn diag_3d(w: Complex64) -> Complex64 {
    Complex64::new(0.0, 1.0) * w / FOUR_PI
}

/// ln(w/(2i)) with the argument continued from the upper half-plane; for w
/// in the closed upper half-plane the quotient lies in the closed right
/// half-plane, where the principal logarithm is the right branch.
fn log_w_over_2i(w: Complex64) -> Complex64 {
    let u = Complex64::new(w.im * 0.5, -w.re * 0.5);
    u.ln()
}

fn diag_2d(w: Complex64) -> Complex64 {
    (-Complex64::new(EULER_GAMMA, 0.0) - log_w_over_2i(w)) / TWO_PI
}

/// Interior Weyl matrix M(z), z off the cut [0, inf).
pub fn weyl_matrix(cfg: &PointConfiguration, z: Complex64) -> Result<WeylSample> {
    let point = SpectralPoint::interior(z).map_err(|_| {
        Error::domain(
            "weyl_matrix",
            format!("z = {z} lies on [0, inf); use weyl_boundary for boundary values"),
        )
    })?;
    let m = cfg.len();
    let mut matrix = CMatrix::zeros(m, m);
    if z.im == 0.0 && z.re < 0.0 {
        // negative real axis: exactly real symmetric matrices
        let t = -z.re;
        let s = t.sqrt();
        for k in 0..m {
            matrix[(k, k)] = Complex64::new(
                match cfg.dim() {
                    Dimension::Three => -s / FOUR_PI,
                    Dimension::Two => (-EULER_GAMMA - (0.5 * s).ln()) / TWO_PI,
                },
                0.0,
            );
            for j in 0..k {
                let r = cfg.distance(k, j);
                let v = match cfg.dim() {
                    Dimension::Three => (-s * r).exp() / (FOUR_PI * r),
                    Dimension::Two => specfun::bessel_k0(s * r)? / TWO_PI,
                };
                matrix[(k, j)] = Complex64::new(v, 0.0);
                matrix[(j, k)] = Complex64::new(v, 0.0);
            }
        }
    } else {
        let w = specfun::sqrt_branch(point)?;
        let diag = match cfg.dim() {
            Dimension::Three => diag_3d(w),
            Dimension::Two => diag_2d(w),
        };
        for k in 0..m {
            matrix[(k, k)] = diag;
            for j in 0..k {
                let v = green_off_diagonal(cfg.dim(), w, cfg.distance(k, j))?;
                matrix[(k, j)] = v;
                matrix[(j, k)] = v;
            }
        }
    }
    Ok(WeylSample { point, matrix, dimension: cfg.dim() })
}

/// Off-diagonal Green-function entry at separation r for sqrt-parameter w.
fn green_off_diagonal(dim: Dimension, w: Complex64, r: f64) -> Result<Complex64> {
    match dim {
        Dimension::Three => {
            let iwr = Complex64::new(0.0, 1.0) * w * r;
            Ok(iwr.exp() / (FOUR_PI * r))
        }
        Dimension::Two => {
            let h = specfun::hankel0_first(w * r)?;
            Ok(Complex64::new(0.0, 0.25) * h)
        }
    }
}

/// Boundary values M(x + i0) for x >= 0. In 3D the limit exists for every
/// x >= 0 (x = 0 gives the zero-energy matrix); in 2D the diagonal diverges
/// logarithmically at x = 0.
pub fn weyl_boundary(cfg: &PointConfiguration, x: f64) -> Result<WeylSample> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(
            "weyl_boundary",
            format!("boundary point must satisfy x >= 0, got {x}"),
        ));
    }
    let m = cfg.len();
    if x == 0.0 {
        return match cfg.dim() {
            Dimension::Three => {
                let matrix = weyl_zero(cfg)?.map(|v| Complex64::new(v, 0.0));
                Ok(WeylSample {
                    point: SpectralPoint::boundary(0.0)?,
                    matrix,
                    dimension: cfg.dim(),
                })
            }
            Dimension::Two => Err(Error::domain(
                "weyl_boundary",
                "M(0+i0) diverges logarithmically in dimension 2",
            )),
        };
    }
    let point = SpectralPoint::boundary(x)?;
    let w = specfun::sqrt_branch(point)?; // real sqrt(x)
    let diag = match cfg.dim() {
        Dimension::Three => diag_3d(w),
        Dimension::Two => diag_2d(w),
    };
    let mut matrix = CMatrix::zeros(m, m);
    for k in 0..m {
        matrix[(k, k)] = diag;
        for j in 0..k {
            let v = green_off_diagonal(cfg.dim(), w, cfg.distance(k, j))?;
            matrix[(k, j)] = v;
            matrix[(j, k)] = v;
        }
    }
    Ok(WeylSample { point, matrix, dimension: cfg.dim() })
}

/// Im M(x + i0) for x > 0, assembled from the real closed forms:
/// 3D: (sqrt(x)/(4 pi)) I + sin(sqrt(x) r)/(4 pi r);
/// 2D: (1/4) J0(sqrt(x) r).
pub fn weyl_imag_boundary(cfg: &PointConfiguration, x: f64) -> Result<DMatrix<f64>> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(
            "weyl_imag_boundary",
            format!("requires x > 0, got {x}"),
        ));
    }
    let m = cfg.len();
    let s = x.sqrt();
    let mut im = DMatrix::zeros(m, m);
    for k in 0..m {
        im[(k, k)] = match cfg.dim() {
            Dimension::Three => s / FOUR_PI,
            Dimension::Two => 0.25,
        };
        for j in 0..k {
            let r = cfg.distance(k, j);
            let v = match cfg.dim() {
                Dimension::Three => (s * r).sin() / (FOUR_PI * r),
                Dimension::Two => 0.25 * specfun::bessel_j0(s * r)?,
            };
            im[(k, j)] = v;
            im[(j, k)] = v;
        }
    }
    Ok(im)
}

/// Zero-energy Weyl matrix in 3D: zero diagonal, 1/(4 pi r) off-diagonal.
pub fn weyl_zero(cfg: &PointConfiguration) -> Result<DMatrix<f64>> {
    if cfg.dim() != Dimension::Three {
        return Err(Error::UnsupportedDimension { op: "weyl_zero", dim: cfg.dim().as_u32() });
    }
    let m = cfg.len();
    let mut out = DMatrix::zeros(m, m);
    for k in 0..m {
        for j in 0..k {
            let v = 1.0 / (FOUR_PI * cfg.distance(k, j));
            out[(k, j)] = v;
            out[(j, k)] = v;
        }
    }
    Ok(out)
}

/// Zero-energy Weyl matrix of the shifted triplet in 3D:
/// (1/(4 pi)) ((1 - e^{-r})/r) with unit diagonal; strictly positive
/// definite because (1 - e^{-t})/t is completely monotone.
pub fn tilde_weyl_zero(cfg: &PointConfiguration) -> Result<DMatrix<f64>> {
    if cfg.dim() != Dimension::Three {
        return Err(Error::UnsupportedDimension { op: "tilde_weyl_zero", dim: cfg.dim().as_u32() });
    }
    let m = cfg.len();
    let mut out = DMatrix::zeros(m, m);
    for k in 0..m {
        out[(k, k)] = 1.0 / FOUR_PI;
        for j in 0..k {
            let r = cfg.distance(k, j);
            let v = -(-r).exp_m1() / (FOUR_PI * r); // (1 - e^{-r})/(4 pi r)
            out[(k, j)] = v;
            out[(j, k)] = v;
        }
    }
    Ok(out)
}

/// Evaluates the defect element gamma(z) a at a point of R^d:
/// 3D: sum_j a_j e^{i sqrt(z) r_j}/(4 pi r_j);
/// 2D: sum_j a_j (i/4) H0^(1)(sqrt(z) r_j).
pub fn gamma_field_eval(
    cfg: &PointConfiguration,
    z: Complex64,
    a: &CVector,
    x: &[f64],
) -> Result<Complex64> {
    let m = cfg.len();
    if a.len() != m {
        return Err(Error::precondition(
            "gamma_field_eval",
            format!("coefficient vector must have length {m}"),
        ));
    }
    if x.len() != cfg.dim().as_u32() as usize {
        return Err(Error::precondition(
            "gamma_field_eval",
            format!("evaluation point must have {} coordinates", cfg.dim().as_u32()),
        ));
    }
    let point = SpectralPoint::interior(z)?;
    let negative_axis = z.im == 0.0 && z.re < 0.0;
    let w = specfun::sqrt_branch(point)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for (j, center) in cfg.points().iter().enumerate() {
        let r: f64 = x
            .iter()
            .zip(center.iter())
            .map(|(p, q)| (p - q) * (p - q))
            .sum::<f64>()
            .sqrt();
        let scale: f64 = 1.0 + center.iter().map(|c| c.abs()).fold(0.0, f64::max);
        if r <= 1e-14 * scale {
            return Err(Error::domain(
                "gamma_field_eval",
                format!("evaluation point coincides with center {j}"),
            ));
        }
        if a[j] == Complex64::new(0.0, 0.0) {
            continue;
        }
        let g = match cfg.dim() {
            Dimension::Three => {
                if negative_axis {
                    Complex64::new((-w.im * r).exp() / (FOUR_PI * r), 0.0)
                } else {
                    (Complex64::new(0.0, 1.0) * w * r).exp() / (FOUR_PI * r)
                }
            }
            Dimension::Two => {
                if negative_axis {
                    Complex64::new(specfun::bessel_k0(w.im * r)? / TWO_PI, 0.0)
                } else {
                    Complex64::new(0.0, 0.25) * specfun::hankel0_first(w * r)?
                }
            }
        };
        sum += a[j] * g;
    }
    Ok(sum)
}

/// Sweep of the smallest eigenvalue of Im M(x + i0) over a grid; the
/// positivity certificate data behind the a.c.-spectrum statements.
pub fn imw_min_eig_sweep(cfg: &PointConfiguration, xs: &[f64]) -> Result<Vec<(f64, f64)>> {
    let results = exec::map_indexed(xs.len(), |i| {
        let x = xs[i];
        weyl_imag_boundary(cfg, x).and_then(|im| {
            Ok((x, linalg::min_eigenvalue(&HermitianMatrix::from_real(&im)?)))
        })
    });
    results.into_iter().collect()
}

//! Interaction-center configurations and self-adjoint extension parameters:
//! the E0/E1 interaction matrices, the boundary maps of the triplet, the
//! coefficient matrix of the diagonal point-interaction family, and the
//! parametrization of the non-negative extensions.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector, HermitianMatrix};
use crate::weyl;

/// Ambient dimension of the configuration; only 2 and 3 are meaningful here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Two,
    Three,
}

impl Dimension {
    pub fn from_u32(d: u32) -> Result<Self> {
        match d {
            2 => Ok(Dimension::Two),
            3 => Ok(Dimension::Three),
            other => Err(Error::domain(
                "build_configuration",
                format!("dimension must be 2 or 3, got {other}"),
            )),
        }
    }

    pub fn as_u32(self) -> u32 {
        match self {
            Dimension::Two => 2,
            Dimension::Three => 3,
        }
    }

    /// The constant c in Gamma_0 f = c xi_0: 4 pi in 3D, 2 pi in 2D.
    pub fn boundary_coupling(self) -> f64 {
        match self {
            Dimension::Two => 2.0 * std::f64::consts::PI,
            Dimension::Three => 4.0 * std::f64::consts::PI,
        }
    }
}

/// A validated set of distinct interaction centers with cached distances.
#[derive(Clone, Debug)]
pub struct PointConfiguration {
    dim: Dimension,
    points: Vec<Vec<f64>>,
    distances: DMatrix<f64>,
}

/// Validates and builds a configuration of interaction centers.
pub fn build_configuration(d: u32, points: &[Vec<f64>]) -> Result<PointConfiguration> {
    let dim = Dimension::from_u32(d)?;
    PointConfiguration::new(dim, points.to_vec())
}

impl PointConfiguration {
    pub fn new(dim: Dimension, points: Vec<Vec<f64>>) -> Result<Self> {
        let m = points.len();
        if m < 1 {
            return Err(Error::precondition(
                "build_configuration",
                "at least one interaction center required",
            ));
        }
        let want = dim.as_u32() as usize;
        for (j, p) in points.iter().enumerate() {
            if p.len() != want {
                return Err(Error::precondition(
                    "build_configuration",
                    format!("point {j} has {} coordinates, expected {want}", p.len()),
                ));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::precondition(
                    "build_configuration",
                    format!("point {j} has a non-finite coordinate"),
                ));
            }
        }
        let mut distances = DMatrix::zeros(m, m);
        let mut diameter = 0.0f64;
        for k in 0..m {
            for j in 0..k {
                let r: f64 = points[k]
                    .iter()
                    .zip(points[j].iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                distances[(k, j)] = r;
                distances[(j, k)] = r;
                diameter = diameter.max(r);
            }
        }
        let scale = if diameter > 0.0 { diameter } else { 1.0 };
        for k in 0..m {
            for j in 0..k {
                if distances[(k, j)] <= 1e-12 * scale {
                    return Err(Error::precondition(
                        "build_configuration",
                        format!("points {j} and {k} coincide (distance {:.3e})", distances[(k, j)]),
                    ));
                }
            }
        }
        Ok(PointConfiguration { dim, points, distances })
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn distances(&self) -> &DMatrix<f64> {
        &self.distances
    }

    pub fn distance(&self, k: usize, j: usize) -> f64 {
        self.distances[(k, j)]
    }
}

/// The self-adjoint extension parameter Theta.
#[derive(Clone, Debug)]
pub enum ExtensionParameter {
    /// The diagonal point-interaction family diag(alpha_1, ..., alpha_m).
    Diagonal(Vec<f64>),
    /// A Hermitian coefficient matrix.
    Hermitian(CMatrix),
    /// A self-adjoint relation in compressed form: an orthogonal projector P
    /// and a Hermitian operator part acting on ran P.
    Relation { projector: CMatrix, operator_part: CMatrix },
}

impl ExtensionParameter {
    /// Structural validation against a configuration of m centers.
    pub fn validate(&self, m: usize) -> Result<()> {
        match self {
            ExtensionParameter::Diagonal(alpha) => {
                if alpha.len() != m {
                    return Err(Error::precondition(
                        "extension_parameter",
                        format!("alpha has length {}, expected {m}", alpha.len()),
                    ));
                }
                if alpha.iter().any(|a| !a.is_finite()) {
                    return Err(Error::precondition(
                        "extension_parameter",
                        "alpha entries must be finite",
                    ));
                }
                Ok(())
            }
            ExtensionParameter::Hermitian(b) => {
                if b.nrows() != m || b.ncols() != m {
                    return Err(Error::precondition(
                        "extension_parameter",
                        format!("matrix is {}x{}, expected {m}x{m}", b.nrows(), b.ncols()),
                    ));
                }
                HermitianMatrix::new(b.clone())?;
                Ok(())
            }
            ExtensionParameter::Relation { projector, operator_part } => {
                if projector.nrows() != m || projector.ncols() != m {
                    return Err(Error::precondition(
                        "extension_parameter",
                        format!("projector is {}x{}, expected {m}x{m}", projector.nrows(), projector.ncols()),
                    ));
                }
                if operator_part.nrows() != m || operator_part.ncols() != m {
                    return Err(Error::precondition(
                        "extension_parameter",
                        "operator part must be m x m",
                    ));
                }
                let scale = linalg::max_abs(projector).max(1.0);
                let idem = projector * projector - projector;
                if linalg::max_abs(&idem) > 1e-12 * scale {
                    return Err(Error::precondition(
                        "extension_parameter",
                        "projector is not idempotent",
                    ));
                }
                HermitianMatrix::new(projector.clone())?;
                HermitianMatrix::new(operator_part.clone())?;
                // the operator part must act within ran P
                let b = operator_part;
                let compressed = projector * b * projector;
                if linalg::max_abs(&(&compressed - b)) > 1e-12 * linalg::max_abs(b).max(1.0) {
                    return Err(Error::precondition(
                        "extension_parameter",
                        "operator part does not map ran P into ran P",
                    ));
                }
                Ok(())
            }
        }
    }

    /// The Hermitian matrix of an operator-type parameter, if it is one.
    pub fn operator_matrix(&self, m: usize) -> Option<CMatrix> {
        match self {
            ExtensionParameter::Diagonal(alpha) => {
                let mut b = CMatrix::zeros(m, m);
                for (j, &a) in alpha.iter().enumerate() {
                    b[(j, j)] = Complex64::new(a, 0.0);
                }
                Some(b)
            }
            ExtensionParameter::Hermitian(b) => Some(b.clone()),
            ExtensionParameter::Relation { .. } => None,
        }
    }
}

/// The interaction matrices of the boundary triplet.
#[derive(Clone, Debug)]
pub struct InteractionMatrices {
    pub e0: DMatrix<f64>,
    pub e1: DMatrix<f64>,
}

/// E0 and E1 for the configuration:
/// 3D: E0 = e^{-r}/r off-diagonal with -1 on the diagonal;
/// 2D: E0 = e^{-r} ln r off-diagonal with 0 on the diagonal;
/// both: E1 = e^{-r} with unit diagonal.
pub fn interaction_matrices(cfg: &PointConfiguration) -> InteractionMatrices {
    let m = cfg.len();
    let mut e0 = DMatrix::zeros(m, m);
    let mut e1 = DMatrix::zeros(m, m);
    for k in 0..m {
        e1[(k, k)] = 1.0;
        e0[(k, k)] = match cfg.dim() {
            Dimension::Three => -1.0,
            Dimension::Two => 0.0,
        };
        for j in 0..k {
            let r = cfg.distance(k, j);
            let decay = (-r).exp();
            e1[(k, j)] = decay;
            e1[(j, k)] = decay;
            let v = match cfg.dim() {
                Dimension::Three => decay / r,
                Dimension::Two => decay * r.ln(),
            };
            e0[(k, j)] = v;
            e0[(j, k)] = v;
        }
    }
    InteractionMatrices { e0, e1 }
}

/// Boundary values produced by the maps Gamma_0, Gamma_1.
#[derive(Clone, Debug)]
pub struct BoundaryData {
    pub xi0: CVector,
    pub xi1: CVector,
    pub h0: CVector,
    pub h1: CVector,
}

/// Applies the boundary maps: h0 = c xi0 and h1 = E0 xi0 + E1 xi1 with the
/// dimension-dependent coupling c.
pub fn boundary_maps(cfg: &PointConfiguration, xi0: &CVector, xi1: &CVector) -> Result<BoundaryData> {
    let m = cfg.len();
    if xi0.len() != m || xi1.len() != m {
        return Err(Error::precondition(
            "boundary_maps",
            format!("coefficient vectors must have length {m}"),
        ));
    }
    let em = interaction_matrices(cfg);
    let e0 = em.e0.map(|v| Complex64::new(v, 0.0));
    let e1 = em.e1.map(|v| Complex64::new(v, 0.0));
    let h0 = xi0.scale(cfg.dim().boundary_coupling());
    let h1 = &e0 * xi0 + &e1 * xi1;
    Ok(BoundaryData { xi0: xi0.clone(), xi1: xi1.clone(), h0, h1 })
}

/// Inverts the boundary maps: xi0 = h0/c, xi1 = E1^{-1}(h1 - E0 h0 / c).
pub fn coefficients_from_boundary(
    cfg: &PointConfiguration,
    h0: &CVector,
    h1: &CVector,
) -> Result<(CVector, CVector)> {
    let m = cfg.len();
    if h0.len() != m || h1.len() != m {
        return Err(Error::precondition(
            "coefficients_from_boundary",
            format!("boundary vectors must have length {m}"),
        ));
    }
    let c = cfg.dim().boundary_coupling();
    let em = interaction_matrices(cfg);
    let e0 = em.e0.map(|v| Complex64::new(v, 0.0));
    let e1 = HermitianMatrix::from_real(&em.e1)?;
    let xi0 = h0.unscale(c);
    let rhs = h1 - &e0 * &xi0;
    let xi1 = linalg::solve(&e1, &rhs)?;
    Ok((xi0, xi1))
}

/// Coefficient matrix of the diagonal family: E1^{-1}(c B_alpha - E0).
pub fn aghh_coefficient_matrix(cfg: &PointConfiguration, alpha: &[f64]) -> Result<CMatrix> {
    let m = cfg.len();
    if alpha.len() != m {
        return Err(Error::precondition(
            "aghh_coefficient_matrix",
            format!("alpha has length {}, expected {m}", alpha.len()),
        ));
    }
    let c = cfg.dim().boundary_coupling();
    let em = interaction_matrices(cfg);
    let mut bracket = -em.e0;
    for (j, &a) in alpha.iter().enumerate() {
        bracket[(j, j)] += c * a;
    }
    let e1c = em.e1.map(|v| Complex64::new(v, 0.0));
    let bracket_c = bracket.map(|v| Complex64::new(v, 0.0));
    linalg::solve_general(&e1c, &bracket_c)
}

/// Result of the non-negative-family parametrization check.
#[derive(Clone, Debug)]
pub struct BprimeCheck {
    pub b_prime: CMatrix,
    pub bound_ok: bool,
}

/// 3D parametrization of the non-negative extensions: B' = (1/4pi) B E1,
/// admissible iff 0 < B < 4 pi G^{-1} where G is the Gram-type matrix
/// ((1 - e^{-r})/r) with unit diagonal.
pub fn nonneg_family_bprime(cfg: &PointConfiguration, b: &CMatrix) -> Result<BprimeCheck> {
    if cfg.dim() != Dimension::Three {
        return Err(Error::UnsupportedDimension {
            op: "nonneg_family_bprime",
            dim: cfg.dim().as_u32(),
        });
    }
    let m = cfg.len();
    if b.nrows() != m || b.ncols() != m {
        return Err(Error::precondition(
            "nonneg_family_bprime",
            format!("B is {}x{}, expected {m}x{m}", b.nrows(), b.ncols()),
        ));
    }
    let bh = HermitianMatrix::new(b.clone())?;
    let em = interaction_matrices(cfg);
    let e1c = em.e1.map(|v| Complex64::new(v, 0.0));
    let b_prime = (bh.matrix() * &e1c).unscale(4.0 * std::f64::consts::PI);

    // G = 4 pi * tilde M(0); the admissibility bound is B < 4 pi G^{-1}
    let g = weyl::tilde_weyl_zero(cfg)?.scale(4.0 * std::f64::consts::PI);
    let gc = HermitianMatrix::from_real(&g)?;
    let mut g_inv = CMatrix::zeros(m, m);
    for j in 0..m {
        let mut e = CVector::zeros(m);
        e[j] = Complex64::new(1.0, 0.0);
        let col = linalg::solve(&gc, &e)?;
        g_inv.set_column(j, &col);
    }
    let bound_matrix = g_inv.scale(4.0 * std::f64::consts::PI) - bh.matrix();
    let bound_h = HermitianMatrix::new(bound_matrix.clone()).unwrap_or_else(|_| {
        // symmetrise tiny solve asymmetry
        HermitianMatrix::new((&bound_matrix + bound_matrix.adjoint()).scale(0.5))
            .expect("symmetrised matrix is Hermitian")
    });

    let min_b = linalg::min_eigenvalue(&bh);
    let min_bound = linalg::min_eigenvalue(&bound_h);
    let tol_b = 1e-10 * linalg::max_abs(bh.matrix()).max(1.0);
    let tol_bound = 1e-10 * linalg::max_abs(bound_h.matrix()).max(1.0);
    let bound_ok = min_b > tol_b && min_bound > tol_bound;
    Ok(BprimeCheck { b_prime, bound_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg3(points: &[&[f64]]) -> PointConfiguration {
        build_configuration(3, &points.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn cfg2(points: &[&[f64]]) -> PointConfiguration {
        build_configuration(2, &points.iter().map(|p| p.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn configuration_validation() {
        let cfg = cfg3(&[&[0.0, 0.0, 0.0]]);
        assert_eq!(cfg.len(), 1);
        assert_eq!(cfg.distance(0, 0), 0.0);

        let cfg = cfg3(&[&[0.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]);
        assert_eq!(cfg.distance(0, 1), 1.0);

        assert!(build_configuration(2, &[vec![0.0, 0.0], vec![0.0, 0.0]]).is_err());
        assert!(build_configuration(4, &[vec![0.0; 4]]).is_err());
        assert!(build_configuration(3, &[vec![0.0, 0.0]]).is_err());
        assert!(build_configuration(3, &[]).is_err());
    }

    #[test]
    fn distances_consistent_with_points() {
        let cfg = cfg3(&[&[0.3, -0.2, 1.0], &[1.1, 0.4, -0.5], &[-2.0, 0.0, 0.1]]);
        for k in 0..3 {
            for j in 0..3 {
                let direct: f64 = cfg.points()[k]
                    .iter()
                    .zip(cfg.points()[j].iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                assert!((cfg.distance(k, j) - direct).abs() <= 1e-14);
            }
        }
    }

    #[test]
    fn interaction_matrix_values() {
        let cfg = cfg3(&[&[0.0, 0.0, 0.0]]);
        let em = interaction_matrices(&cfg);
        assert_eq!(em.e0[(0, 0)], -1.0);
        assert_eq!(em.e1[(0, 0)], 1.0);

        let cfg = cfg3(&[&[0.0, 0.0, 0.0], &[1.0, 0.0, 0.0]]);
        let em = interaction_matrices(&cfg);
        let e = (-1.0f64).exp();
        assert!((em.e0[(0, 1)] - e).abs() < 1e-15);
        assert!((em.e1[(0, 1)] - e).abs() < 1e-15);

        // 2D at unit distance: ln 1 = 0 kills the off-diagonal of E0
        let cfg = cfg2(&[&[0.0, 0.0], &[1.0, 0.0]]);
        let em = interaction_matrices(&cfg);
        assert_eq!(em.e0[(0, 0)], 0.0);
        assert_eq!(em.e0[(0, 1)], 0.0);
        assert!((em.e1[(0, 1)] - e).abs() < 1e-15);
    }

    #[test]
    fn e1_matches_exp_decay_gram_and_is_pd() {
        use crate::radialpd::{gram_matrix, PointSet, RadialFunction};
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let f = RadialFunction::exp_decay();
        for _ in 0..200 {
            let d = if rng.gen_bool(0.5) { 2usize } else { 3 };
            let m = rng.gen_range(1..=8usize);
            let pts = loop {
                let cand: Vec<Vec<f64>> =
                    (0..m).map(|_| (0..d).map(|_| rng.gen_range(-2.0..2.0)).collect()).collect();
                let mut ok = true;
                'sep: for i in 0..m {
                    for j in 0..i {
                        let r: f64 = cand[i]
                            .iter()
                            .zip(cand[j].iter())
                            .map(|(a, b)| (a - b) * (a - b))
                            .sum::<f64>()
                            .sqrt();
                        if r < 0.05 {
                            ok = false;
                            break 'sep;
                        }
                    }
                }
                if ok {
                    break cand;
                }
            };
            let cfg = PointConfiguration::new(
                if d == 2 { Dimension::Two } else { Dimension::Three },
                pts.clone(),
            )
            .unwrap();
            let em = interaction_matrices(&cfg);
            if m > 1 {
                let g = gram_matrix(&f, &PointSet::new(d, pts).unwrap());
                assert!((&em.e1 - &g).iter().all(|v| v.abs() < 1e-14));
            }
            let min = linalg::min_eigenvalue(&HermitianMatrix::from_real(&em.e1).unwrap());
            assert!(min > 0.0, "E1 not positive definite (min = {min:e})");
        }
    }

    #[test]
    fn boundary_map_examples() {
        let cfg = cfg3(&[&[0.0, 0.0, 0.0]]);
        let one = CVector::from_vec(vec![c(1.0, 0.0)]);
        let zero = CVector::from_vec(vec![c(0.0, 0.0)]);
        let bd = boundary_maps(&cfg, &one, &zero).unwrap();
        assert!((bd.h0[0] - c(4.0 * PI, 0.0)).norm() < 1e-14);
        assert!((bd.h1[0] - c(-1.0, 0.0)).norm() < 1e-14);

        let bd = boundary_maps(&cfg, &zero, &zero).unwrap();
        assert_eq!(bd.h0[0], c(0.0, 0.0));
        assert_eq!(bd.h1[0], c(0.0, 0.0));

        let cfg2d = cfg2(&[&[0.0, 0.0]]);
        let bd = boundary_maps(&cfg2d, &zero, &one).unwrap();
        assert_eq!(bd.h0[0], c(0.0, 0.0));
        assert!((bd.h1[0] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn boundary_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let cfg = cfg3(&[&[0.0, 0.0, 0.0], &[1.0, 0.2, 0.0], &[0.0, -1.3, 0.7]]);
        for _ in 0..50 {
            let h0 = CVector::from_fn(3, |_, _| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)));
            let h1 = CVector::from_fn(3, |_, _| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)));
            let (xi0, xi1) = coefficients_from_boundary(&cfg, &h0, &h1).unwrap();
            let bd = boundary_maps(&cfg, &xi0, &xi1).unwrap();
            let scale = h0.norm().max(h1.norm()).max(1.0);
            assert!((&bd.h0 - &h0).norm() <= 1e-10 * scale);
            assert!((&bd.h1 - &h1).norm() <= 1e-10 * scale);
        }

        // closed-form single-center cases
        let cfg1 = cfg3(&[&[0.0, 0.0, 0.0]]);
        let (xi0, xi1) = coefficients_from_boundary(
            &cfg1,
            &CVector::from_vec(vec![c(4.0 * PI, 0.0)]),
            &CVector::from_vec(vec![c(-1.0, 0.0)]),
        )
        .unwrap();
        assert!((xi0[0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(xi1[0].norm() < 1e-14);

        let cfg1 = cfg2(&[&[0.0, 0.0]]);
        let (xi0, xi1) = coefficients_from_boundary(
            &cfg1,
            &CVector::from_vec(vec![c(2.0 * PI, 0.0)]),
            &CVector::from_vec(vec![c(1.0, 0.0)]),
        )
        .unwrap();
        assert!((xi0[0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!((xi1[0] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn green_identity_coefficient_form() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for cfg in [
            cfg3(&[&[0.0, 0.0, 0.0], &[0.9, -0.4, 0.3], &[-1.0, 0.5, 0.2]]),
            cfg2(&[&[0.0, 0.0], &[1.4, 0.3]]),
        ] {
            let m = cfg.len();
            let cc = cfg.dim().boundary_coupling();
            let em = interaction_matrices(&cfg);
            let e1 = em.e1.map(|v| Complex64::new(v, 0.0));
            for _ in 0..20 {
                let rv = |rng: &mut rand_chacha::ChaCha8Rng| {
                    CVector::from_fn(m, |_, _| {
                        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                    })
                };
                let (xi0, xi1, eta0, eta1) = (rv(&mut rng), rv(&mut rng), rv(&mut rng), rv(&mut rng));
                let f = boundary_maps(&cfg, &xi0, &xi1).unwrap();
                let g = boundary_maps(&cfg, &eta0, &eta1).unwrap();
                let lhs = f.h1.dotc(&g.h0) - f.h0.dotc(&g.h1);
                let rhs = ((&e1 * &xi1).dotc(&eta0) - xi0.dotc(&(&e1 * &eta1))) * c(cc, 0.0);
                assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()));
            }
        }
    }

    #[test]
    fn aghh_matrix_scalar_cases() {
        let cfg = cfg3(&[&[0.0, 0.0, 0.0]]);
        let b = aghh_coefficient_matrix(&cfg, &[0.0]).unwrap();
        assert!((b[(0, 0)] - c(1.0, 0.0)).norm() < 1e-14);
        let b = aghh_coefficient_matrix(&cfg, &[1.0]).unwrap();
        assert!((b[(0, 0)] - c(4.0 * PI + 1.0, 0.0)).norm() < 1e-13);

        let cfg = cfg2(&[&[0.0, 0.0]]);
        let b = aghh_coefficient_matrix(&cfg, &[0.0]).unwrap();
        assert!(b[(0, 0)].norm() < 1e-14);
    }

    #[test]
    fn extension_parameter_validation() {
        let m = 2usize;
        assert!(ExtensionParameter::Diagonal(vec![1.0, -0.5]).validate(m).is_ok());
        assert!(ExtensionParameter::Diagonal(vec![1.0]).validate(m).is_err());

        let mut b = CMatrix::zeros(2, 2);
        b[(0, 1)] = c(0.0, 1.0);
        b[(1, 0)] = c(0.0, -1.0);
        assert!(ExtensionParameter::Hermitian(b.clone()).validate(m).is_ok());
        b[(1, 0)] = c(0.0, 1.0);
        assert!(ExtensionParameter::Hermitian(b).validate(m).is_err());

        // rank-one projector onto (1,1)/sqrt(2) with operator part 2P
        let mut p = CMatrix::zeros(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                p[(i, j)] = c(0.5, 0.0);
            }
        }
        let theta = ExtensionParameter::Relation {
            projector: p.clone(),
            operator_part: p.scale(2.0),
        };
        assert!(theta.validate(m).is_ok());

        let bad = ExtensionParameter::Relation {
            projector: CMatrix::identity(2, 2).scale(0.5),
            operator_part: CMatrix::zeros(2, 2),
        };
        assert!(bad.validate(m).is_err());
    }

    #[test]
    fn bprime_family_scalar_bounds() {
        let cfg = cfg3(&[&[0.0, 0.0, 0.0]]);
        let b = CMatrix::from_row_slice(1, 1, &[c(2.0 * PI, 0.0)]);
        let r = nonneg_family_bprime(&cfg, &b).unwrap();
        assert!(r.bound_ok);
        assert!((r.b_prime[(0, 0)] - c(0.5, 0.0)).norm() < 1e-14);

        let b = CMatrix::from_row_slice(1, 1, &[c(-1.0, 0.0)]);
        assert!(!nonneg_family_bprime(&cfg, &b).unwrap().bound_ok);

        let b = CMatrix::from_row_slice(1, 1, &[c(8.0 * PI, 0.0)]);
        assert!(!nonneg_family_bprime(&cfg, &b).unwrap().bound_ok);

        let cfg2d = cfg2(&[&[0.0, 0.0]]);
        let b = CMatrix::from_row_slice(1, 1, &[c(1.0, 0.0)]);
        assert!(matches!(
            nonneg_family_bprime(&cfg2d, &b),
            Err(Error::UnsupportedDimension { .. })
        ));
    }
}

//! Radial positive definite functions: Gram matrices on point sets, strict
//! positive definiteness certification, discrete Schoenberg mixtures and the
//! catalog of reference functions with their known class memberships.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{self, HermitianMatrix};
use crate::specfun;

/// Membership of a radial function in the class of positive definite radial
/// functions on R^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NonMember,
    Unknown,
}

#[derive(Clone, Debug)]
enum MembershipRule {
    /// Member of every dimension class (completely monotone functions).
    AllDimensions,
    /// Member exactly for n <= k (the kernels themselves).
    UpTo(u32),
    /// Member for n <= k, undetermined above (synthesized mixtures).
    UpToUnknownAbove(u32),
    /// Member iff delta >= (n+1)/2.
    TruncatedPower(f64),
    /// Member iff |arg z| <= pi/(2n).
    ReExp(f64),
}

impl MembershipRule {
    fn membership(&self, n: u32) -> Membership {
        match *self {
            MembershipRule::AllDimensions => Membership::Member,
            MembershipRule::UpTo(k) => {
                if n <= k {
                    Membership::Member
                } else {
                    Membership::NonMember
                }
            }
            MembershipRule::UpToUnknownAbove(k) => {
                if n <= k {
                    Membership::Member
                } else {
                    Membership::Unknown
                }
            }
            MembershipRule::TruncatedPower(delta) => {
                if delta >= (n as f64 + 1.0) / 2.0 {
                    Membership::Member
                } else {
                    Membership::NonMember
                }
            }
            MembershipRule::ReExp(arg_abs) => {
                if arg_abs <= std::f64::consts::FRAC_PI_2 / n as f64 {
                    Membership::Member
                } else {
                    Membership::NonMember
                }
            }
        }
    }
}

/// A radial function together with its catalog metadata.
#[derive(Clone)]
pub struct RadialFunction {
    id: String,
    evaluator: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    rule: MembershipRule,
    completely_monotone: bool,
    non_constant: bool,
    parameters: Vec<(String, f64)>,
}

impl fmt::Debug for RadialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialFunction")
            .field("id", &self.id)
            .field("completely_monotone", &self.completely_monotone)
            .field("non_constant", &self.non_constant)
            .field("parameters", &self.parameters)
            .finish()
    }
}

impl RadialFunction {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.evaluator)(t)
    }

    pub fn membership(&self, n: u32) -> Membership {
        // completely monotone functions are members in every dimension
        if self.completely_monotone {
            return Membership::Member;
        }
        self.rule.membership(n)
    }

    pub fn completely_monotone(&self) -> bool {
        self.completely_monotone
    }

    pub fn non_constant(&self) -> bool {
        self.non_constant
    }

    pub fn parameters(&self) -> &[(String, f64)] {
        &self.parameters
    }

    /// e^{-t}, completely monotone.
    pub fn exp_decay() -> Self {
        RadialFunction {
            id: "exp_decay".into(),
            evaluator: Arc::new(|t| (-t).exp()),
            rule: MembershipRule::AllDimensions,
            completely_monotone: true,
            non_constant: true,
            parameters: Vec::new(),
        }
    }

    /// (1 - e^{-t})/t with value 1 at t = 0; completely monotone.
    pub fn one_minus_exp_over_t() -> Self {
        RadialFunction {
            id: "one_minus_exp_over_t".into(),
            evaluator: Arc::new(|t| if t == 0.0 { 1.0 } else { -(-t).exp_m1() / t }),
            rule: MembershipRule::AllDimensions,
            completely_monotone: true,
            non_constant: true,
            parameters: Vec::new(),
        }
    }

    /// Omega_k(scale * t); member of the classes up to dimension k only.
    pub fn omega(k: u32, scale: f64) -> Result<Self> {
        if k < 1 {
            return Err(Error::precondition("radial_function", "kernel order must be >= 1"));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::precondition("radial_function", "scale must be > 0"));
        }
        Ok(RadialFunction {
            id: format!("omega_{k}"),
            evaluator: Arc::new(move |t| {
                specfun::omega_kernel(k, scale * t).expect("omega kernel on t >= 0")
            }),
            rule: MembershipRule::UpTo(k),
            completely_monotone: false,
            non_constant: true,
            parameters: vec![("k".into(), k as f64), ("s".into(), scale)],
        })
    }

    /// (1 - t)_+^delta; member iff delta >= (n+1)/2.
    pub fn truncated_power(delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::precondition("radial_function", "delta must be > 0"));
        }
        Ok(RadialFunction {
            id: "truncated_power".into(),
            evaluator: Arc::new(move |t| (1.0 - t).max(0.0).powf(delta)),
            rule: MembershipRule::TruncatedPower(delta),
            completely_monotone: false,
            non_constant: true,
            parameters: vec![("delta".into(), delta)],
        })
    }

    /// Re e^{-z t}; member iff |arg z| <= pi/(2n).
    pub fn re_exp(z: Complex64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() == 0.0 {
            return Err(Error::precondition("radial_function", "z must be finite and nonzero"));
        }
        let arg_abs = z.im.atan2(z.re).abs();
        if arg_abs >= std::f64::consts::FRAC_PI_2 + 1e-12 {
            return Err(Error::precondition(
                "radial_function",
                "Re e^{-zt} is unbounded for |arg z| > pi/2",
            ));
        }
        Ok(RadialFunction {
            id: "re_exp".into(),
            evaluator: Arc::new(move |t| ((-z.re * t).exp()) * (z.im * t).cos()),
            rule: MembershipRule::ReExp(arg_abs),
            completely_monotone: false,
            non_constant: true,
            parameters: vec![("z_re".into(), z.re), ("z_im".into(), z.im)],
        })
    }

    /// The constant function 1; positive definite in every dimension but
    /// never strictly.
    pub fn constant() -> Self {
        RadialFunction {
            id: "constant".into(),
            evaluator: Arc::new(|_| 1.0),
            rule: MembershipRule::AllDimensions,
            completely_monotone: true,
            non_constant: false,
            parameters: Vec::new(),
        }
    }
}

/// Optional parameters for catalog lookups.
#[derive(Clone, Copy, Debug, Default)]
pub struct CatalogParams {
    pub delta: Option<f64>,
    pub k: Option<u32>,
    pub z: Option<Complex64>,
    pub scale: Option<f64>,
}

/// Builds the catalog function named `id` with `params`.
pub fn catalog_function(id: &str, params: &CatalogParams) -> Result<RadialFunction> {
    match id {
        "exp_decay" => Ok(RadialFunction::exp_decay()),
        "one_minus_exp_over_t" => Ok(RadialFunction::one_minus_exp_over_t()),
        "constant" => Ok(RadialFunction::constant()),
        "omega_k" => {
            let k = params.k.ok_or_else(|| {
                Error::precondition("catalog_function", "omega_k requires parameter `k`")
            })?;
            RadialFunction::omega(k, params.scale.unwrap_or(1.0))
        }
        "truncated_power" => {
            let delta = params.delta.ok_or_else(|| {
                Error::precondition("catalog_function", "truncated_power requires `delta`")
            })?;
            RadialFunction::truncated_power(delta)
        }
        "re_exp" => {
            let z = params.z.ok_or_else(|| {
                Error::precondition("catalog_function", "re_exp requires parameter `z`")
            })?;
            RadialFunction::re_exp(z)
        }
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}

/// Membership of the catalog function `id` in the dimension-n class.
pub fn catalog_membership(id: &str, params: &CatalogParams, n: u32) -> Result<Membership> {
    if n < 1 {
        return Err(Error::precondition("catalog_membership", "dimension must be >= 1"));
    }
    Ok(catalog_function(id, params)?.membership(n))
}

/// A finite set of pairwise distinct points in R^n.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    ambient_dimension: usize,
    points: Vec<Vec<f64>>,
}

impl PointSet {
    pub fn new(ambient_dimension: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if ambient_dimension < 1 {
            return Err(Error::precondition("point_set", "ambient dimension must be >= 1"));
        }
        if points.is_empty() {
            return Err(Error::precondition("point_set", "at least one point required"));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != ambient_dimension {
                return Err(Error::precondition(
                    "point_set",
                    format!(
                        "point {i} has {} coordinates, expected {ambient_dimension}",
                        p.len()
                    ),
                ));
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::precondition("point_set", format!("point {i} is not finite")));
            }
        }
        for i in 0..points.len() {
            for j in 0..i {
                if euclidean(&points[i], &points[j]) == 0.0 {
                    return Err(Error::precondition(
                        "point_set",
                        format!("points {j} and {i} coincide"),
                    ));
                }
            }
        }
        Ok(PointSet { ambient_dimension, points })
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient_dimension
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
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Gram matrix (f(|x_k - x_j|))_{k,j}; exactly symmetric with f(0) on the
/// diagonal.
pub fn gram_matrix(f: &RadialFunction, x: &PointSet) -> DMatrix<f64> {
    let m = x.len();
    let f0 = f.eval(0.0);
    let mut g = DMatrix::zeros(m, m);
    for k in 0..m {
        g[(k, k)] = f0;
        for j in 0..k {
            let v = f.eval(euclidean(&x.points[k], &x.points[j]));
            g[(k, j)] = v;
            g[(j, k)] = v;
        }
    }
    g
}

/// Result of a strict positive definiteness test.
#[derive(Clone, Copy, Debug)]
pub struct PdCheck {
    pub is_strictly_pd: bool,
    pub min_eigenvalue: f64,
}

/// Checks a symmetric matrix for strict positive definiteness against `tol`.
pub fn strict_pd_check(g: &DMatrix<f64>, tol: f64) -> Result<PdCheck> {
    if g.nrows() != g.ncols() {
        return Err(Error::precondition("strict_pd_check", "matrix must be square"));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::precondition("strict_pd_check", "tolerance must be > 0"));
    }
    let scale = g.iter().fold(0.0f64, |acc, v| acc.max(v.abs())).max(1.0);
    let mut defect = 0.0f64;
    for i in 0..g.nrows() {
        for j in 0..i {
            defect = defect.max((g[(i, j)] - g[(j, i)]).abs());
        }
    }
    if defect > 1e-12 * scale {
        return Err(Error::precondition(
            "strict_pd_check",
            format!("matrix is not symmetric: defect {defect:.3e}"),
        ));
    }
    let min_eigenvalue = linalg::min_eigenvalue(&HermitianMatrix::from_real(g)?);
    Ok(PdCheck { is_strictly_pd: min_eigenvalue > tol, min_eigenvalue })
}

/// A non-negative discrete measure: atoms (s_i, w_i) with s_i, w_i >= 0.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteMeasure {
    atoms: Vec<(f64, f64)>,
}

impl DiscreteMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        for &(s, w) in &atoms {
            if !(s.is_finite() && s >= 0.0) {
                return Err(Error::precondition(
                    "discrete_measure",
                    format!("atom location must be >= 0, got {s}"),
                ));
            }
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::precondition(
                    "discrete_measure",
                    format!("atom weight must be >= 0, got {w}"),
                ));
            }
        }
        Ok(DiscreteMeasure { atoms })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|&(_, w)| w).sum()
    }
}

/// Discrete Schoenberg synthesis: f(t) = sum_i w_i Omega_n(s_i t).
pub fn schoenberg_synthesize(n: u32, mu: &DiscreteMeasure) -> Result<RadialFunction> {
    if n < 1 {
        return Err(Error::precondition("schoenberg_synthesize", "dimension must be >= 1"));
    }
    let atoms = mu.atoms.clone();
    let non_constant = atoms.iter().any(|&(s, w)| s > 0.0 && w > 0.0);
    let parameters: Vec<(String, f64)> = atoms
        .iter()
        .enumerate()
        .flat_map(|(i, &(s, w))| vec![(format!("s{i}"), s), (format!("w{i}"), w)])
        .collect();
    Ok(RadialFunction {
        id: format!("schoenberg_mixture_{n}"),
        evaluator: Arc::new(move |t| {
            atoms
                .iter()
                .map(|&(s, w)| {
                    w * specfun::omega_kernel(n, s * t).expect("omega kernel on t >= 0")
                })
                .sum()
        }),
        rule: MembershipRule::UpToUnknownAbove(n),
        completely_monotone: false,
        non_constant,
        parameters,
    })
}

/// A witness that f is not positive definite on R^n.
#[derive(Clone, Debug)]
pub struct PdViolation {
    pub point_set: PointSet,
    pub coefficients: DVector<f64>,
    pub quadratic_form: f64,
}

fn trial_seed(seed: u64, trial: usize) -> u64 {
    // splitmix64 step keeps per-trial streams decorrelated and reproducible
    let mut x = seed.wrapping_add((trial as u64 + 1).wrapping_mul(0x9E3779B97F4A7C15));
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

/// One randomized trial of the violation search; deterministic in `seed`.
pub fn pd_violation_trial(f: &RadialFunction, n: usize, seed: u64) -> Option<PdViolation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(2..=8usize);
    let points = loop {
        let candidate: Vec<Vec<f64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(-5.0..5.0)).collect())
            .collect();
        let mut ok = true;
        'sep: for i in 0..m {
            for j in 0..i {
                if euclidean(&candidate[i], &candidate[j]) < 1e-3 {
                    ok = false;
                    break 'sep;
                }
            }
        }
        if ok {
            break candidate;
        }
    };
    let ps = PointSet::new(n, points).expect("separated random points");
    let g = gram_matrix(f, &ps);
    let h = HermitianMatrix::from_real(&g).expect("gram matrices are symmetric");
    let (values, vectors) = linalg::eigen_hermitian(&h);
    if values[0] < -1e-9 {
        let v = vectors.column(0);
        let coefficients = DVector::from_iterator(m, v.iter().map(|c| c.re));
        // eigenvectors of a real symmetric matrix may carry a complex phase;
        // renormalise the real projection
        let norm = coefficients.norm();
        let coefficients = if norm > 0.0 { coefficients / norm } else { coefficients };
        let quadratic_form = (&coefficients.transpose() * &g * &coefficients)[(0, 0)];
        Some(PdViolation { point_set: ps, coefficients, quadratic_form })
    } else {
        None
    }
}

/// Randomized search for a positive definiteness violation of `f` on R^n.
/// Deterministic for a fixed seed; trials are independent and the first
/// witness in trial order is returned. `None` is evidence, not proof, of
/// membership.
pub fn pd_violation_search(
    f: &RadialFunction,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<Option<PdViolation>> {
    if trials < 1 {
        return Err(Error::precondition("pd_violation_search", "trials must be >= 1"));
    }
    if n < 1 {
        return Err(Error::precondition("pd_violation_search", "dimension must be >= 1"));
    }
    Ok(exec::find_first(trials, |i| pd_violation_trial(f, n, trial_seed(seed, i))))
}

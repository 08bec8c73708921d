//! Scalar special functions: the square-root branch on the cut plane, Bessel
//! functions J0/K0, the Hankel function of the first kind on the closed upper
//! half-plane, and the radial kernels used by the Schoenberg representation.
//!
//! Evaluation strategy per region (argument magnitude `a = |z|`):
//!   * `a <= 14` — power series accumulated in double-double arithmetic, which
//!     absorbs the alternating-series cancellation exactly where plain f64
//!     starts losing digits;
//!   * `a >= 14` — Hankel asymptotic expansion at optimal truncation
//!     ("Handbook of Mathematical Functions", eqs. 9.2.5-9.2.10); the first
//!     omitted term at the switch radius is below 1e-12;
//!   * far from the real axis (`Im z > 1`) the combination J0 + iY0 cancels
//!     like exp(2 Im z), so the Hankel function is instead computed through
//!     the modified-Bessel route H0(z) = -(2i/pi) K0(-iz), with K0 evaluated
//!     by its series for |w| <= 2 and by trapezoidal quadrature of
//!     K0(w) = \int_0^inf exp(-w cosh t) dt beyond.

use num_complex::Complex64;

use crate::dd::{Cdd, Dd};
use crate::error::{Error, Result};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577215664901532860606512090082402431;

/// Radius where series evaluation hands over to the asymptotic expansion.
const SERIES_RADIUS: f64 = 14.0;

/// Kernel series hand over later; the double-double series is still exact at
/// t = 40 while the J_nu asymptotics need t well above the order squared.
const KERNEL_SERIES_RADIUS: f64 = 40.0;

/// A spectral-parameter point: either interior (off the cut `[0, inf)`) or a
/// boundary point approached from the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpectralPoint {
    Interior(Complex64),
    BoundaryFromAbove(f64),
}

impl SpectralPoint {
    /// Interior point of the cut plane; rejects values on `[0, inf)`.
    pub fn interior(z: Complex64) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::domain("spectral_point", "non-finite value"));
        }
        if z.im == 0.0 && z.re >= 0.0 {
            return Err(Error::domain(
                "spectral_point",
                format!("z = {} lies on the cut [0, inf)", z.re),
            ));
        }
        // normalise a signed zero so downstream atan2 sees the cut from above
        let im = if z.im == 0.0 { 0.0 } else { z.im };
        Ok(SpectralPoint::Interior(Complex64::new(z.re, im)))
    }

    /// Boundary point `x + i0` with `x >= 0`.
    pub fn boundary(x: f64) -> Result<Self> {
        if !x.is_finite() || x < 0.0 {
            return Err(Error::domain(
                "spectral_point",
                format!("boundary point must be a finite real >= 0, got {x}"),
            ));
        }
        Ok(SpectralPoint::BoundaryFromAbove(x))
    }
}

/// The special constants appearing in the small-argument Hankel expansion.
#[derive(Clone, Copy, Debug)]
pub struct SpecialConstants {
    pub euler_gamma: f64,
    /// psi(1) = Gamma'(1)/Gamma(1) = -gamma, stored as the exact negation.
    pub psi_one: f64,
}

impl SpecialConstants {
    pub fn new() -> Self {
        SpecialConstants { euler_gamma: EULER_GAMMA, psi_one: -EULER_GAMMA }
    }
}

impl Default for SpecialConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// Square root with argument taken in `(0, 2pi)`: maps the cut plane onto the
/// open upper half-plane and boundary points onto the non-negative reals.
pub fn sqrt_branch(p: SpectralPoint) -> Result<Complex64> {
    match p {
        SpectralPoint::BoundaryFromAbove(x) => Ok(Complex64::new(x.sqrt(), 0.0)),
        SpectralPoint::Interior(z) => {
            if z.im == 0.0 {
                // negative real axis: return exactly i*sqrt(t) so that the
                // negative-axis Weyl matrices come out exactly real
                return Ok(Complex64::new(0.0, (-z.re).sqrt()));
            }
            let r = z.norm();
            let mut theta = z.im.atan2(z.re);
            if theta < 0.0 {
                theta += 2.0 * std::f64::consts::PI;
            }
            let half = 0.5 * theta;
            Ok(Complex64::new(half.cos(), half.sin()).scale(r.sqrt()))
        }
    }
}

/// Square root continuous on the closed upper half-plane from the inside
/// (argument in `[0, pi]`); used by the asymptotic prefactor.
fn sqrt_upper(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re < 0.0 {
        return Complex64::new(0.0, (-z.re).sqrt());
    }
    let p = z.sqrt();
    if p.im < 0.0 {
        -p
    } else {
        p
    }
}

/// J0 and the companion sum of the Y0 series, both accumulated in
/// double-double precision:
///   j = sum_k (-1)^k q^k / (k!)^2,
///   s = sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2,  q = (z/2)^2.
fn j0_y0_series_parts(z: Complex64) -> (Cdd, Cdd) {
    let half_re = 0.5 * z.re;
    let half_im = 0.5 * z.im;
    let q = Cdd {
        re: Dd::from_prod(half_re, half_re).sub(Dd::from_prod(half_im, half_im)),
        im: Dd::from_prod(half_re, half_im).mul_f64(2.0),
    };
    let mut term = Cdd::ONE;
    let mut j = Cdd::ONE;
    let mut s = Cdd::ZERO;
    let mut harmonic = Dd::ZERO;
    let mut sign = -1.0f64;
    for k in 1..200usize {
        let kf = k as f64;
        term = term.mul(q).div_f64(kf * kf);
        harmonic = harmonic.add(Dd::ONE.div_f64(kf));
        j = j.add(term.mul_dd(Dd::from_f64(sign)));
        s = s.add(term.mul_dd(harmonic).mul_dd(Dd::from_f64(-sign)));
        if term.mag_hi() < 1e-40 * (1.0 + j.mag_hi()) {
            break;
        }
        sign = -sign;
    }
    (j, s)
}

fn cdd_to_c64(v: Cdd) -> Complex64 {
    Complex64::new(v.re.to_f64(), v.im.to_f64())
}

/// Hankel asymptotic sum P - iQ = sum_k (-i/z)^k c_k with
/// c_k = ((2k-1)!!)^2 / (k! 8^k), truncated at its smallest term.
fn hankel_asymptotic_sum(z: Complex64) -> Complex64 {
    let m_i_over_z = Complex64::new(0.0, -1.0) / z;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut last_mag = 1.0f64;
    for k in 0..40u32 {
        let kf = k as f64;
        let c = (2.0 * kf + 1.0) * (2.0 * kf + 1.0) / (8.0 * (kf + 1.0));
        term *= m_i_over_z * c;
        let mag = term.norm();
        if mag >= last_mag {
            break;
        }
        sum += term;
        last_mag = mag;
        if mag < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

/// H0^(1)(z) for |z| >= SERIES_RADIUS via the asymptotic expansion
/// sqrt(2/(pi z)) e^{i(z - pi/4)} (P - iQ), continued onto the negative real
/// axis from above.
fn hankel_asymptotic(z: Complex64) -> Complex64 {
    let pref = (2.0 / std::f64::consts::PI).sqrt() / sqrt_upper(z);
    let phase = Complex64::new((-z.im).exp(), 0.0)
        * Complex64::new(
            (z.re - std::f64::consts::FRAC_PI_4).cos(),
            (z.re - std::f64::consts::FRAC_PI_4).sin(),
        );
    pref * phase * hankel_asymptotic_sum(z)
}

/// K0 power series for |w| <= 2:
/// K0(w) = -(ln(w/2) + gamma) I0(w) + sum_{k>=1} H_k (w^2/4)^k / (k!)^2.
fn k0_series(w: Complex64) -> Complex64 {
    let q = w * w * 0.25;
    let mut term = Complex64::new(1.0, 0.0);
    let mut i0 = term;
    let mut s = Complex64::new(0.0, 0.0);
    let mut harmonic = 0.0f64;
    for k in 1..60usize {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        s += term * harmonic;
        if term.norm() < 1e-18 * i0.norm() {
            break;
        }
    }
    -((w * 0.5).ln() + EULER_GAMMA) * i0 + s
}

/// K0(w) for Re w > 0 by trapezoidal quadrature of the cosh integral.
/// The step is chosen from the width of the analyticity strip available
/// before the oscillatory factor exp(-i Im(w) cosh t) overwhelms the decay.
fn k0_quadrature(w: Complex64) -> Complex64 {
    let u = w.re;
    let v = w.im.abs();
    let sigma = (0.7 * u.atan2(v)).min(1.0);
    let h = 2.0 * std::f64::consts::PI * sigma / 39.0;
    // truncate once exp(-u cosh T) is 1e-19 of exp(-u)
    let t_max = (1.0 + 44.0 / u).acosh();
    let n = (t_max / h).ceil() as usize;
    let mut sum = 0.5 * (-w).exp();
    for k in 1..=n {
        let t = h * k as f64;
        sum += (-w * t.cosh()).exp();
    }
    sum * h
}

fn k0_complex(w: Complex64) -> Complex64 {
    if w.norm() <= 2.0 {
        k0_series(w)
    } else {
        k0_quadrature(w)
    }
}

/// Hankel function of the first kind and order zero on the closed upper
/// half-plane. Relative accuracy is 1e-10 or better for |z| <= 30.
pub fn hankel0_first(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("hankel0_first", "non-finite argument"));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("hankel0_first", "logarithmic singularity at z = 0"));
    }
    if z.im < 0.0 {
        return Err(Error::domain(
            "hankel0_first",
            format!("argument must satisfy Im z >= 0, got Im z = {}", z.im),
        ));
    }
    let z = Complex64::new(z.re, z.im + 0.0); // -0.0 -> +0.0
    let a = z.norm();
    if a >= SERIES_RADIUS {
        return Ok(hankel_asymptotic(z));
    }
    if z.im > 1.0 && a > 2.0 {
        // rotate to the modified Bessel function of the right half-plane
        let w = Complex64::new(z.im, -z.re); // -i z
        return Ok(Complex64::new(0.0, -2.0 / std::f64::consts::PI) * k0_complex(w));
    }
    let (j, s) = j0_y0_series_parts(z);
    // H = J (1 + (2i/pi)(ln(z/2) + gamma)) + (2i/pi) S
    let two_i_over_pi = Complex64::new(0.0, 2.0 / std::f64::consts::PI);
    let coeff = Complex64::new(1.0, 0.0) + two_i_over_pi * ((z * 0.5).ln() + EULER_GAMMA);
    let jc = cdd_to_c64(j);
    let sc = cdd_to_c64(s);
    Ok(jc * coeff + two_i_over_pi * sc)
}

/// Bessel function J0 on the real line. Absolute error <= 1e-12 for
/// |t| <= 30 and <= 1e-8 up to |t| = 1e4.
pub fn bessel_j0(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::domain("bessel_j0", "non-finite argument"));
    }
    let a = t.abs();
    if a < SERIES_RADIUS {
        // real specialisation of the double-double series
        let q = Dd::from_prod(0.5 * a, 0.5 * a);
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        let mut sign = -1.0f64;
        for k in 1..120usize {
            let kf = k as f64;
            term = term.mul(q).div_f64(kf * kf);
            sum = sum.add(term.mul_f64(sign));
            if term.abs_hi() < 1e-38 {
                break;
            }
            sign = -sign;
        }
        Ok(sum.to_f64())
    } else {
        let s = hankel_asymptotic_sum(Complex64::new(a, 0.0));
        let omega = a - std::f64::consts::FRAC_PI_4;
        // J0 = Re[sqrt(2/(pi a)) e^{i omega} (P - iQ)]
        Ok((2.0 / (std::f64::consts::PI * a)).sqrt() * (s.re * omega.cos() - s.im * omega.sin()))
    }
}

/// Modified Bessel function K0 on `(0, inf)`. Absolute error <= 1e-12 for
/// t <= 30; satisfies the leading asymptotic law for large t.
pub fn bessel_k0(t: f64) -> Result<f64> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::domain(
            "bessel_k0",
            format!("argument must be a finite real > 0, got {t}"),
        ));
    }
    if t <= 2.0 {
        Ok(k0_series(Complex64::new(t, 0.0)).re)
    } else if t < SERIES_RADIUS {
        Ok(k0_quadrature(Complex64::new(t, 0.0)).re)
    } else {
        // asymptotic expansion sqrt(pi/(2t)) e^{-t} sum_k (-1)^k c_k / t^k
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        let mut last = 1.0f64;
        for k in 0..40u32 {
            let kf = k as f64;
            term *= -(2.0 * kf + 1.0) * (2.0 * kf + 1.0) / (8.0 * (kf + 1.0) * t);
            if term.abs() >= last {
                break;
            }
            sum += term;
            last = term.abs();
            if last < 1e-18 {
                break;
            }
        }
        Ok((std::f64::consts::FRAC_PI_2 / t).sqrt() * (-t).exp() * sum)
    }
}

/// Gamma(n/2) for integer n >= 1 by the half-integer recurrence.
fn gamma_half_integer(n: u32) -> f64 {
    let mut x = n as f64 / 2.0;
    let mut g = 1.0f64;
    while x > 1.5 {
        x -= 1.0;
        g *= x;
    }
    if (x - 0.5).abs() < 1e-12 {
        g * std::f64::consts::PI.sqrt()
    } else if (x - 1.5).abs() < 1e-12 {
        g * 0.5 * std::f64::consts::PI.sqrt()
    } else {
        g // x == 1
    }
}

/// Radial Schoenberg kernel: the spherical average of plane waves on R^n,
///   Omega_n(t) = sum_p (-t^2/4)^p Gamma(n/2) / (p! Gamma(n/2 + p)),
/// with Omega_1 = cos, Omega_2 = J0, Omega_3 = sin(t)/t.
pub fn omega_kernel(n: u32, t: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::domain("omega_kernel", format!("order must be >= 1, got {n}")));
    }
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(
            "omega_kernel",
            format!("argument must be a finite real >= 0, got {t}"),
        ));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    let nu = (n as f64 - 2.0) / 2.0;
    let asym_valid = t >= 2.0 * nu * nu;
    if t < KERNEL_SERIES_RADIUS || !asym_valid {
        // term_{p+1} = term_p * (-q) / ((p+1)(n/2 + p)), q = (t/2)^2
        let q = Dd::from_prod(0.5 * t, 0.5 * t);
        let half_n = n as f64 / 2.0;
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for p in 0..300usize {
            let pf = p as f64;
            term = term.mul(q).div_f64((pf + 1.0) * (half_n + pf)).neg();
            sum = sum.add(term);
            if term.abs_hi() < 1e-40 {
                break;
            }
        }
        Ok(sum.to_f64())
    } else {
        // Gamma(n/2) (2/t)^nu J_nu(t) with J_nu from its large-argument form
        let omega = t - nu * std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_4;
        let four_nu_sq = 4.0 * nu * nu;
        let mut a = 1.0f64; // a_k(nu)
        let mut p_sum = 1.0f64;
        let mut q_sum = 0.0f64;
        let mut last = f64::INFINITY;
        for k in 0..40u32 {
            let kf = k as f64;
            a *= (four_nu_sq - (2.0 * kf + 1.0) * (2.0 * kf + 1.0)) / (8.0 * (kf + 1.0));
            let term = a / t.powi(k as i32 + 1);
            if term.abs() >= last {
                break;
            }
            last = term.abs();
            match k % 4 {
                0 => q_sum += term,
                1 => p_sum -= term,
                2 => q_sum -= term,
                _ => p_sum += term,
            }
            if term.abs() < 1e-18 {
                break;
            }
        }
        let j_nu = (2.0 / (std::f64::consts::PI * t)).sqrt()
            * (p_sum * omega.cos() - q_sum * omega.sin());
        Ok(gamma_half_integer(n) * (2.0 / t).powf(nu) * j_nu)
    }
}

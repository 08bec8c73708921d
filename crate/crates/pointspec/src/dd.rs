//! Double-double (compensated) arithmetic used by the series evaluations in
//! `specfun`. A value is represented as an unevaluated sum `hi + lo` with
//! `|lo| <= ulp(hi)/2`, giving roughly 32 significant decimal digits. Only the
//! handful of operations the alternating Bessel/kernel series need are
//! implemented.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    // requires |a| >= |b|
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    Dd {
        hi: s,
        lo: (a - (s - bb)) + (b - bb),
    }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: f64::mul_add(a, b, -p),
    }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two f64 values.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        two_prod(a, b)
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs_hi(self) -> f64 {
        self.hi.abs()
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let t = two_sum(self.lo, other.lo);
        let r = quick_two_sum(s.hi, s.lo + t.hi);
        quick_two_sum(r.hi, r.lo + t.lo)
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = self.hi * other.lo + self.lo * other.hi + p.lo;
        quick_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Dd {
        let p = two_prod(self.hi, b);
        quick_two_sum(p.hi, self.lo * b + p.lo)
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Dd {
        let q = self.hi / b;
        let p = two_prod(q, b);
        let e = ((self.hi - p.hi) - p.lo + self.lo) / b;
        quick_two_sum(q, e)
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };

    #[inline]
    pub fn add(self, other: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(other.re),
            im: self.im.add(other.im),
        }
    }

    #[inline]
    pub fn mul(self, other: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(other.re).sub(self.im.mul(other.im)),
            im: self.re.mul(other.im).add(self.im.mul(other.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, s: Dd) -> Cdd {
        Cdd { re: self.re.mul(s), im: self.im.mul(s) }
    }

    #[inline]
    pub fn div_f64(self, b: f64) -> Cdd {
        Cdd { re: self.re.div_f64(b), im: self.im.div_f64(b) }
    }

    /// Magnitude estimate from the leading components, used for truncation tests.
    #[inline]
    pub fn mag_hi(self) -> f64 {
        self.re.hi.abs() + self.im.hi.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_carries_low_part() {
        let a = Dd::from_f64(1.0);
        let b = Dd::from_f64(1e-25);
        let s = a.add(b);
        assert_eq!(s.hi, 1.0);
        assert_eq!(s.lo, 1e-25);
        let back = s.sub(Dd::from_f64(1.0));
        assert_eq!(back.to_f64(), 1e-25);
    }

    #[test]
    fn prod_is_exact() {
        let p = Dd::from_prod(1.0 + 2f64.powi(-30), 1.0 - 2f64.powi(-30));
        // (1+e)(1-e) = 1 - e^2 exactly
        let e2 = 2f64.powi(-60);
        assert_eq!(p.to_f64(), 1.0 - e2);
        assert_eq!(p.add(Dd::from_f64(-1.0)).to_f64(), -e2);
    }

    #[test]
    fn div_roundtrips() {
        let x = Dd::from_prod(std::f64::consts::PI, std::f64::consts::E);
        let q = x.div_f64(7.0);
        let back = q.mul_f64(7.0);
        let err = back.sub(x).to_f64().abs();
        assert!(err < 1e-30, "err = {err:e}");
    }

    #[test]
    fn alternating_series_cancellation() {
        // sum_{k} (-20)^k / k! = exp(-20); the naive f64 sum loses ~9 digits
        // to cancellation, double-double keeps full precision.
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        for k in 1..200 {
            term = term.mul_f64(-20.0).div_f64(k as f64);
            sum = sum.add(term);
        }
        let expect = (-20.0f64).exp();
        let rel = (sum.to_f64() - expect).abs() / expect;
        assert!(rel < 1e-13, "rel = {rel:e}");
    }
}

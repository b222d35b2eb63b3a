//! The smoothed kernel and its Laplace transform.
//!
//! The weight is the degree-5 polynomial
//!
//! ```text
//! g(u) = (2 − u)³ (4 + 6u + u²) / 30,   u ∈ [0, 2],
//! ```
//!
//! a convolution square, so its Laplace transform
//! `G(z) = ∫₀² e^{−zu} g(u) du` has nonnegative real part on the closed
//! right half-plane. `G` extends to an entire function; away from the
//! origin it is evaluated by the closed form
//!
//! ```text
//! G(z) = 16/(15z) − 8/(3z³) + 4/z⁴ − 4/z⁶ + 4e^{−2z}(z+1)²/z⁶,
//! ```
//!
//! whose pole terms cancel as z → 0. Below [`SERIES_RADIUS`] the closed
//! form loses digits to that cancellation, so a truncated Taylor series
//! built from the exact rational moments of `g` takes over.
//!
//! The one-parameter family `f_x(u) = x·g(ux)` with transform
//! `F_x(z) = G(z/x)` is exposed through [`KernelScale`].

use std::sync::LazyLock;

pub use num_complex::Complex64;

use crate::{Error, Result};

/// Evaluations switch from the closed form to the Taylor series when
/// `|z|` drops below this radius.
pub const SERIES_RADIUS: f64 = 0.5;

/// Taylor terms used below [`SERIES_RADIUS`]; the tail there is below
/// 1e-30 relative.
pub const SERIES_TERMS: usize = 30;

/// `g(0) = 16/15`, the maximum of the weight.
pub const WEIGHT_AT_ZERO: f64 = 16.0 / 15.0;

/// `G(0) = 8/9`, the total mass of the weight.
pub const MASS: f64 = 8.0 / 9.0;

/// The smoothing weight `g(u) = (2−u)³(4+6u+u²)/30` on `[0, 2]`, extended
/// by zero outside its support.
pub fn smoothing_weight(u: f64) -> f64 {
    if !(0.0..=2.0).contains(&u) {
        return 0.0;
    }
    let s = 2.0 - u;
    s * s * s * (4.0 + 6.0 * u + u * u) / 30.0
}

/// Exact rational moment `m_n = ∫₀² uⁿ g(u) du`, reduced in `i128`
/// arithmetic before the single conversion to `f64`.
///
/// Expanding `30·g(u) = 32 − 40u² + 20u³ − u⁵` and integrating gives
/// `m_n = 2ⁿ/30 · (64/(n+1) − 320/(n+3) + 320/(n+4) − 64/(n+6))`.
fn moment(n: u32) -> f64 {
    let n = n as i128;
    let num = 64 * (n + 3) * (n + 4) * (n + 6) - 320 * (n + 1) * (n + 4) * (n + 6)
        + 320 * (n + 1) * (n + 3) * (n + 6)
        - 64 * (n + 1) * (n + 3) * (n + 4);
    let den = 30 * (n + 1) * (n + 3) * (n + 4) * (n + 6);
    let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
    2f64.powi(n as i32) * ((num / g) as f64) / ((den / g) as f64)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

static MOMENTS: LazyLock<[f64; SERIES_TERMS + 5]> = LazyLock::new(|| {
    let mut m = [0.0; SERIES_TERMS + 5];
    for (n, slot) in m.iter_mut().enumerate() {
        *slot = moment(n as u32);
    }
    m
});

/// Neumaier-compensated accumulator for the real and imaginary parts of
/// the closed-form pole terms. The terms reach O(1/|z|⁶) magnitude near
/// the series switch while the sum stays O(1), so plain summation would
/// waste the digits the switch radius was chosen to protect.
#[derive(Default)]
struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
}

impl CompensatedSum {
    fn add(&mut self, v: Complex64) {
        let t = self.re + v.re;
        self.re_c += if self.re.abs() >= v.re.abs() {
            (self.re - t) + v.re
        } else {
            (v.re - t) + self.re
        };
        self.re = t;

        let t = self.im + v.im;
        self.im_c += if self.im.abs() >= v.im.abs() {
            (self.im - t) + v.im
        } else {
            (v.im - t) + self.im
        };
        self.im = t;
    }

    fn total(&self) -> Complex64 {
        Complex64::new(self.re + self.re_c, self.im + self.im_c)
    }
}

fn laplace_closed(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let z3 = z2 * z;
    let z4 = z2 * z2;
    let z6 = z3 * z3;
    let zp1 = z + 1.0;
    let mut sum = CompensatedSum::default();
    sum.add(16.0 / (15.0 * z));
    sum.add(-8.0 / (3.0 * z3));
    sum.add(4.0 / z4);
    sum.add(-4.0 / z6);
    sum.add(4.0 * (-2.0 * z).exp() * zp1 * zp1 / z6);
    sum.total()
}

fn laplace_deriv_closed(z: Complex64) -> Complex64 {
    let z2 = z * z;
    let z3 = z2 * z;
    let z4 = z2 * z2;
    let z5 = z4 * z;
    let z7 = z5 * z2;
    let mut sum = CompensatedSum::default();
    sum.add(-16.0 / (15.0 * z2));
    sum.add(8.0 / z4);
    sum.add(-16.0 / z5);
    sum.add(24.0 / z7);
    sum.add(-8.0 * (-2.0 * z).exp() / z4 * (1.0 + 4.0 / z + 6.0 / z2 + 3.0 / z3));
    sum.total()
}

/// Truncated Taylor evaluation `G(z) ≈ Σ_{n<terms} (−z)ⁿ m_n / n!`.
///
/// Exposed so the closed form can be cross-checked against it in the
/// switch band; [`laplace`] calls it with [`SERIES_TERMS`].
pub fn laplace_series(z: Complex64, terms: usize) -> Complex64 {
    let m = &*MOMENTS;
    let terms = terms.min(m.len());
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0); // (−z)ⁿ / n!
    for (n, &mn) in m.iter().enumerate().take(terms) {
        acc += pow * mn;
        pow *= -z / (n as f64 + 1.0);
    }
    acc
}

fn laplace_deriv_series(z: Complex64, terms: usize) -> Complex64 {
    // G'(z) = −Σ (−z)ⁿ m_{n+1} / n!
    let m = &*MOMENTS;
    let terms = terms.min(m.len() - 1);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for n in 0..terms {
        acc += pow * m[n + 1];
        pow *= -z / (n as f64 + 1.0);
    }
    -acc
}

/// The Laplace transform `G(z) = ∫₀² e^{−zu} g(u) du`.
pub fn laplace(z: Complex64) -> Complex64 {
    if z.norm_sqr() < SERIES_RADIUS * SERIES_RADIUS {
        laplace_series(z, SERIES_TERMS)
    } else {
        laplace_closed(z)
    }
}

/// `G` restricted to the real axis, where it is real, positive and
/// strictly decreasing.
pub fn laplace_real(x: f64) -> f64 {
    laplace(Complex64::new(x, 0.0)).re
}

/// The derivative `G′(z) = −∫₀² u e^{−zu} g(u) du`.
pub fn laplace_deriv(z: Complex64) -> Complex64 {
    if z.norm_sqr() < SERIES_RADIUS * SERIES_RADIUS {
        laplace_deriv_series(z, SERIES_TERMS)
    } else {
        laplace_deriv_closed(z)
    }
}

/// `G′` on the real axis (real-valued, always negative).
pub fn laplace_deriv_real(x: f64) -> f64 {
    laplace_deriv(Complex64::new(x, 0.0)).re
}

/// Most negative real argument the closed form can take before
/// `e^{−2z}` overflows.
const REAL_ARG_MIN: f64 = -350.0;

/// Solves `G(u) = target` on the reals by bracket expansion and
/// bisection. `G` is strictly decreasing, so the solution is unique.
pub fn invert_laplace_real(target: f64) -> Result<f64> {
    if !(target > 0.0) || !target.is_finite() {
        return Err(Error::Domain(format!(
            "invert_laplace_real: target must be a positive finite real, got {target}"
        )));
    }
    let mut lo = -8.0;
    let mut hi = 8.0;
    while laplace_real(lo) < target {
        lo *= 2.0;
        if lo < REAL_ARG_MIN {
            return Err(Error::Domain(format!(
                "invert_laplace_real: target {target} above the reachable range"
            )));
        }
    }
    while laplace_real(hi) > target {
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::Domain(format!(
                "invert_laplace_real: target {target} below the reachable range"
            )));
        }
    }
    // G(lo) >= target >= G(hi); narrow well past 1e-10 or to float exhaustion.
    for _ in 0..1200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 1e-13 * (1.0 + mid.abs()) {
            break;
        }
        if laplace_real(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The density weight `B_{φ,ω}(y) = (φ/2)(1−e^{−2ωy})/y + ((1−e^{−ωy})/y)²`,
/// strictly decreasing in `y`; tends to `φω + ω²` as `y → 0⁺`.
pub fn b_weight(phi: f64, omega: f64, y: f64) -> Result<f64> {
    if phi < 0.0 || !(omega > 0.0) || !(y > 0.0) {
        return Err(Error::Domain(format!(
            "b_weight: need phi >= 0, omega > 0, y > 0 (got {phi}, {omega}, {y})"
        )));
    }
    let a = -(-2.0 * omega * y).exp_m1() / y;
    let b = -(-omega * y).exp_m1() / y;
    Ok(phi / 2.0 * a + b * b)
}

/// Scale parameter of the kernel family `f_x(u) = x·g(ux)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelScale {
    x: f64,
}

impl KernelScale {
    pub fn new(x: f64) -> Result<Self> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("kernel scale must be positive, got {x}")));
        }
        Ok(Self { x })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Support endpoint `t₀ = 2/x`; the weight vanishes at and beyond it.
    pub fn support_end(&self) -> f64 {
        2.0 / self.x
    }

    /// `f_x(u) = x·g(ux)`.
    pub fn weight(&self, u: f64) -> f64 {
        self.x * smoothing_weight(u * self.x)
    }

    /// `f_x(0) = 16x/15`.
    pub fn weight_at_zero(&self) -> f64 {
        WEIGHT_AT_ZERO * self.x
    }

    /// `F_x(z) = G(z/x)`.
    pub fn laplace(&self, z: Complex64) -> Complex64 {
        laplace(z / self.x)
    }

    /// `F_x` on the real axis.
    pub fn laplace_real(&self, t: f64) -> f64 {
        laplace_real(t / self.x)
    }

    /// Solves `F_x(t) = target` for real `t`.
    pub fn invert_laplace_real(&self, target: f64) -> Result<f64> {
        Ok(self.x * invert_laplace_real(target)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn weight_support_and_endpoints() {
        assert_eq!(smoothing_weight(2.0), 0.0);
        assert_eq!(smoothing_weight(2.5), 0.0);
        assert_eq!(smoothing_weight(-0.1), 0.0);
        assert!((smoothing_weight(0.0) - 16.0 / 15.0).abs() < 1e-15);
        // expanded form 30 g(u) = 32 − 40u² + 20u³ − u⁵ at u = 1
        assert!((smoothing_weight(1.0) - 11.0 / 30.0).abs() < 1e-15);
    }

    #[test]
    fn mass_and_first_moment() {
        assert!((moment(0) - 8.0 / 9.0).abs() < 1e-16);
        assert!((moment(1) - 16.0 / 35.0).abs() < 1e-16);
        assert!((laplace_real(0.0) - MASS).abs() < 1e-15);
        assert!((laplace_deriv_real(0.0) + 16.0 / 35.0).abs() < 1e-15);
    }

    #[test]
    fn laplace_reference_points() {
        assert!((laplace_real(-1.0) - 1.6).abs() < 1e-13);
        // frozen 30-digit quadrature references
        assert!((laplace_real(-34.0 / 35.0) - 1.5699193987365468).abs() < 1e-12);
        assert!((laplace_real(0.9014285714285715) - 0.588193736244734).abs() < 1e-13);
        assert!((laplace_real(0.03142857142857143) - 0.8746954055877482).abs() < 1e-13);
        assert!((laplace_real(2.5) - 0.34336833291450445).abs() < 1e-13);
        assert!((laplace_real(13.0) - 0.0809767281033917).abs() < 1e-13);
        assert!((laplace_real(-1.25) - 1.9002159242086628).abs() < 1e-12);
        assert!((laplace_deriv_real(-1.25) + 1.3477894725517134).abs() < 1e-12);

        let z = c(1.0, 4.0);
        let w = laplace(z);
        assert!((w.re - 0.09689948779473759).abs() < 1e-13);
        assert!((w.im + 0.26893338379473863).abs() < 1e-13);
        let z = c(0.2, 0.3); // series branch
        let w = laplace(z);
        assert!((w.re - 0.7909832720440713).abs() < 1e-13);
        assert!((w.im + 0.11647955591029579).abs() < 1e-13);
        let z = c(-1.25, 7.5);
        let w = laplace(z);
        assert!((w.re + 0.038861520297891057).abs() < 1e-13);
        assert!((w.im + 0.14141932996014321).abs() < 1e-13);
    }

    #[test]
    fn series_and_closed_form_agree_in_switch_band() {
        // ±20% band around the switch radius
        for k in 0..200 {
            let r = 0.4 + 0.2 * (k as f64) / 199.0;
            let th = 2.0 * std::f64::consts::PI * (k as f64) / 200.0;
            let z = c(r * th.cos(), r * th.sin());
            let a = laplace_series(z, SERIES_TERMS);
            let b = laplace_closed(z);
            assert!(
                (a - b).norm() <= 1e-11 * b.norm().max(1.0),
                "series/closed mismatch at {z}: {a} vs {b}"
            );
            let da = laplace_deriv_series(z, SERIES_TERMS);
            let db = laplace_deriv_closed(z);
            assert!((da - db).norm() <= 1e-10 * db.norm().max(1.0));
        }
    }

    #[test]
    fn deriv_matches_central_differences() {
        let h = 1e-5;
        for &x in &[-1.25, -0.3, 0.0, 0.7, 2.0, 9.0] {
            let fd = (laplace_real(x + h) - laplace_real(x - h)) / (2.0 * h);
            let d = laplace_deriv_real(x);
            assert!(
                (fd - d).abs() <= 1e-8 * d.abs().max(1.0),
                "finite difference mismatch at {x}: {fd} vs {d}"
            );
        }
    }

    #[test]
    fn monotone_decreasing_and_convex_on_reals() {
        let mut prev_g = f64::INFINITY;
        let mut prev_dg = f64::NEG_INFINITY;
        for k in 0..=1000 {
            let x = -2.0 + 32.0 * (k as f64) / 1000.0;
            let gv = laplace_real(x);
            let dg = laplace_deriv_real(x);
            assert!(gv > 0.0);
            assert!(dg < 0.0);
            assert!(gv < prev_g);
            assert!(dg > prev_dg);
            prev_g = gv;
            prev_dg = dg;
        }
    }

    #[test]
    fn scale_family() {
        for &x in &[0.6, 0.7, 1.58, 1.68] {
            let s = KernelScale::new(x).unwrap();
            assert!((s.weight_at_zero() - 16.0 * x / 15.0).abs() < 1e-15);
            assert!((s.weight(0.0) - 16.0 * x / 15.0).abs() < 1e-15);
            assert!((s.laplace_real(0.0) - MASS).abs() < 1e-15);
            assert!((s.laplace_real(-x) - 1.6).abs() < 1e-13);
            // support_end() * x can land one ulp below 2, so allow the
            // cube of that slack
            assert!(s.weight(s.support_end()) < 1e-40);
            assert_eq!(s.weight(1.01 * s.support_end()), 0.0);
            assert!(s.weight(0.99 * s.support_end()) > 0.0);
        }
        assert!(KernelScale::new(0.0).is_err());
        assert!(KernelScale::new(-1.0).is_err());
    }

    #[test]
    fn inversion_round_trips() {
        for &target in &[8.0 / 9.0, 1.6, 0.71336, 0.01, 5.0, 100.0] {
            let u = invert_laplace_real(target).unwrap();
            assert!(
                (laplace_real(u) - target).abs() <= 1e-9 * target.max(1.0),
                "round trip failed for {target}"
            );
        }
        assert!((invert_laplace_real(8.0 / 9.0).unwrap()).abs() < 1e-9);
        assert!((invert_laplace_real(1.6).unwrap() + 1.0).abs() < 1e-9);
        assert!(invert_laplace_real(0.0).is_err());
        assert!(invert_laplace_real(-3.0).is_err());
        assert!(invert_laplace_real(1e303).is_err());
    }

    #[test]
    fn b_weight_values_and_small_y_limit() {
        let v = b_weight(1.0 / 3.0, 1.0 / 6.0, 1.311).unwrap();
        assert!((v - 0.06742206254423545).abs() < 1e-14);
        // first-order limit φω + ω²
        let (phi, om) = (0.45, 0.39);
        let v = b_weight(phi, om, 1e-9).unwrap();
        assert!((v - (phi * om + om * om)).abs() < 1e-7);
        assert!(b_weight(0.1, 0.0, 1.0).is_err());
        assert!(b_weight(0.1, 0.5, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn conjugate_symmetry(re in -20.0f64..20.0, im in -40.0f64..40.0) {
            let z = c(re, im);
            let a = laplace(z.conj());
            let b = laplace(z).conj();
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }

        #[test]
        fn nonnegative_real_part_on_right_half_plane(re in 0.0f64..25.0, im in -60.0f64..60.0) {
            let z = c(re, im);
            prop_assert!(laplace(z).re >= -1e-12);
        }

        #[test]
        fn b_weight_decreasing_in_y(phi in 0.0f64..2.0, om in 0.05f64..2.0,
                                    y in 0.05f64..10.0, dy in 0.01f64..5.0) {
            let v1 = b_weight(phi, om, y).unwrap();
            let v2 = b_weight(phi, om, y + dy).unwrap();
            prop_assert!(v2 < v1 + 1e-15);
        }
    }
}

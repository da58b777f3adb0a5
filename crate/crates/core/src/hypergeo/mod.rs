//! Gauss hypergeometric series and the elliptic-integral forms of
//! `₂F₁(1/2, 1/m; 1 + 1/m; z)` for `m ∈ {4, 6}`.

mod quad;

pub use quad::{gauss_legendre, integrate_adaptive};

use num_complex::{Complex, Complex64};
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};
use crate::numeric::{c_from_f64, c_to_f64, cabs, effective_precision, DoubleDouble, Real};

/// Radius of the disc in which the series is summed.
pub const WORKING_RADIUS: f64 = 0.75;

#[derive(Debug, Clone, PartialEq)]
pub struct HpgParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub z: Complex64,
}

impl HpgParams {
    pub fn new(a: Rational, b: Rational, c: Rational, z: Complex64) -> Result<Self> {
        if c.is_integer() && c <= Rational::from_integer(0.into()) {
            return Err(Error::InvalidParams(format!("c = {c} is a non-positive integer")));
        }
        Ok(HpgParams { a, b, c, z })
    }
}

fn series<T: Real>(p: &HpgParams) -> Complex<T> {
    let (a, b, c) = (T::from_rational(&p.a), T::from_rational(&p.b), T::from_rational(&p.c));
    let z: Complex<T> = c_from_f64(p.z);
    let absz = cabs(z).to_f64();
    let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN).abs();
    let (aa, ab, ac) = (f(&p.a), f(&p.b), f(&p.c));
    let target = T::epsilon().to_f64();
    let mut term = Complex::new(T::one(), T::zero());
    let mut sum = term;
    let mut k = 0usize;
    loop {
        let kt = T::from_f64(k as f64);
        let ratio = (a + kt) * (b + kt) / ((c + kt) * (kt + T::one()));
        term = term * z * Complex::new(ratio, T::zero());
        sum = sum + term;
        k += 1;
        if term == Complex::new(T::zero(), T::zero()) {
            break;
        }
        // For n ≥ k > |c| every later ratio is at most ρ, so the tail is below |t_k|·ρ/(1−ρ).
        let kf = k as f64;
        if kf > ac + 1.0 {
            let rho = absz * (kf + aa) / (kf - ac) * ((kf + ab) / (kf + 1.0)).max(1.0);
            if rho < 1.0 {
                let tail = cabs(term).to_f64() * rho / (1.0 - rho);
                if tail <= target * cabs(sum).to_f64().max(1e-300) {
                    break;
                }
            }
        }
        if k > 100_000 {
            break;
        }
    }
    sum
}

/// `₂F₁(a, b; c; z)` by its power series, for `|z| ≤ 0.75`.
pub fn hpg2f1(p: &HpgParams, precision: u32) -> Result<Complex64> {
    if p.z.norm() > WORKING_RADIUS {
        return Err(Error::OutOfDomain(format!("|z| = {} exceeds {WORKING_RADIUS}", p.z.norm())));
    }
    if effective_precision(precision) > f64::MANTISSA_BITS {
        Ok(c_to_f64(series::<DoubleDouble>(p)))
    } else {
        Ok(series::<f64>(p))
    }
}

/// `∫₀¹ ds / √(1 − z·s^m)` with the principal square root, which equals
/// `₂F₁(1/2, 1/m; 1 + 1/m; z)` on the plane cut along `[1, ∞)`.
fn euler_integral(m: i32, z: Complex64) -> Result<Complex64> {
    if z.im.abs() < 1e-12 && z.re >= 1.0 {
        return Err(Error::OutOfDomain(format!("{z} lies on the branch cut [1, ∞)")));
    }
    let f = |s: f64| (Complex64::new(1.0, 0.0) - z * s.powi(m)).sqrt().inv();
    integrate_adaptive(&f, 0.0, 1.0, 1e-14)
}

/// `z^{−1/m}/2 · ∫ dX/√(X³ − X)` (m = 4) or `∫ dX/√(X³ − 1)` (m = 6) from `X = z^{−2/m}` to `∞`,
/// evaluated after `X = 1/t²`, which turns the integrand into `2/√(1 − t^m)` on `[0, z^{1/m}]`.
pub fn elliptic_integral_form(m: u32, z: Complex64) -> Result<Complex64> {
    if !matches!(m, 4 | 6) {
        return Err(Error::InvalidInput(format!("no elliptic integral form for m = {m}")));
    }
    if z.norm() == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if z.im.abs() < 1e-12 && z.re >= 1.0 {
        return Err(Error::OutOfDomain(format!("{z} lies on the branch cut [1, ∞)")));
    }
    let tau = z.powf(1.0 / m as f64);
    let integrand = |s: f64| tau * 2.0 / (Complex64::new(1.0, 0.0) - (tau * s).powi(m as i32)).sqrt();
    let t_integral = integrate_adaptive(&integrand, 0.0, 1.0, 1e-14)?;
    Ok(tau.inv() / 2.0 * t_integral)
}

/// `₂F₁(1/2, 1/4; 5/4; z)` on the principal sheet: the series inside the working disc,
/// the Euler integral elsewhere.
pub fn f_quarter(z: Complex64, precision: u32) -> Result<Complex64> {
    if z.norm() <= WORKING_RADIUS {
        hpg2f1(&HpgParams::new(rat(1, 2), rat(1, 4), rat(5, 4), z)?, precision)
    } else {
        euler_integral(4, z)
    }
}

const A: Complex64 = Complex64::new(1.0, 2.0);

/// `z (z − 1 − 2i)⁴ / ((1 + 2i) z − 1)⁴`, the degree-5 endomorphism in the `z = 1/X²` coordinate.
pub fn degree5_argument(z: Complex64) -> Complex64 {
    z * (z - A).powi(4) / (A * z - 1.0).powi(4)
}

pub fn degree5_prefactor(z: Complex64) -> Complex64 {
    (1.0 - z / A) / (1.0 - A * z)
}

/// Result of checking the degree-5 identity at a set of samples.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub accepted: Vec<(Complex64, f64)>,
    pub rejected: Vec<(Complex64, Error)>,
}

impl IdentityCheck {
    pub fn max_residual(&self) -> f64 {
        self.accepted.iter().map(|(_, r)| *r).fold(0.0, f64::max)
    }
}

/// Whether the image of the segment `[0, z]` under `degree5_argument` meets the cut `[1, ∞)`.
fn crosses_cut(z: Complex64) -> bool {
    let n = 4000;
    let mut prev = Complex64::new(0.0, 0.0);
    for k in 1..=n {
        let w = degree5_argument(z * (k as f64 / n as f64));
        let near = w.re >= 1.0 - 1e-9 && w.im.abs() < 1e-9;
        let crossed = prev.im.signum() != w.im.signum() && (prev.re >= 1.0 || w.re >= 1.0) && prev.im != 0.0;
        if near || crossed {
            return true;
        }
        prev = w;
    }
    false
}

fn degree5_residual(z: Complex64, precision: u32) -> Result<f64> {
    if z.norm() > WORKING_RADIUS {
        return Err(Error::SampleRejected(format!("{z} lies outside the working disc")));
    }
    let w = degree5_argument(z);
    if w.norm() > WORKING_RADIUS && crosses_cut(z) {
        return Err(Error::SampleRejected(format!("continuation to {w} leaves the principal sheet")));
    }
    let lhs = f_quarter(z, precision)?;
    let rhs = degree5_prefactor(z) * f_quarter(w, precision)?;
    Ok((lhs - rhs).norm())
}

/// Residuals of `₂F₁(½,¼;5/4;z) = (1 − z/(1+2i))/(1 − (1+2i)z) · ₂F₁(½,¼;5/4;w(z))`.
pub fn verify_degree5_identity(samples: &[Complex64], precision: u32) -> IdentityCheck {
    let mut check = IdentityCheck { accepted: Vec::new(), rejected: Vec::new() };
    for &z in samples {
        match degree5_residual(z, precision) {
            Ok(r) => check.accepted.push((z, r)),
            Err(e) => check.rejected.push((z, e)),
        }
    }
    check
}

/// Ten fixed samples inside the disc whose transformed arguments stay on the principal sheet.
pub fn default_degree5_samples() -> Vec<Complex64> {
    vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.1, 0.0),
        Complex64::new(0.05, 0.05),
        Complex64::new(0.01, 0.0),
        Complex64::new(-0.02, 0.01),
        Complex64::new(0.005, -0.015),
        Complex64::new(0.03, 0.02),
        Complex64::new(-0.01, -0.02),
        Complex64::new(0.08, 0.01),
        Complex64::new(0.02, -0.005),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn p(a: Rational, b: Rational, c: Rational, z: Complex64) -> HpgParams {
        HpgParams::new(a, b, c, z).unwrap()
    }

    #[test]
    fn value_at_zero() {
        let v = hpg2f1(&p(rat(3, 7), rat(-2, 5), rat(9, 4), Complex64::new(0.0, 0.0)), 128).unwrap();
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn parameter_poles_and_domain() {
        assert!(matches!(
            HpgParams::new(rat(1, 2), rat(1, 2), rat(-2, 1), Complex64::new(0.1, 0.0)),
            Err(Error::InvalidParams(_))
        ));
        let far = p(rat(1, 2), rat(1, 2), rat(1, 1), Complex64::new(0.8, 0.0));
        assert!(matches!(hpg2f1(&far, 53), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn elementary_cases() {
        // ₂F₁(1, 1; 2; z) = −log(1 − z)/z
        let z = Complex64::new(0.4, -0.3);
        let v = hpg2f1(&p(rat(1, 1), rat(1, 1), rat(2, 1), z), 128).unwrap();
        let exact = -(1.0 - z).ln() / z;
        assert!((v - exact).norm() < 1e-14);
        // terminating series
        let v = hpg2f1(&p(rat(-2, 1), rat(1, 1), rat(1, 1), z), 53).unwrap();
        assert!((v - (1.0 - z).powi(2)).norm() < 1e-14);
    }

    #[test]
    fn series_matches_quadrature_examples() {
        let z = Complex64::new(0.25, 0.0);
        let s = hpg2f1(&p(rat(1, 2), rat(1, 4), rat(5, 4), z), 128).unwrap();
        assert!((s - elliptic_integral_form(4, z).unwrap()).norm() < 1e-10);
        let z = Complex64::new(0.3, 0.0);
        let s = hpg2f1(&p(rat(1, 2), rat(1, 6), rat(7, 6), z), 128).unwrap();
        assert!((s - elliptic_integral_form(6, z).unwrap()).norm() < 1e-10);
    }

    #[test]
    fn quadrature_agrees_at_twenty_random_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(415);
        for _ in 0..20 {
            let z = Complex64::new(rng.gen_range(0.05..0.5), 0.0);
            let s = hpg2f1(&p(rat(1, 2), rat(1, 4), rat(5, 4), z), 128).unwrap();
            let q = elliptic_integral_form(4, z).unwrap();
            assert!((s - q).norm() < 1e-9, "z = {z}");
        }
    }

    #[test]
    fn degree5_identity_examples() {
        let check = verify_degree5_identity(&default_degree5_samples(), 128);
        assert!(check.rejected.is_empty(), "{:?}", check.rejected);
        assert_eq!(check.accepted[0].1, 0.0);
        assert!(check.max_residual() < 1e-10, "{check:?}");
    }

    #[test]
    fn degree5_rejections() {
        let check = verify_degree5_identity(&[Complex64::new(0.3, 0.0), Complex64::new(0.9, 0.0)], 53);
        assert!(check.accepted.is_empty());
        assert!(check.rejected.iter().all(|(_, e)| matches!(e, Error::SampleRejected(_))));
    }

    #[test]
    fn first_order_coefficient_of_transformation() {
        // w = (1+2i)⁴ z + O(z²) while the prefactor is 1 + (1+2i − 1/(1+2i)) z + O(z²).
        let z = Complex64::new(1e-9, 0.0);
        let w = degree5_argument(z);
        assert!((w / z - A.powi(4)).norm() < 1e-6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn b_equal_c_is_a_binomial(an in -9i64..9, ad in 1i64..6, bn in 1i64..9, re in -0.5f64..0.5, im in -0.5f64..0.5) {
            let z = Complex64::new(re, im);
            let a = rat(an, ad);
            let v = hpg2f1(&p(a.clone(), rat(bn, 3), rat(bn, 3), z), 128).unwrap();
            let exact = (1.0 - z).powf(-a.to_f64().unwrap());
            prop_assert!((v - exact).norm() < 1e-12 * exact.norm().max(1.0));
        }
    }
}
